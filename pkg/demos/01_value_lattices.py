"""The three value lattices and their order operations.

Values live in one of three concrete lattices: real scalars, fixed-dimension
vectors with the componentwise order, and finitely supported sequences.
Joins and meets are componentwise, the product is componentwise with scalars
broadcasting, and comparisons are partial: two vectors can be incomparable.
"""

from rieszgauge import Scalar, SparseSeq, Vector, leq, mul, zero_like

a = Vector([1.0, 4.0])
b = Vector([3.0, 2.0])
print("a        =", a)
print("b        =", b)
print("a v b    =", a.join(b), "  (componentwise max)")
print("a ^ b    =", a.meet(b), "  (componentwise min)")
print("|a - b|  =", abs(a - b))
print("a <= b ?", leq(a, b), "   b <= a ?", leq(b, a), "  (incomparable)")

# the lattice identity join + meet = sum holds exactly
assert a.join(b) + a.meet(b) == a + b

# finitely supported sequences: zeros are pruned, the implicit zeros take
# part in the order
u3 = SparseSeq({3: 1.0})
print("\nu3           =", u3)
print("u3 - u3      =", u3 - u3, " (support pruned)")
print("u3 v 0       =", u3.join(SparseSeq()))
print("(-u3) v 0    =", (-u3).join(SparseSeq()), " (negative part clipped)")

# scalars broadcast through the product; same-variant products are
# componentwise
print("\n2 * a        =", mul(Scalar(2.0), a))
print("a * b        =", mul(a, b))
print("|a * b|      =", mul(abs(a), abs(b)), " (= |a|*|b| exactly)")
print("zero like u3 =", zero_like(u3))
