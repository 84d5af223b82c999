"""Regulators, envelopes, and certified limits.

A regulator is a nonnegative double sequence, nonincreasing along each row
with rows shrinking to zero.  Convergence claims name a regulator and are
checked probe by probe: the probe picks one column per row, and the envelope
``sup_i a[i][phi(i)]`` is the tolerance the claim must meet from some index
on.  Over the standard probe set the envelopes of a geometric family shrink
to zero, which is what makes certified limits unique.
"""

from rieszgauge import (ConstantMap, Geometric, IdentityMap, Scalar,
                        ShiftedMap, d_limit_check, envelope, fremlin_combine,
                        min_envelope, regulator_entry, standard_probes,
                        zero_like)

reg = Geometric(Scalar(1.0), 0.5, 0.5)   # entries 2^-i * 2^-j
print("entry a[1][1]          =", regulator_entry(reg, 1, 1))
print("envelope at identity   =", envelope(reg, IdentityMap()))
for c in (1, 4, 8, 12):
    print(f"envelope at const:{c:<2}    =", envelope(reg, ConstantMap(c)))

probes = standard_probes()
print("\ntightest envelope over the standard probes:",
      min_envelope(reg, probes))

# certify the limit of 1/n against a row-constant regulator
slow = Geometric(Scalar(1.0), 1.0, 0.5)
seq = [Scalar(1.0 / n) for n in range(1, 101)]
print("\n1/n -> 0 certified?   ", d_limit_check(seq, Scalar(0.0), slow, probes))
print("1/n -> 0.5 certified? ",
      d_limit_check(seq, Scalar(0.5), slow, [ConstantMap(6)]))

# combine a finite family below a bound u: the combination's envelope
# dominates every truncated sum of shifted member envelopes
family = [reg, reg, reg]
u = Scalar(10.0)
combined = fremlin_combine(family, u)
phi = IdentityMap()
partial = zero_like(u)
for k, member in enumerate(family, start=1):
    partial = partial + envelope(member, ShiftedMap(phi, k))
print("\nsum of shifted member envelopes:", u.meet(partial))
print("combined envelope:              ", envelope(combined, phi))
