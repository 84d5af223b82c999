"""A function with a null Bochner-style integral that no gauge can tame.

Take values in the eventually-zero sequences and let f send 1/n to the n-th
unit sequence and everything else to zero.  The function vanishes almost
everywhere, yet for every gauge one can force a fine partition whose Riemann
sum has a strictly positive coefficient at coordinate n — so the sums' joint
support outgrows every finite set and no common bound exists.  The
certifying integrator therefore refuses the function outright.
"""

from rieszgauge import (BorelSet, CounterexampleC00, Geometric, MeasureSpec,
                        Scalar, counterexample_unboundedness, kh_integrate,
                        standard_probes)
from rieszgauge.errors import NotCertifiable

report = counterexample_unboundedness(10)
print("n  lambda_n       support of the forced Riemann sum")
for entry in report.entries:
    print(f"{entry.n:<2} {entry.lambda_n:<12.6f} {list(entry.support)}")
print("\nevery partition fine:   ", all(e.fine for e in report.entries))
print("every sum dominates u_n:", all(e.dominated for e in report.entries))
print("verdict:", report.verdict)

try:
    kh_integrate(CounterexampleC00(), BorelSet.whole(),
                 MeasureSpec(Scalar(1.0)), Geometric(Scalar(1.0), 0.5, 0.5),
                 standard_probes())
except NotCertifiable as exc:
    print("\nintegrator refuses:", exc)
