"""Certified integration of single-valued integrands.

A certificate pins the integral value and, for every probe, a gauge under
which every sampled fine partition keeps its Riemann sum within the probe
envelope.  The gauge comes from the integrand's declared modulus: a Lipschitz
constant scales a constant radius, and jump points become mandatory tags
with a radius sized against the envelope.
"""

from rieszgauge import (BorelSet, Geometric, MeasureSpec, PointwiseScalar,
                        SCALAR_FORMS, Scalar, SimpleIntegrand, envelope,
                        integral_additivity_check, kh_integrate,
                        standard_probes)

spec = MeasureSpec(Scalar(1.0))
reg = Geometric(Scalar(1.0), 0.5, 0.5)
probes = standard_probes()
whole = BorelSet.whole()

linear = PointwiseScalar(SCALAR_FORMS["t"], Scalar(1.0))
cert = kh_integrate(linear, whole, spec, reg, probes)
print("integral of t over [0,1]:", cert.value)
worst = max(r.max_deviation.sup_norm() for r in cert.probe_reports)
tightest = min(envelope(reg, p).sup_norm() for p in probes)
print(f"worst sampled deviation {worst:.2e} vs tightest envelope "
      f"{tightest:.2e}")
report = cert.probe_reports[0]
print("gauge for", report.probe.describe(), "->",
      report.gauge.describe()["radius"])

steps = SimpleIntegrand(((BorelSet.from_pairs([[0.0, 0.5]]), Scalar(2.0)),
                         (BorelSet.from_pairs([[0.5, 1.0]]), Scalar(1.0))))
print("\ntwo-step integrand:", kh_integrate(steps, whole, spec, reg,
                                            probes).value)

half = BorelSet.from_pairs([[0.0, 0.5]])
rest = BorelSet.from_pairs([[0.5, 1.0]])
print("additivity, positivity, linearity all hold:",
      integral_additivity_check(linear, half, rest, spec, reg, probes))

print("\nintegral of t over [0, 0.5]: ",
      kh_integrate(linear, half, spec, reg, probes).value)
print("integral of t over [0.5, 1]: ",
      kh_integrate(linear, rest, spec, reg, probes).value)
