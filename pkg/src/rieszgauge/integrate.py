"""Certifying gauge integration of single-valued integrands.

An integral certificate pins a value ``I`` together with, for every probe, a
gauge under which every sampled fine partition keeps its Riemann sum within
the probe envelope of ``I``.  Certification stress-tests the canonical fine
partition plus seeded random fine refinements; the universal quantifier over
partitions is sampled, never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domain import (BorelSet, Gauge, Interval, MeasureSpec, TaggedPartition,
                     cousin_partition, is_fine, measure, overlap_length,
                     sample_fine_partitions)
from .errors import (EmptyProbeSet, GaugeConstructionFailed, NotCertifiable,
                     NotDisjoint)
from .integrands import (ConstantIntegrand, CounterexampleC00, Integrand,
                         PointwiseScalar, SelectionIntegrand, SimpleIntegrand)
from .regulators import IndexMap, Regulator, envelope, min_envelope
from .values import (ORDER_SLACK, RieszValue, Scalar, SparseSeq,
                     coordinate_min_over_support, leq, mul, zero_like)


def as_borel(E) -> BorelSet:
    if isinstance(E, BorelSet):
        return E
    if isinstance(E, Interval):
        return BorelSet((E,))
    raise ValueError(f"not a set over [0, 1]: {E!r}")


# ---------------------------------------------------------------------------
# Riemann sums and exact values
# ---------------------------------------------------------------------------

def riemann_sum(f: Integrand, part: TaggedPartition, spec: MeasureSpec) -> RieszValue:
    """The tagged sum ``sum_i f(tag_i) * mu(cell_i)``."""
    if isinstance(spec.m0, Scalar) and isinstance(f.zero_value(), Scalar):
        total = 0.0
        for cell, tag in part.items:
            ln = cell.hi - cell.lo
            if ln != 0.0:
                total += f.value_at(tag).value * ln
        return Scalar(total * spec.m0.value)
    total = mul(f.zero_value(), spec.m0)
    for cell, tag in part.items:
        ln = cell.length()
        if ln == 0.0:
            continue
        total = total + mul(f.value_at(tag), spec.of_length(ln))
    return total


def _midpoint_refined(fn, a: float, b: float) -> float:
    """Composite midpoint estimates at three resolutions, extrapolated twice;
    exact for polynomials up to degree five."""
    if b - a <= 0.0:
        return 0.0
    sums = []
    for n in (64, 128, 256):
        h = (b - a) / n
        sums.append(sum(fn(a + (i + 0.5) * h) for i in range(n)) * h)
    r1 = (4.0 * sums[1] - sums[0]) / 3.0
    r2 = (4.0 * sums[2] - sums[1]) / 3.0
    return (16.0 * r2 - r1) / 15.0


def integral_value(f: Integrand, E: BorelSet, spec: MeasureSpec) -> RieszValue:
    """The integral value by the direct route: exact arithmetic for constant
    and simple integrands, refined midpoint sums for scalar formulas, and
    linear decomposition for selection mixes."""
    if isinstance(f, CounterexampleC00):
        raise NotCertifiable(
            "the unit-sequence spike function is not gauge integrable on [0, 1]")
    if isinstance(f, ConstantIntegrand):
        return mul(f.value, measure(spec, E))
    if isinstance(f, SimpleIntegrand):
        total = mul(f.zero_value(), spec.m0)
        for part, v in f.pieces:
            total = total + mul(v, measure(spec, part.intersection(E)))
        return total
    if isinstance(f, PointwiseScalar):
        s = f.coeff * sum(_midpoint_refined(f.form.fn, c.lo, c.hi)
                          for c in E.components)
        return mul(f.direction, spec.m0).scale(s)
    if isinstance(f, SelectionIntegrand):
        total = mul(f.zero_value(), spec.m0)
        rest = E
        for part, lam in f.mix:
            sub = part.intersection(E)
            rest = rest.difference(part)
            if sub.is_empty():
                continue
            total = total + integral_value(f.lower, sub, spec).scale(1.0 - lam)
            total = total + integral_value(f.upper, sub, spec).scale(lam)
        if not rest.is_empty():
            total = total + integral_value(f.lower, rest, spec)
        return total
    raise NotCertifiable(f"unsupported integrand {type(f).__name__}")


# ---------------------------------------------------------------------------
# gauges and certificates
# ---------------------------------------------------------------------------

def certification_gauge(f: Integrand, E: BorelSet, spec: MeasureSpec,
                        env: RieszValue) -> Gauge:
    """A gauge under which every fine partition keeps the Riemann sum within
    ``env`` of the integral.

    For a Lipschitz integrand the radius is the envelope's relevant coordinate
    minimum over (modulus * length * measure scale); jump points get pinned as
    mandatory tags with a radius sized against the envelope as well.
    """
    supb = f.sup_bound()
    active = mul(abs(supb), abs(spec.m0))
    if active.is_zero():
        return Gauge.constant(2.0)
    lam = f.lipschitz()
    if lam is None:
        raise GaugeConstructionFailed(
            "the integrand declares no modulus of integrability")
    env_min = coordinate_min_over_support(env, active)
    length = E.length()
    scale_m = spec.m0.sup_norm()
    interior = 2.0
    if lam > 0.0 and length > 0.0:
        if env_min <= 0.0:
            raise GaugeConstructionFailed(
                "a zero envelope cannot certify a varying integrand")
        interior = env_min / (lam * length * scale_m)
    boundaries = tuple(p for p in f.boundary_points()
                       if E.contains_point(p, 1e-12))
    if boundaries:
        if env_min <= 0.0:
            raise GaugeConstructionFailed(
                "a zero envelope cannot certify across jump points")
        if lam > 0.0:
            interior *= 0.5
        rho = env_min / (8.0 * len(boundaries) * supb.sup_norm() * scale_m)
        return Gauge.anchored(boundaries, min(rho, 0.25),
                              cap=min(interior, 0.25))
    return Gauge.constant(min(interior, 2.0))


@dataclass(frozen=True)
class ProbeReport:
    probe: IndexMap
    gauge: Gauge
    max_deviation: RieszValue
    samples: int


@dataclass(frozen=True)
class IntegralCertificate:
    value: RieszValue
    regulator: Regulator
    probe_reports: tuple[ProbeReport, ...]

    def __post_init__(self):
        for report in self.probe_reports:
            env = envelope(self.regulator, report.probe)
            if not leq(report.max_deviation, env, ORDER_SLACK):
                raise NotCertifiable(
                    f"deviation exceeds the envelope for probe "
                    f"{report.probe.describe()}")


def kh_integrate(f: Integrand, E, spec: MeasureSpec, reg: Regulator, probes,
                 *, samples: int = 32, seed="kh", max_depth: int = 48,
                 gauge_builder=None) -> IntegralCertificate:
    """Integrate ``f`` over ``E`` and certify the value against ``reg``.

    For every probe a gauge is constructed from the integrand's declared
    modulus; the sampled fine partitions (canonical plus seeded random fine
    refinements of the tightest gauge, which are fine for every reported
    gauge) must all keep their Riemann sums within the probe envelope.
    """
    if isinstance(f, CounterexampleC00):
        raise NotCertifiable(
            "the unit-sequence spike function is not gauge integrable; "
            "its fine Riemann sums have unbounded support")
    probes = tuple(probes)
    if not probes:
        raise EmptyProbeSet("no probes given")
    E = as_borel(E)
    builder = gauge_builder or certification_gauge
    value = integral_value(f, E, spec)
    env_meet = min_envelope(reg, probes)
    gauges = {p: builder(f, E, spec, envelope(reg, p)) for p in probes}
    tightest = builder(f, E, spec, env_meet)
    worst = zero_like(value)
    count = 0
    if not E.is_empty():
        for part in sample_fine_partitions(tightest, E, samples, seed, max_depth):
            dev = abs(riemann_sum(f, part, spec) - value)
            worst = worst.join(dev)
            count += 1
    reports = tuple(ProbeReport(p, gauges[p], worst, count) for p in probes)
    return IntegralCertificate(value, reg, reports)


def integral_additivity_check(f: Integrand, A, B, spec: MeasureSpec,
                              reg: Regulator, probes, **kw) -> bool:
    """Additivity over disjoint sets, positivity for nonnegative integrands,
    and scalar linearity, all within twice the tightest probe envelope."""
    A, B = as_borel(A), as_borel(B)
    if overlap_length(A, B) > ORDER_SLACK:
        raise NotDisjoint("additivity needs disjoint sets")
    both = kh_integrate(f, A.union(B), spec, reg, probes, **kw)
    only_a = kh_integrate(f, A, spec, reg, probes, **kw)
    only_b = kh_integrate(f, B, spec, reg, probes, **kw)
    tol = min_envelope(reg, probes).scale(2.0)
    ok = leq(abs(both.value - only_a.value - only_b.value), tol, ORDER_SLACK)
    if f.is_nonneg():
        ok = ok and leq(zero_like(both.value), both.value, ORDER_SLACK)
    scaled = kh_integrate(f.scaled(2.5), A.union(B), spec, reg, probes, **kw)
    ok = ok and leq(abs(scaled.value - both.value.scale(2.5)), tol, ORDER_SLACK)
    return ok


# ---------------------------------------------------------------------------
# the non-integrable counterexample, run forward
# ---------------------------------------------------------------------------

def _forced_points(n: int) -> list[float]:
    # 1/n < 1/(n-1) < ... < 1/2
    return [1.0 / (n + 1 - i) for i in range(1, n)]


def counterexample_partition(n: int, delta: Gauge,
                             max_depth: int = 48) -> TaggedPartition:
    """A fine partition of [0, 1] that pins a cell strictly around each point
    1/2, 1/3, ..., 1/n, with the gaps filled by bisection.

    The forced cell at 1/k has half-width ``min(gauge there, neighbor gaps)/4``
    so the cells stay pairwise disjoint, strictly inside (0, 1), and strictly
    ordered.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    points = _forced_points(n)
    declared = set(delta.mandatory_tags)
    missing = [p for p in points if p not in declared]
    if missing:
        raise ValueError(f"gauge lacks mandatory tags at {missing}")
    forced: list[tuple[Interval, float]] = []
    for idx, xi in enumerate(points):
        gap_left = xi - (points[idx - 1] if idx else 0.0)
        gap_right = (points[idx + 1] if idx + 1 < len(points) else 1.0) - xi
        h = min(delta.gamma(xi), gap_left, gap_right) / 4.0
        forced.append((Interval(xi - h, xi + h), xi))
    items = list(forced)
    cursor = 0.0
    fills: list[Interval] = []
    for cell, _ in forced:
        if cell.lo - cursor > 1e-12:
            fills.append(Interval(cursor, cell.lo))
        cursor = cell.hi
    if 1.0 - cursor > 1e-12:
        fills.append(Interval(cursor, 1.0))
    for gap in fills:
        filled = cousin_partition(delta, gap, max_depth)
        items.extend(_nudge_off_reciprocals(filled, delta, set(points)))
    items.sort(key=lambda item: item[0].lo)
    part = TaggedPartition(tuple(items))
    if not is_fine(part, delta):
        raise NotCertifiable("constructed partition failed the fineness check")
    return part


def _nudge_off_reciprocals(part: TaggedPartition, gauge: Gauge, keep: set):
    """Move any fill tag that lands exactly on a reciprocal 1/m off it (while
    staying fine), so the spike function vanishes at every fill tag."""
    out = []
    for cell, tag in part.items:
        if tag > 0.0 and tag not in keep:
            m = round(1.0 / tag)
            if m >= 1 and 1.0 / m == tag:
                width = cell.length()
                for cand in (tag + width / 7.0, tag - width / 7.0,
                             tag + width / 13.0, tag - width / 13.0):
                    if (cell.contains(cand)
                            and max(cand - cell.lo, cell.hi - cand)
                            < gauge.gamma(cand)):
                        tag = cand
                        break
        out.append((cell, tag))
    return out


@dataclass(frozen=True)
class CounterexampleEntry:
    n: int
    lambda_n: float
    fine: bool
    dominated: bool
    support: tuple[int, ...]


@dataclass(frozen=True)
class CounterexampleReport:
    entries: tuple[CounterexampleEntry, ...]
    verdict: str
    gauge_radius: float


def counterexample_unboundedness(n_max: int, *, gauge_radius: float = 0.05,
                                 max_depth: int = 48) -> CounterexampleReport:
    """Build the forced partitions for n = 2..n_max, check fineness and the
    lower bound ``lambda_n * u_n <= sum``, and report the support growth that
    rules out any common bound in the eventually-zero sequences."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    spec = MeasureSpec(Scalar(1.0))
    f = CounterexampleC00()
    entries = []
    frontier = 0
    growing = True
    for n in range(2, n_max + 1):
        points = _forced_points(n)
        delta = Gauge.constant(gauge_radius, mandatory_tags=points)
        part = counterexample_partition(n, delta, max_depth)
        fine = is_fine(part, delta)
        total = riemann_sum(f, part, spec)
        lam = next(cell.length() for cell, tag in part.items
                   if tag == points[0])
        dominated = lam > 0.0 and leq(SparseSeq({n: lam}), total, ORDER_SLACK)
        support = total.support()
        top = max(support) if support else 0
        growing = growing and top > frontier
        frontier = max(frontier, top)
        entries.append(CounterexampleEntry(n, lam, fine, dominated, support))
    all_ok = all(e.fine and e.dominated for e in entries)
    verdict = "UNBOUNDED" if (all_ok and growing) else "INCONCLUSIVE"
    return CounterexampleReport(tuple(entries), verdict, gauge_radius)
