"""The set-valued gauge integral over order intervals.

Value sets are order intervals [lo, hi] (nonempty, convex, bounded, closed).
The integral of a multifunction over a set is never materialized; it is
exposed as a membership test (a point is approximable, uniformly over sampled
fine partitions, by the interval Riemann set-sums) and as an interval oracle,
with the structural checks (convexity, closedness, boundedness, monotonicity)
tying the two together.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .domain import (BorelSet, Gauge, MeasureSpec, TaggedPartition,
                     iter_fine_partitions, measure)
from .errors import (EmptyFamily, EmptyProbeSet, NegativeScaleUnsupported,
                     PiecesOverlap, UnboundedMultifunction, ZeroNotInValues)
from .integrands import (ConstantIntegrand, Integrand, PieceLookup,
                         SimpleIntegrand)
from .integrate import as_borel, kh_integrate
from .regulators import (Regulator, Scaled, SumPair, envelope, max_envelope,
                         min_envelope)
from .values import (ORDER_SLACK, RieszValue, Scalar, clamp, leq, mul,
                     ones_like, zero_like)

_GRID = tuple(i / 64.0 for i in range(65))


@dataclass(frozen=True)
class OrderInterval:
    """The order interval [lo, hi]; a singleton when lo equals hi."""

    lo: RieszValue
    hi: RieszValue

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise ValueError("an order interval needs lo <= hi")

    @classmethod
    def singleton(cls, v: RieszValue) -> "OrderInterval":
        return cls(v, v)

    def is_singleton(self) -> bool:
        return (self.hi - self.lo).is_zero()

    def contains_value(self, z: RieszValue, slack: float = 0.0) -> bool:
        return leq(self.lo, z, slack) and leq(z, self.hi, slack)

    def midpoint(self) -> RieszValue:
        return (self.lo + self.hi).scale(0.5)

    def width(self) -> RieszValue:
        return self.hi - self.lo


def neighborhood_contains(C: OrderInterval, r: RieszValue, z: RieszValue,
                          slack: float = 0.0) -> bool:
    """Whether some point of C lies within ``r`` of ``z``; exact for order
    intervals via componentwise clamping."""
    witness = clamp(z, C.lo, C.hi)
    return leq(abs(z - witness), r, slack)


def dot_sum(sets) -> OrderInterval:
    """Closed direct sum of order intervals: endpoints add, and the result is
    already closed and convex."""
    sets = tuple(sets)
    if not sets:
        raise EmptyFamily("dot_sum needs at least one set")
    lo = sets[0].lo
    hi = sets[0].hi
    for s in sets[1:]:
        lo = lo + s.lo
        hi = hi + s.hi
    return OrderInterval(lo, hi)


def set_scale(C: OrderInterval, m: RieszValue) -> OrderInterval:
    """Scale an order interval by a nonnegative lattice element."""
    if not leq(zero_like(m), m):
        raise NegativeScaleUnsupported("set scaling needs a nonnegative factor")
    return OrderInterval(mul(C.lo, m), mul(C.hi, m))


# ---------------------------------------------------------------------------
# multifunctions
# ---------------------------------------------------------------------------

class Multifunction:
    """Base class: a map from [0, 1] into order intervals."""

    def value_at(self, t: float) -> OrderInterval:
        raise NotImplementedError

    def boundary_points(self) -> tuple[float, ...]:
        return ()

    def bound(self) -> RieszValue:
        """An L >= 0 with every value inside [-L, L]."""
        raise NotImplementedError

    def interior_modulus(self) -> float:
        """Lipschitz modulus of the endpoint functions away from boundaries."""
        raise NotImplementedError

    def lower_integrand(self) -> Integrand:
        raise NotImplementedError

    def upper_integrand(self) -> Integrand:
        raise NotImplementedError

    def contains_zero(self) -> bool:
        raise NotImplementedError

    def zero_value(self) -> RieszValue:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantSet(Multifunction):
    value: OrderInterval

    def value_at(self, t):
        return self.value

    def bound(self):
        return abs(self.value.lo).join(abs(self.value.hi))

    def interior_modulus(self):
        return 0.0

    def lower_integrand(self):
        return ConstantIntegrand(self.value.lo)

    def upper_integrand(self):
        return ConstantIntegrand(self.value.hi)

    def contains_zero(self):
        return self.value.contains_value(self.zero_value())

    def zero_value(self):
        return zero_like(self.value.lo)

    def describe(self):
        return "constant set"


@dataclass(frozen=True)
class SimpleSet(Multifunction):
    """Value ``C_k`` on the set ``E_k`` and the zero singleton elsewhere."""

    pieces: tuple[tuple[BorelSet, OrderInterval], ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("a simple multifunction needs at least one piece")
        for i, (a, _) in enumerate(self.pieces):
            for b, _ in self.pieces[i + 1:]:
                if a.intersection(b).length() > 1e-12:
                    raise PiecesOverlap(
                        "simple multifunction pieces overlap on positive length")
        object.__setattr__(self, "_lookup", PieceLookup(self.pieces))

    def value_at(self, t):
        C = self._lookup.get(t)
        return C if C is not None else OrderInterval.singleton(self.zero_value())

    def boundary_points(self):
        pts: set[float] = set()
        for part, _ in self.pieces:
            pts.update(part.boundary_points())
        return tuple(sorted(pts))

    def bound(self):
        out = zero_like(self.pieces[0][1].lo)
        for _, C in self.pieces:
            out = out.join(abs(C.lo)).join(abs(C.hi))
        return out

    def interior_modulus(self):
        return 0.0

    def lower_integrand(self):
        return SimpleIntegrand(tuple((s, C.lo) for s, C in self.pieces))

    def upper_integrand(self):
        return SimpleIntegrand(tuple((s, C.hi) for s, C in self.pieces))

    def contains_zero(self):
        zero = self.zero_value()
        return all(C.contains_value(zero) for _, C in self.pieces)

    def zero_value(self):
        return zero_like(self.pieces[0][1].lo)

    def describe(self):
        return f"simple set ({len(self.pieces)} pieces)"


@dataclass(frozen=True)
class IntervalValued(Multifunction):
    """Pointwise interval [lower(t), upper(t)] for two integrands whose
    ordering is verified on a grid and at every jump point."""

    lower: Integrand
    upper: Integrand

    def __post_init__(self):
        pts = set(_GRID) | set(self.lower.boundary_points())
        pts |= set(self.upper.boundary_points())
        for t in sorted(pts):
            if not leq(self.lower.value_at(t), self.upper.value_at(t),
                       ORDER_SLACK):
                raise ValueError(f"lower exceeds upper at t = {t}")

    def value_at(self, t):
        return OrderInterval(self.lower.value_at(t), self.upper.value_at(t))

    def boundary_points(self):
        pts = set(self.lower.boundary_points())
        pts |= set(self.upper.boundary_points())
        return tuple(sorted(pts))

    def bound(self):
        return self.lower.sup_bound().join(self.upper.sup_bound())

    def interior_modulus(self):
        lams = (self.lower.lipschitz(), self.upper.lipschitz())
        if None in lams:
            raise UnboundedMultifunction(
                "endpoint integrands declare no modulus")
        return max(lams)

    def lower_integrand(self):
        return self.lower

    def upper_integrand(self):
        return self.upper

    def contains_zero(self):
        zero = self.zero_value()
        pts = set(_GRID) | set(self.boundary_points())
        return all(self.value_at(t).contains_value(zero, ORDER_SLACK)
                   for t in pts)

    def zero_value(self):
        return self.lower.zero_value()

    def describe(self):
        return f"interval [{self.lower.describe()}, {self.upper.describe()}]"


def singleton_multifunction(f: Integrand) -> Multifunction:
    """The single-valued multifunction {f}."""
    return IntervalValued(f, f)


# ---------------------------------------------------------------------------
# Riemann set-sums and the integral
# ---------------------------------------------------------------------------

def riemann_set_sum(F: Multifunction, part: TaggedPartition,
                    spec: MeasureSpec) -> OrderInterval:
    """Dot-sum over cells of the value interval at the tag scaled by the cell
    measure."""
    if isinstance(spec.m0, Scalar) and isinstance(F.zero_value(), Scalar):
        lo = 0.0
        hi = 0.0
        for cell, tag in part.items:
            ln = cell.hi - cell.lo
            if ln != 0.0:
                C = F.value_at(tag)
                lo += C.lo.value * ln
                hi += C.hi.value * ln
        s = spec.m0.value
        return OrderInterval(Scalar(lo * s), Scalar(hi * s))
    zero = mul(F.zero_value(), spec.m0)
    lo = zero
    hi = zero
    for cell, tag in part.items:
        ln = cell.length()
        if ln == 0.0:
            continue
        C = F.value_at(tag)
        w = spec.of_length(ln)
        lo = lo + mul(C.lo, w)
        hi = hi + mul(C.hi, w)
    return OrderInterval(lo, hi)


def _relevant_jumps(F: Multifunction, E: BorelSet) -> tuple[float, ...]:
    return tuple(p for p in F.boundary_points() if E.contains_point(p, 1e-12))


def _membership_gauge(F: Multifunction, E: BorelSet, level: int) -> Gauge:
    radius = 2.0 ** (-level)
    anchors = _relevant_jumps(F, E)
    if anchors and F.interior_modulus() == 0.0:
        return Gauge.anchored(anchors, radius)
    return Gauge.constant(radius, mandatory_tags=anchors)


def _level_schedule(F: Multifunction, E: BorelSet, spec: MeasureSpec,
                    env: RieszValue, max_level: int) -> list[int]:
    """Gauge-halving levels to search: a few coarse ones plus the level at
    which the set-sum wobble provably drops below the envelope.

    The wobble of a fine set-sum at tag radius r is bounded by
    ``(modulus * length + 4 * #jumps * bound) * scale * r``; multifunctions
    with no interior variation and no jumps have partition-independent sums,
    so only coarse levels are worth trying.
    """
    bound = F.bound()
    active = mul(bound.join(ones_like(bound).scale(1e-9)), abs(spec.m0))
    env_min = min((env.coord(k) for k, _ in active.nonzero_coords()),
                  default=float("inf"))
    lam = F.interior_modulus()
    nb = len(_relevant_jumps(F, E))
    scale_m = spec.m0.sup_norm()
    variation = (lam * E.length() + 4.0 * nb * bound.sup_norm()) * scale_m
    if variation <= 0.0:
        return [0, 2]
    # constant-radius gauges cost 2**level cells; anchored ones stay cheap
    cap = max_level if (lam == 0.0 and nb > 0) else min(13, max_level)
    if env_min <= 0.0 or not math.isfinite(env_min):
        pred = cap
    else:
        pred = max(0, math.ceil(math.log2(4.0 * variation / env_min)))
    pred = min(pred, cap)
    return sorted({0, 2, pred, min(pred + 2, cap), min(pred + 4, cap)})


def _gauge_search(z, F, E, spec, env, schedule, samples, seed,
                  max_depth) -> bool:
    """Search the halving schedule for a gauge all of whose sampled fine
    partitions bring a set-sum within ``env`` of ``z``.

    A coarse gauge admits every finer partition as well, so partitions built
    at the schedule's finest level belong to every level's sample; they are
    checked once up front, which also rejects quickly when fine set-sums
    exclude the point.
    """
    def contained(part) -> bool:
        return neighborhood_contains(riemann_set_sum(F, part, spec), env, z,
                                     ORDER_SLACK)

    finest = max(schedule)
    fine_gauge = _membership_gauge(F, E, finest)
    extra = max(4, samples // 4)
    if not all(contained(part) for part in
               iter_fine_partitions(fine_gauge, E, extra, f"{seed}:fine",
                                    max_depth)):
        return False
    for level in schedule:
        gauge = _membership_gauge(F, E, level)
        if all(contained(part) for part in
               iter_fine_partitions(gauge, E, samples, f"{seed}:L{level}",
                                    max_depth)):
            return True
    return False


def phi_membership(z: RieszValue, F: Multifunction, E, spec: MeasureSpec,
                   reg: Regulator, probes, *, partition_samples: int = 32,
                   seed="phi", max_depth: int = 48, max_level: int = 20) -> bool:
    """Membership in the set-valued integral: for every probe there must be a
    gauge (searched over a halving family pinned at the piece boundaries)
    under which every sampled fine partition's set-sum comes within the probe
    envelope of ``z``.

    Neighborhood containment is monotone in the radius, so one gauge that
    works for the meet of all probe envelopes settles every probe at once;
    only when that search fails are the probes tried individually.
    """
    E = as_borel(E)
    F.bound()  # raises UnboundedMultifunction when there is no common bound
    probes = tuple(probes)
    if not probes:
        raise EmptyProbeSet("no probes given")
    env_meet = min_envelope(reg, probes)
    if _gauge_search(z, F, E, spec, env_meet,
                     _level_schedule(F, E, spec, env_meet, max_level),
                     partition_samples, seed, max_depth):
        return True
    for phi in sorted(probes, key=lambda p: envelope(reg, p).sup_norm()):
        env = envelope(reg, phi)
        if env == env_meet:
            # the meet search above already exhausted exactly these radii
            return False
        if not _gauge_search(z, F, E, spec, env,
                             _level_schedule(F, E, spec, env, max_level),
                             partition_samples, seed, max_depth):
            return False
    return True


def phi_interval_oracle(F: Multifunction, E, spec: MeasureSpec,
                        reg: Regulator, probes, *, partition_samples: int = 32,
                        seed="oracle", max_depth: int = 48,
                        max_level: int = 20) -> OrderInterval:
    """A computable outer description of the set-valued integral: exact
    endpoint arithmetic for constant and simple multifunctions, certified
    endpoint integrals for interval-valued ones."""
    E = as_borel(E)
    if isinstance(F, ConstantSet):
        return set_scale(F.value, measure(spec, E))
    if isinstance(F, SimpleSet):
        zero = OrderInterval.singleton(mul(F.zero_value(), spec.m0))
        parts = [zero]
        parts.extend(set_scale(C, measure(spec, S.intersection(E)))
                     for S, C in F.pieces)
        return dot_sum(parts)
    lo = kh_integrate(F.lower_integrand(), E, spec, reg, probes,
                      samples=partition_samples, seed=f"{seed}:lo",
                      max_depth=max_depth).value
    hi = kh_integrate(F.upper_integrand(), E, spec, reg, probes,
                      samples=partition_samples, seed=f"{seed}:hi",
                      max_depth=max_depth).value
    return OrderInterval(lo, hi)


def _diagonal_point(C: OrderInterval, alpha: float) -> RieszValue:
    return C.lo.scale(1.0 - alpha) + C.hi.scale(alpha)


def phi_convexity_check(F: Multifunction, E, spec: MeasureSpec,
                        reg: Regulator, probes, trials: int = 3,
                        seed="cvx", **kw) -> bool:
    """Convex combinations of members stay members, tested with the doubled
    regulator that the convexity argument calls for."""
    E = as_borel(E)
    oracle = phi_interval_oracle(F, E, spec, reg, probes, **kw)
    doubled = Scaled(SumPair(reg, reg), 2.0)
    rng = random.Random(f"{seed}")
    for _ in range(trials):
        z1 = _diagonal_point(oracle, rng.random())
        z2 = _diagonal_point(oracle, rng.random())
        if not phi_membership(z1, F, E, spec, reg, probes, **kw):
            return False
        if not phi_membership(z2, F, E, spec, reg, probes, **kw):
            return False
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            z = z1.scale(alpha) + z2.scale(1.0 - alpha)
            if not phi_membership(z, F, E, spec, doubled, probes, **kw):
                return False
    return True


def phi_closedness_check(F: Multifunction, E, spec: MeasureSpec,
                         reg: Regulator, probes, **kw) -> bool:
    """Membership agrees with the closed oracle interval on a grid straddling
    its boundary: endpoints are members, points beyond twice the largest probe
    envelope are not."""
    E = as_borel(E)
    oracle = phi_interval_oracle(F, E, spec, reg, probes, **kw)
    for alpha in (0.0, 0.5, 1.0):
        if not phi_membership(_diagonal_point(oracle, alpha), F, E, spec,
                              reg, probes, **kw):
            return False
    emax = max_envelope(reg, probes)
    unit = ones_like(oracle.lo)
    step = emax.scale(2.5) + unit.scale(1e-6)
    for factor in (1.0, 2.0):
        above = oracle.hi + step.scale(factor)
        below = oracle.lo - step.scale(factor)
        if phi_membership(above, F, E, spec, reg, probes, **kw):
            return False
        if phi_membership(below, F, E, spec, reg, probes, **kw):
            return False
    return True


def phi_monotonicity_check(F: Multifunction, A, B, spec: MeasureSpec,
                           reg: Regulator, probes, samples: int = 3,
                           seed="mono", **kw) -> bool:
    """For zero-containing values and A inside B, the integral over A sits
    inside the integral over B."""
    A, B = as_borel(A), as_borel(B)
    if not B.contains_set(A):
        raise ValueError("monotonicity needs A inside B")
    if not F.contains_zero():
        raise ZeroNotInValues("every value interval must contain zero")
    oracle_a = phi_interval_oracle(F, A, spec, reg, probes, **kw)
    oracle_b = phi_interval_oracle(F, B, spec, reg, probes, **kw)
    ok = (leq(oracle_b.lo, oracle_a.lo, ORDER_SLACK)
          and leq(oracle_a.hi, oracle_b.hi, ORDER_SLACK))
    rng = random.Random(f"{seed}")
    for _ in range(samples):
        z = _diagonal_point(oracle_a, rng.random())
        ok = ok and phi_membership(z, F, B, spec, reg, probes, **kw)
    return ok


def respects_global_bound(z: RieszValue, F: Multifunction, spec: MeasureSpec,
                          slack: float = ORDER_SLACK) -> bool:
    """The boundedness conclusion: accepted members stay within the bound of
    F times the measure of the whole domain."""
    cap = mul(F.bound(), spec.total())
    return leq(abs(z), cap, slack)
