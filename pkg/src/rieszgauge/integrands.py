"""Integrand families the certifying integrator accepts.

Constants, simple (piecewise-constant) functions, scalar formulas with a
declared Lipschitz modulus times a fixed lattice direction, convex mixes of a
lower/upper pair (used for selections), and the eventually-zero-sequence
counterexample that takes the n-th unit sequence at the points 1/n.
"""

from __future__ import annotations

import bisect as _bisect
from dataclasses import dataclass
from functools import reduce
from typing import Callable

from .domain import BorelSet
from .errors import NotDisjoint, UnboundedMultifunction
from .values import RieszValue, SparseSeq, leq, zero_like

_GRID = tuple(i / 64.0 for i in range(65))


@dataclass(frozen=True)
class ScalarForm:
    """A named real formula on [0, 1] carrying its Lipschitz constant."""

    name: str
    fn: Callable[[float], float]
    lipschitz: float

    def range_bound(self) -> float:
        coarse = max(abs(self.fn(t)) for t in _GRID)
        return coarse + self.lipschitz / (2 * (len(_GRID) - 1))


SCALAR_FORMS: dict[str, ScalarForm] = {
    form.name: form for form in (
        ScalarForm("t", lambda t: t, 1.0),
        ScalarForm("one_minus_t", lambda t: 1.0 - t, 1.0),
        ScalarForm("half_t", lambda t: 0.5 * t, 0.5),
        ScalarForm("neg_t", lambda t: -t, 1.0),
        ScalarForm("square", lambda t: t * t, 2.0),
    )
}


class PieceLookup:
    """Bisect-backed point lookup over disjoint pieces of the unit interval.

    Non-degenerate components cannot nest, so at most the two latest-starting
    rows can contain a point; single-point components may sit inside other
    pieces and are kept in their own map.  Ties at shared endpoints go to the
    earliest declared piece.
    """

    __slots__ = ("_rows", "_lows", "_points")

    def __init__(self, pieces):
        rows = []
        points: dict[float, tuple[int, object]] = {}
        for idx, (part, payload) in enumerate(pieces):
            for comp in part.components:
                if comp.lo == comp.hi:
                    if comp.lo not in points or idx < points[comp.lo][0]:
                        points[comp.lo] = (idx, payload)
                else:
                    rows.append((comp.lo, comp.hi, idx, payload))
        rows.sort(key=lambda row: (row[0], row[1], row[2]))
        self._rows = rows
        self._lows = [row[0] for row in rows]
        self._points = points

    def get(self, t: float):
        i = _bisect.bisect_right(self._lows, t)
        best = self._points.get(t)
        for lo, hi, idx, payload in self._rows[max(0, i - 2):i]:
            if lo <= t <= hi and (best is None or idx < best[0]):
                best = (idx, payload)
        return best[1] if best is not None else None


class Integrand:
    """Base class; every integrand evaluates pointwise and reports the data a
    gauge construction needs (jump locations, in-piece modulus, a bound)."""

    def value_at(self, t: float) -> RieszValue:
        raise NotImplementedError

    def zero_value(self) -> RieszValue:
        """Zero of the integrand's value lattice."""
        raise NotImplementedError

    def boundary_points(self) -> tuple[float, ...]:
        return ()

    def lipschitz(self) -> float | None:
        """Modulus away from the boundary points; None when there is none."""
        raise NotImplementedError

    def sup_bound(self) -> RieszValue:
        """A value dominating |f(t)| on all of [0, 1]."""
        raise NotImplementedError

    def scaled(self, alpha: float) -> "Integrand":
        raise NotImplementedError

    def is_nonneg(self) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantIntegrand(Integrand):
    value: RieszValue

    def value_at(self, t):
        return self.value

    def zero_value(self):
        return zero_like(self.value)

    def lipschitz(self):
        return 0.0

    def sup_bound(self):
        return abs(self.value)

    def scaled(self, alpha):
        return ConstantIntegrand(self.value.scale(alpha))

    def is_nonneg(self):
        return leq(zero_like(self.value), self.value)

    def describe(self):
        return f"const:{self.value!r}"


@dataclass(frozen=True)
class SimpleIntegrand(Integrand):
    """Piecewise constant: value ``v_k`` on the set ``E_k``, zero elsewhere.
    Pieces must not overlap on positive length; at shared endpoints the
    earliest piece wins (a length-zero convention)."""

    pieces: tuple[tuple[BorelSet, RieszValue], ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("a simple integrand needs at least one piece")
        for i, (a, _) in enumerate(self.pieces):
            for b, _ in self.pieces[i + 1:]:
                if a.intersection(b).length() > 1e-12:
                    raise NotDisjoint("simple pieces overlap on positive length")
        object.__setattr__(self, "_lookup", PieceLookup(self.pieces))

    def value_at(self, t):
        v = self._lookup.get(t)
        return v if v is not None else self.zero_value()

    def zero_value(self):
        return zero_like(self.pieces[0][1])

    def boundary_points(self):
        pts: set[float] = set()
        for part, _ in self.pieces:
            pts.update(part.boundary_points())
        return tuple(sorted(pts))

    def lipschitz(self):
        return 0.0

    def sup_bound(self):
        return reduce(lambda a, b: a.join(b),
                      (abs(v) for _, v in self.pieces), self.zero_value())

    def scaled(self, alpha):
        return SimpleIntegrand(tuple((s, v.scale(alpha)) for s, v in self.pieces))

    def is_nonneg(self):
        zero = self.zero_value()
        return all(leq(zero, v) for _, v in self.pieces)

    def describe(self):
        return f"simple:{len(self.pieces)} pieces"


@dataclass(frozen=True)
class PointwiseScalar(Integrand):
    """``coeff * form(t)`` times a fixed direction in the value lattice."""

    form: ScalarForm
    direction: RieszValue
    coeff: float = 1.0

    def value_at(self, t):
        return self.direction.scale(self.coeff * self.form.fn(t))

    def zero_value(self):
        return zero_like(self.direction)

    def lipschitz(self):
        return abs(self.coeff) * self.form.lipschitz * self.direction.sup_norm()

    def sup_bound(self):
        return abs(self.direction).scale(abs(self.coeff) * self.form.range_bound())

    def scaled(self, alpha):
        return PointwiseScalar(self.form, self.direction, self.coeff * alpha)

    def is_nonneg(self):
        lo = min(self.coeff * self.form.fn(t) for t in _GRID)
        return lo >= -1e-12 and leq(zero_like(self.direction), self.direction)

    def describe(self):
        return f"{self.form.name}*{self.coeff}"


@dataclass(frozen=True)
class SelectionIntegrand(Integrand):
    """Convex mix ``(1 - lam(t)) * lower(t) + lam(t) * upper(t)`` for a simple
    mixing function ``lam`` with values in [0, 1] (zero off its pieces)."""

    lower: Integrand
    upper: Integrand
    mix: tuple[tuple[BorelSet, float], ...]

    def __post_init__(self):
        for part, lam in self.mix:
            if not 0.0 <= lam <= 1.0:
                raise ValueError(f"mix value {lam} outside [0, 1]")
        for i, (a, _) in enumerate(self.mix):
            for b, _ in self.mix[i + 1:]:
                if a.intersection(b).length() > 1e-12:
                    raise NotDisjoint("mix pieces overlap on positive length")

    def mix_at(self, t: float) -> float:
        for part, lam in self.mix:
            if part.contains_point(t):
                return lam
        return 0.0

    def value_at(self, t):
        lam = self.mix_at(t)
        return (self.lower.value_at(t).scale(1.0 - lam)
                + self.upper.value_at(t).scale(lam))

    def zero_value(self):
        return self.lower.zero_value()

    def boundary_points(self):
        pts = set(self.lower.boundary_points()) | set(self.upper.boundary_points())
        for part, _ in self.mix:
            pts.update(part.boundary_points())
        return tuple(sorted(pts))

    def lipschitz(self):
        lams = (self.lower.lipschitz(), self.upper.lipschitz())
        if None in lams:
            return None
        return max(lams)

    def sup_bound(self):
        return self.lower.sup_bound().join(self.upper.sup_bound())

    def scaled(self, alpha):
        return SelectionIntegrand(self.lower.scaled(alpha),
                                  self.upper.scaled(alpha), self.mix)

    def is_nonneg(self):
        return self.lower.is_nonneg() and self.upper.is_nonneg()

    def describe(self):
        return f"mix({self.lower.describe()},{self.upper.describe()})"


@dataclass(frozen=True)
class CounterexampleC00(Integrand):
    """Takes the n-th unit sequence at t = 1/n and zero everywhere else.
    Bounded nowhere as a family in the eventually-zero sequences, hence
    refused by the certifying integrator."""

    def value_at(self, t):
        if t > 0.0:
            n = round(1.0 / t)
            if n >= 1 and 1.0 / n == t:
                return SparseSeq({n: 1.0})
        return SparseSeq()

    def zero_value(self):
        return SparseSeq()

    def lipschitz(self):
        return None

    def sup_bound(self):
        raise UnboundedMultifunction(
            "the unit-sequence spike family has no common bound")

    def scaled(self, alpha):
        raise UnboundedMultifunction(
            "the counterexample integrand does not support scaling")

    def is_nonneg(self):
        return True

    def describe(self):
        return "counterexample"


def named_integrand(name: str, direction: RieszValue) -> Integrand:
    """Resolve a built-in integrand name against a value-lattice direction."""
    if name == "counterexample":
        return CounterexampleC00()
    if name in SCALAR_FORMS:
        return PointwiseScalar(SCALAR_FORMS[name], direction)
    raise ValueError(f"unknown integrand {name!r}")
