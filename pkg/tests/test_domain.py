import random

import pytest

from rieszgauge.domain import (BorelSet, Gauge, Interval, MeasureSpec,
                               TaggedPartition, cousin_partition, is_fine,
                               iter_fine_partitions, measure, partition_borel,
                               regularity_witness, sigma_additivity_check)
from rieszgauge.errors import (DepthExceeded, EnvelopeTooSmall, NotDisjoint)
from rieszgauge.regulators import ConstantMap, Geometric, envelope
from rieszgauge.values import Scalar, Vector, leq, zero_like

SPEC = MeasureSpec(Scalar(1.0))


def test_borel_normalization_is_canonical():
    a = BorelSet.from_pairs([[0.5, 1.0], [0.0, 0.25], [0.25, 0.5]])
    assert a.to_pairs() == [[0.0, 1.0]]
    b = BorelSet.from_pairs([[0.0, 0.3], [0.2, 0.4]])
    assert b.to_pairs() == [[0.0, 0.4]]


def test_borel_set_algebra():
    a = BorelSet.from_pairs([[0.0, 0.5]])
    b = BorelSet.from_pairs([[0.25, 1.0]])
    assert a.intersection(b).to_pairs() == [[0.25, 0.5]]
    assert a.union(b).to_pairs() == [[0.0, 1.0]]
    assert a.difference(b).to_pairs() == [[0.0, 0.25]]
    assert BorelSet.whole().difference(a).to_pairs() == [[0.5, 1.0]]
    assert b.contains_set(BorelSet.from_pairs([[0.3, 0.9]]))
    assert not a.contains_set(b)


def test_measure_examples():
    assert measure(SPEC, BorelSet.from_pairs([[0.0, 0.5]])) == Scalar(0.5)
    assert measure(SPEC, BorelSet.empty()) == Scalar(0.0)
    vec = MeasureSpec(Vector([1.0, 2.0]))
    merged = BorelSet.from_pairs([[0.0, 0.25], [0.25, 0.5]])
    assert measure(vec, merged) == Vector([0.5, 1.0])


def test_measure_additive_and_monotone():
    rng = random.Random("measure")
    for _ in range(100):
        pts = sorted(rng.randrange(65) / 64.0 for _ in range(4))
        a = BorelSet.from_pairs([[pts[0], pts[1]]])
        b = BorelSet.from_pairs([[pts[2], pts[3]]])
        total = measure(SPEC, a.union(b))
        assert abs(total - (measure(SPEC, a) + measure(SPEC, b))).is_zero(1e-12)
        assert leq(measure(SPEC, a.intersection(b)), measure(SPEC, a))


def test_cousin_whole_interval_fits():
    part = cousin_partition(Gauge.constant(2.0), Interval(0.0, 1.0))
    assert part.to_triples() == [[0.0, 1.0, 0.5]]


def test_cousin_bisects_once_for_radius_03():
    gauge = Gauge.constant(0.3)
    part = cousin_partition(gauge, Interval(0.0, 1.0))
    assert part.to_triples() == [[0.0, 0.5, 0.25], [0.5, 1.0, 0.75]]
    assert is_fine(part, gauge)


def test_cousin_pins_mandatory_tag():
    gauge = Gauge.piecewise((0.0, 0.05, 1.0), (0.01, 1.0), mandatory_tags=[0.0])
    part = cousin_partition(gauge, Interval(0.0, 1.0))
    first_cell, first_tag = part.items[0]
    assert first_tag == 0.0
    assert first_cell.lo == 0.0 and first_cell.hi < 0.01
    assert is_fine(part, gauge)


def test_is_fine_is_strict():
    part = TaggedPartition(((Interval(0.0, 1.0), 0.5),))
    assert is_fine(part, Gauge.constant(2.0))
    assert not is_fine(part, Gauge.constant(0.4))
    assert not is_fine(part, Gauge.constant(0.5))  # reach equals the radius


def test_cousin_roundtrip_random_gauges():
    rng = random.Random("roundtrip")
    for trial in range(20):
        kind = trial % 3
        if kind == 0:
            gauge = Gauge.constant(rng.uniform(0.03, 0.6))
        elif kind == 1:
            gauge = Gauge.piecewise((0.0, 0.5, 1.0),
                                    (rng.uniform(0.02, 0.2),
                                     rng.uniform(0.02, 0.2)))
        else:
            gauge = Gauge.anchored([rng.uniform(0.2, 0.8)],
                                   rng.uniform(0.005, 0.05))
        region = BorelSet.from_pairs([[0.0, 0.375], [0.5, 1.0]])
        part = partition_borel(gauge, region)
        assert is_fine(part, gauge)
        assert abs(part.total_length() - region.length()) <= 1e-12
        assert part.covers(region)


def test_random_perturbations_stay_fine():
    gauge = Gauge.anchored([0.25, 0.75], 0.01)
    region = BorelSet.whole()
    for part in iter_fine_partitions(gauge, region, 12, seed="perturb"):
        assert is_fine(part, gauge)
        assert abs(part.total_length() - 1.0) <= 1e-12


def test_depth_exceeded_signals_bad_floor():
    gauge = Gauge(radius=Gauge.constant(1e-9).radius, mandatory_tags=(),
                  floor_on_remainder=1e-9)
    with pytest.raises(DepthExceeded):
        cousin_partition(gauge, Interval(0.0, 1.0), max_depth=8)


def test_partition_rejects_overlap_and_stray_tags():
    with pytest.raises(ValueError):
        TaggedPartition(((Interval(0.0, 0.6), 0.5), (Interval(0.5, 1.0), 0.7)))
    with pytest.raises(ValueError):
        TaggedPartition(((Interval(0.0, 0.5), 0.7),))


def test_regularity_witness_bookkeeping_example():
    # envelope 0.1 against length margin 0.02 on each side
    reg = Geometric(Scalar(1.0), 1.0, 0.1)
    region = BorelSet.from_pairs([[0.25, 0.5]])
    inner, outer = regularity_witness(SPEC, region, reg, ConstantMap(1))
    assert inner.to_pairs() == [[0.27, 0.48]]
    assert outer.to_pairs() == [[0.23, 0.52]]
    assert outer.is_open
    gap = measure(SPEC, outer) - measure(SPEC, inner)
    assert leq(gap, envelope(reg, ConstantMap(1)), 1e-12)


def test_regularity_witness_edges():
    reg = Geometric(Scalar(1.0), 1.0, 0.1)
    inner, outer = regularity_witness(SPEC, BorelSet.empty(), reg, ConstantMap(1))
    assert inner.is_empty() and outer.is_empty()
    inner, outer = regularity_witness(SPEC, BorelSet.whole(), reg, ConstantMap(1))
    assert outer.to_pairs() == [[0.0, 1.0]] and outer.is_open
    assert inner.components[0].lo > 0.0 and inner.components[0].hi < 1.0
    with pytest.raises(EnvelopeTooSmall):
        regularity_witness(SPEC, BorelSet.from_pairs([[0.2, 0.2]]),
                           Geometric(Scalar(0.0), 0.5, 0.5), ConstantMap(1))


def test_sigma_additivity_cases():
    halves = [BorelSet.from_pairs([[0.0, 0.5]]), BorelSet.from_pairs([[0.5, 1.0]])]
    assert sigma_additivity_check(SPEC, halves, Scalar(0.0))
    dyadic = [BorelSet.from_pairs([[2.0 ** (-k), 2.0 ** (-k + 1)]])
              for k in range(1, 21)]
    assert sigma_additivity_check(SPEC, dyadic, Scalar(2.0 ** (-20)))
    with pytest.raises(NotDisjoint):
        sigma_additivity_check(
            SPEC,
            [BorelSet.from_pairs([[0.0, 0.6]]), BorelSet.from_pairs([[0.5, 1.0]])],
            Scalar(0.0))


def test_measure_spec_validation():
    with pytest.raises(ValueError):
        MeasureSpec(Scalar(0.0))
    with pytest.raises(ValueError):
        MeasureSpec(Scalar(-1.0))
    assert zero_like(MeasureSpec(Vector([0.0, 2.0])).m0) == Vector([0.0, 0.0])
