import math
import random

import pytest
from hypothesis import given, strategies as st

from oracles import eh_ratio_bruteforce, spectrum_bruteforce
from symb.capacities import (best_lower_bound, eh_capacity, eh_lower_bound,
                             linear_embeds, spectrum_prefix, rigidity_excludes,
                             unit_target_capacity, volume_lower_bound)
from symb.domain import Ellipsoid, Family, Method, Polydisc, TargetFamily
from symb.errors import DimensionMismatch

radii = st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=4)


def test_spectrum_example():
    # DERIVED: merge of 1,2,3,... with 2,4,6,...
    assert spectrum_prefix(Ellipsoid((1, 2)), 5).values == (1, 2, 2, 3, 4)


@given(radii, st.integers(min_value=1, max_value=50))
def test_spectrum_matches_bruteforce(rs, count):
    e = Ellipsoid(tuple(r / 4 for r in rs))
    assert list(spectrum_prefix(e, count).values) == spectrum_bruteforce(e.radii, count)


@given(radii, st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=8))
def test_spectrum_is_homogeneous(rs, count, lam):
    e = Ellipsoid(tuple(float(r) for r in rs))
    scaled = Ellipsoid(tuple(lam * r for r in e.radii))
    assert spectrum_prefix(scaled, count).values == tuple(
        lam * v for v in spectrum_prefix(e, count).values)


@given(radii, st.integers(min_value=2, max_value=40))
def test_spectrum_nondecreasing(rs, count):
    vals = spectrum_prefix(Ellipsoid(tuple(rs)), count).values
    assert all(x <= y for x, y in zip(vals, vals[1:]))


def test_unit_targets():
    ball = TargetFamily(Family.BALL, 3)
    assert [unit_target_capacity(ball, k) for k in range(1, 8)] == [1, 1, 1, 2, 2, 2, 3]
    cube = TargetFamily(Family.CUBE, 2)
    assert [unit_target_capacity(cube, k) for k in range(1, 5)] == [1, 2, 3, 4]
    # the unit ball's own spectrum agrees with the closed form
    assert spectrum_prefix(Ellipsoid.ball(1, 3), 7).values == (1, 1, 1, 2, 2, 2, 3)


def test_polydisc_capacity_sees_smallest_factor():
    assert eh_capacity(Polydisc((3, 1)), 4) == 4
    assert eh_capacity(Ellipsoid((1, 2)), 3) == 2


@pytest.mark.parametrize("seed", range(5))
def test_eh_lower_bound_matches_bruteforce(seed):
    rng = random.Random(seed)
    for _ in range(20):
        n = rng.randint(1, 4)
        rs = tuple(rng.uniform(0.5, 20) for _ in range(n))
        for fam in Family:
            got = eh_lower_bound(Ellipsoid(rs), TargetFamily(fam, n)).value
            assert got == eh_ratio_bruteforce(sorted(rs), n, fam is Family.BALL)


def test_volume_lower_bounds():
    # E(1, a) into B^4: sqrt(a); into C^4: sqrt(a/2)
    assert volume_lower_bound(Ellipsoid((1, 9)), TargetFamily(Family.BALL, 2)).value == 3
    assert math.isclose(
        volume_lower_bound(Ellipsoid((1, 8)), TargetFamily(Family.CUBE, 2)).value, 2)
    assert volume_lower_bound(Polydisc((1, 8)), TargetFamily(Family.BALL, 2)).value == 4


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        eh_lower_bound(Ellipsoid((1, 2)), TargetFamily(Family.BALL, 3))
    with pytest.raises(DimensionMismatch):
        linear_embeds(Ellipsoid((1, 2)), Ellipsoid((1, 2, 3)))


@given(st.floats(min_value=0.1, max_value=50), st.floats(min_value=1.0, max_value=2.0))
def test_pinched_ellipsoids_are_rigid(a1, ratio):
    e = Ellipsoid((a1, a1 * ratio))
    lb = best_lower_bound(e, TargetFamily(Family.BALL, 2))
    assert lb.value == e.radii[1]
    assert lb.method is Method.EKELAND_HOFER
    assert rigidity_excludes(e, e.radii[1] * 0.999)
    assert not rigidity_excludes(e, e.radii[1])


def test_unpinched_ellipsoid_not_covered_by_rigidity():
    assert not rigidity_excludes(Ellipsoid((1, 4)), 2.5)


@given(st.lists(st.floats(min_value=0.5, max_value=30), min_size=2, max_size=4))
def test_lower_bound_never_exceeds_inclusion(rs):
    e = Ellipsoid(tuple(rs))
    # E sits inside the ball of its largest radius
    assert best_lower_bound(e, TargetFamily(Family.BALL, e.n)).value <= e.radii[-1] + 1e-12
