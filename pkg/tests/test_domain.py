import math

import pytest
from hypothesis import given, strategies as st

from symb.domain import (Accuracy, Bound, Direction, Ellipsoid, Family, Method,
                         Polydisc, TargetFamily, as_accuracy, normalize, volume)
from symb.errors import NonPositiveEntry, SymbError

positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


@given(st.lists(positive, min_size=1, max_size=6))
def test_normalize_sorts_and_keeps_entries(values):
    e = normalize(values)
    assert list(e.radii) == sorted(values)
    assert normalize(values, "polydisc").areas == e.radii


@given(st.lists(positive, min_size=1, max_size=5), st.floats(min_value=0.1, max_value=10))
def test_volume_scales_with_degree_n(values, lam):
    e = Ellipsoid(tuple(values))
    scaled = Ellipsoid(tuple(lam * v for v in values))
    assert math.isclose(volume(scaled), lam ** e.n * volume(e), rel_tol=1e-9)


def test_volume_examples():
    assert volume(Ellipsoid((1, 4))) == 2.0
    assert volume(Polydisc((1, 4))) == 4.0
    assert volume((TargetFamily(Family.BALL, 2), 3.0)) == 4.5
    assert volume((TargetFamily(Family.CUBE, 3), 2.0)) == 8.0


@pytest.mark.parametrize("bad", [(0, 1), (-1, 2), (), (float("nan"), 1)])
def test_non_positive_entries_rejected(bad):
    with pytest.raises(NonPositiveEntry):
        Ellipsoid(bad)
    with pytest.raises(NonPositiveEntry):
        Polydisc(bad)


def test_targets_build_round_shapes():
    assert TargetFamily(Family.BALL, 3).shape(2.0) == Ellipsoid.ball(2.0, 3)
    assert TargetFamily(Family.CUBE, 2).shape(5.0) == Polydisc.cube(5.0, 2)


def test_bound_certificate_keys_are_checked():
    Bound(2.0, Direction.UPPER, Method.EKELAND_HOFER, {"k": 2})
    Bound(3.0, "Upper", "ClosedFormFold", {"N": 1})
    with pytest.raises(SymbError):
        Bound(2.0, Direction.UPPER, Method.MULTI_FOLD, {"u0": 1.0})
    with pytest.raises(SymbError):
        Bound(0.0, Direction.LOWER, Method.VOLUME)


def test_cert_string_format():
    b = Bound(2.5, Direction.UPPER, Method.LAGRANGIAN_M, {"ks": (2, 3)})
    assert b.cert_string() == "LagrangianM(ks=2/3)"
    b = Bound(2.5, Direction.UPPER, Method.MULTI_FOLD, {"u0": 1.5, "folds": 2})
    assert b.cert_string() == "MultiFold(folds=2;u0=1.500000000)"


def test_accuracy_coercion():
    assert as_accuracy(None) == Accuracy()
    assert as_accuracy(1e-6).acc == 1e-6
    with pytest.raises(ValueError):
        Accuracy(0.0)
