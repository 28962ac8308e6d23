from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from immersion_census.census.enumerate_classes import (
    Engine,
    OutOfEnvelopeError,
    check_envelope,
    enumerate_classes,
    envelope_for,
    genus_histogram,
)
from immersion_census.census.immersion_class import (
    Method,
    group_for_method,
    naive_estimate,
    universe_for_method,
)
from immersion_census.census.reference_counts import GENERAL_BY_GENUS, UNIVERSE_ORBITS


@pytest.mark.parametrize("label", ["X", "Y", "Z"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_counts(classes_for, label, n):
    assert len(classes_for(Method(label), n)) == UNIVERSE_ORBITS[label][n - 1]


def test_z_and_y_with_four_double_points(classes_for):
    assert len(classes_for(Method.Z, 4)) == 218
    assert len(classes_for(Method.Y, 4)) == 54


@pytest.mark.slow
def test_x_with_four_double_points(classes_for):
    classes = classes_for(Method.X, 4)
    assert len(classes) == 121
    assert genus_histogram(classes) == [21, 64, 36]
    assert Counter(c.stab_order for c in classes) == {1: 92, 2: 23, 4: 6}


@pytest.mark.slow
def test_y_with_five_double_points(classes_for):
    classes = classes_for(Method.Y, 5)
    assert len(classes) == 420
    assert Counter(c.stab_order for c in classes) == {1: 352, 2: 62, 5: 4, 10: 2}


@pytest.mark.parametrize("method", list(Method))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_stabilizer_and_sum_rule(classes_for, method, n):
    classes = classes_for(method, n)
    order = group_for_method(method, n).order
    assert all(c.orbit_len * c.stab_order == order for c in classes)
    assert sum(c.orbit_len for c in classes) == universe_for_method(method, n).size
    assert all(c.recomputed_genus() == c.g for c in classes)


def test_classes_are_sorted_by_genus_then_representative(classes_for):
    classes = classes_for(Method.Z, 4)
    assert classes == sorted(classes, key=lambda c: (c.g, c.rep.array))
    assert genus_histogram(classes) == list(GENERAL_BY_GENUS["OO"][3])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_engines_agree_on_z(n):
    results = [enumerate_classes(Method.Z, n, engine=e) for e in Engine]
    assert results[0] == results[1] == results[2]


def test_u_dihedral_spherical_classes_with_five_double_points(classes_for):
    classes = classes_for(Method.U_DIHEDRAL, 5)
    assert sum(1 for c in classes if c.g == 0) == 198


@pytest.mark.slow
def test_u_dihedral_with_seven_double_points(classes_for):
    classes = classes_for(Method.U_DIHEDRAL, 7)
    assert len(classes) == UNIVERSE_ORBITS["Y"][6]
    assert genus_histogram(classes) == [7658, 20516, 15812, 2484]


def test_envelope():
    with pytest.raises(OutOfEnvelopeError):
        check_envelope(Method.X, 6)
    check_envelope(Method.X, 6, allow_slow=True)
    with pytest.raises(ValueError, match="at least 1"):
        check_envelope(Method.Z, 0)


def test_envelope_depends_on_engine():
    check_envelope(Method.U_DIHEDRAL, 8)
    with pytest.raises(OutOfEnvelopeError):
        check_envelope(Method.U_CYCLIC, 9)
    with pytest.raises(OutOfEnvelopeError):
        check_envelope(Method.Z, 7)
    check_envelope(Method.Z, 7, engine=Engine.DOUBLE_COSET)
    with pytest.raises(OutOfEnvelopeError, match="n <= 7"):
        check_envelope(Method.Z, 8, engine="double-coset")
    assert envelope_for(Method.Z, Engine.SWEEP) == envelope_for(Method.Z) == 6


@pytest.mark.parametrize(
    "method, engine",
    [(Method.U_DIHEDRAL, Engine.ORDERLY), (Method.Y, Engine.DOUBLE_COSET)],
)
def test_engine_must_fit_the_method(method, engine):
    with pytest.raises(ValueError):
        enumerate_classes(method, 2, engine=engine)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_naive_estimate_for_z(n):
    assert naive_estimate(Method.Z, n) == Fraction(factorial(2 * n - 1), factorial(n))


def test_empty_histogram():
    assert genus_histogram([]) == []
