import pytest

from immersion_census.census.filters import (
    curve_graph,
    filter_kink_free,
    filter_prime,
    is_indecomposable,
    is_irreducible,
)
from immersion_census.census.immersion_class import Method
from immersion_census.census.kinds import classes_of_kind
from immersion_census.census.reference_counts import (
    KINK_FREE_SPHERICAL,
    PRIME_SPHERICAL,
    SPHERICAL,
)


def spherical(classes_for, kind, n):
    return [c for c in classes_of_kind(kind, lambda m: classes_for(m, n)) if c.g == 0]


N_VALUES = [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)]


@pytest.mark.parametrize("kind", ["OO", "UO", "OU", "UU", "UOc"])
@pytest.mark.parametrize("n", N_VALUES)
def test_kink_free_spherical_counts(classes_for, kind, n):
    kept = [c for c in spherical(classes_for, kind, n) if filter_kink_free(c)]
    assert len(kept) == KINK_FREE_SPHERICAL[kind][n - 1]


@pytest.mark.parametrize("kind", ["OO", "UO", "OU", "UU", "UOc"])
@pytest.mark.parametrize("n", N_VALUES)
def test_prime_spherical_counts(classes_for, kind, n):
    kept = [c for c in spherical(classes_for, kind, n) if all(filter_prime(c))]
    assert len(kept) == PRIME_SPHERICAL[kind][n - 1]


@pytest.mark.parametrize("method", [Method.X, Method.Y, Method.U_DIHEDRAL, Method.Z])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_curve_graph_is_four_regular(classes_for, method, n):
    for c in classes_for(method, n):
        graph = curve_graph(c)
        assert graph.number_of_edges() == 2 * n
        assert all(d == 4 for _, d in graph.degree())


def test_prime_curves_have_no_kinks(classes_for):
    for n in (2, 3, 4):
        for c in classes_for(Method.Z, n):
            if is_irreducible(c) and is_indecomposable(c):
                assert filter_kink_free(c)


def test_single_crossing_is_a_kink(classes_for):
    (c,) = classes_for(Method.Z, 1)
    assert not filter_kink_free(c)
    assert filter_prime(c) == (False, True)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7, 8])
def test_bicolourable_spherical_rows_up_to_eight(classes_for, n):
    curves = spherical(classes_for, "UOc", n)
    assert len(curves) == SPHERICAL["UOc"][n - 1]
    assert sum(1 for c in curves if filter_kink_free(c)) == KINK_FREE_SPHERICAL["UOc"][n - 1]
    assert sum(1 for c in curves if all(filter_prime(c))) == PRIME_SPHERICAL["UOc"][n - 1]
