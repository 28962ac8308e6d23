import pytest

from immersion_census.census.enumerate_classes import genus_histogram
from immersion_census.census.immersion_class import Method
from immersion_census.census.kinds import KIND_SOURCES, classes_of_kind, source_method
from immersion_census.census.reference_counts import BICOLOURABLE_BY_GENUS, GENERAL_BY_GENUS


def histogram(classes_for, kind, n):
    return tuple(genus_histogram(classes_of_kind(kind, lambda m: classes_for(m, n))))


@pytest.mark.parametrize("kind", list(GENERAL_BY_GENUS))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_general_kinds(classes_for, kind, n):
    assert histogram(classes_for, kind, n) == GENERAL_BY_GENUS[kind][n - 1]


@pytest.mark.parametrize("kind", list(BICOLOURABLE_BY_GENUS))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bicolourable_kinds(classes_for, kind, n):
    assert histogram(classes_for, kind, n) == BICOLOURABLE_BY_GENUS[kind][n - 1]


def test_every_kind_has_a_source():
    assert len(KIND_SOURCES) == 12
    assert source_method("uu") == Method.Z
    assert source_method("OUb") == Method.U_CYCLIC
    assert source_method("uoc") == Method.U_DIHEDRAL


def test_unknown_kind():
    with pytest.raises(ValueError):
        source_method("ZZ")
