import pandas as pd
import pytest

from immersion_census.census.derive_counts import (
    CountTable,
    InconsistentCountsError,
    MissingProfileError,
    derive_counts,
    normalize_kind,
)
from immersion_census.census.immersion_class import Method
from immersion_census.census.reference_counts import (
    BICOLOURABLE_BY_GENUS,
    GENERAL_BY_GENUS,
    PROFILES_U_CYCLIC_SM,
    PROFILES_U_CYCLIC_SR,
    PROFILES_Y_SM,
    PROFILES_Z_RM,
)
from immersion_census.census.symmetry_profile import InvolutionPair, SymmetryProfile


def profiles_from(method, pair, rows_by_n):
    return [
        SymmetryProfile(method, InvolutionPair(pair), n, g, *five)
        for n, rows in rows_by_n.items()
        for g, five in enumerate(rows)
    ]


def row(table, kind, n):
    return tuple(table.count(kind, n, g) for g in table.select(kind=kind).genera(n))


@pytest.fixture(scope="module")
def reference_table():
    profiles = (
        profiles_from(Method.Z, "rm", PROFILES_Z_RM)
        + profiles_from(Method.U_CYCLIC, "sr", PROFILES_U_CYCLIC_SR)
        + profiles_from(Method.U_CYCLIC, "sm", PROFILES_U_CYCLIC_SM)
        + profiles_from(Method.Y, "sm", PROFILES_Y_SM)
    )
    return derive_counts(profiles)


@pytest.mark.parametrize("kind", ["OO", "UO", "OU", "UU"])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_general_kinds_from_reverse_mirror_profiles(reference_table, kind, n):
    assert row(reference_table, kind, n) == GENERAL_BY_GENUS[kind][n - 1]


@pytest.mark.parametrize("kind", ["OOc", "OOb", "OUc", "OUb", "UOc", "UOb"])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_bicolourable_kinds_from_cyclic_profiles(reference_table, kind, n):
    assert row(reference_table, kind, n) == BICOLOURABLE_BY_GENUS[kind][n - 1]


@pytest.mark.parametrize("kind", ["UUc", "UUb"])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_unoriented_bicolourable_kinds_from_swap_mirror_profiles(reference_table, kind, n):
    assert row(reference_table, kind, n) == BICOLOURABLE_BY_GENUS[kind][n - 1]


def test_required_kind_missing():
    profiles = profiles_from(Method.Z, "rm", {3: PROFILES_Z_RM[3]})
    assert derive_counts(profiles, required=["uu"]).total("UU", 3) == 12
    with pytest.raises(MissingProfileError):
        derive_counts(profiles, required=["UUb"])


def test_profile_without_derivation():
    with pytest.raises(MissingProfileError):
        derive_counts([SymmetryProfile(Method.X, InvolutionPair.RM, 1, 0, 1, 0, 0, 0, 0)])


def test_disagreeing_profiles():
    y = SymmetryProfile(Method.Y, InvolutionPair.SM, 2, 0, 1, 0, 0, 1, 0)
    u = SymmetryProfile(Method.U_DIHEDRAL, InvolutionPair.SM, 2, 0, 1, 0, 0, 2, 0)
    assert derive_counts([y, y]).count("UOc", 2, 0) == 3
    with pytest.raises(InconsistentCountsError):
        derive_counts([y, u])


@pytest.mark.parametrize(("raw", "kind"), [("uub", "UUb"), ("OO", "OO"), ("uOC", "UOc")])
def test_normalize_kind(raw, kind):
    assert normalize_kind(raw) == kind


@pytest.mark.parametrize("raw", ["XX", "OOd", ""])
def test_unknown_kind(raw):
    with pytest.raises(ValueError):
        normalize_kind(raw)


def test_count_table_queries():
    table = CountTable.from_records(
        [("UU", 4, 1, 45), ("UU", 4, 0, 19), ("UU", 4, 2, 22), ("OO", 4, 0, 37)]
    )
    assert table.kinds() == ["OO", "UU"]
    assert table.genera(4) == [0, 1, 2]
    assert table.total("UU", 4) == 86
    assert table.has("OO", 4) and not table.has("OO", 4, 1)
    assert len(table.select(g=0)) == 2
    assert list(table.select(kind="UU").frame["g"]) == [0, 1, 2]
    with pytest.raises(MissingProfileError):
        table.count("OO", 5, 0)
    totals = table.totals()
    assert dict(zip(totals["kind"], totals["count"], strict=True)) == {"OO": 37, "UU": 86}


def test_counts_stay_exact():
    big = 8384177419658944198600637096
    table = CountTable.from_records([("OO", 20, 0, big)])
    assert table.count("OO", 20, 0) == big
    assert table.total("OO", 20) == big


def test_merge():
    a = CountTable.from_records([("UU", 3, 0, 6)])
    b = CountTable.from_records([("UU", 3, 0, 6), ("UU", 3, 1, 5)])
    assert len(a.merge(b)) == 2
    with pytest.raises(InconsistentCountsError):
        a.merge(CountTable.from_records([("UU", 3, 0, 7)]))


def test_empty_table():
    table = CountTable()
    assert len(table) == 0
    assert table.kinds() == []
    assert isinstance(table.frame, pd.DataFrame)
