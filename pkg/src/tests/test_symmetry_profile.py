import pytest

from immersion_census.census.immersion_class import Method
from immersion_census.census.involutions import Involution
from immersion_census.census.reference_counts import (
    GENERAL_BY_GENUS,
    PROFILES_U_CYCLIC_SM,
    PROFILES_U_CYCLIC_SR,
    PROFILES_Y_SM,
    PROFILES_Z_RM,
    TOTALS,
)
from immersion_census.census.symmetry_profile import (
    ClassIndex,
    IncompleteClassListError,
    InvolutionPair,
    SymmetryProfile,
    merge_classes,
    single_involution_counts,
    symmetry_profile,
)


def five_plets(classes, pair):
    return tuple(p.as_tuple() for p in symmetry_profile(classes, pair).values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_z_reverse_mirror_profiles(classes_for, n):
    assert five_plets(classes_for(Method.Z, n), "rm") == PROFILES_Z_RM[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_z_reverse_mirror_profiles_beyond_four(classes_for, n):
    assert five_plets(classes_for(Method.Z, n), "rm") == PROFILES_Z_RM[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_u_cyclic_profiles(classes_for, n):
    classes = classes_for(Method.U_CYCLIC, n)
    assert five_plets(classes, "sr") == PROFILES_U_CYCLIC_SR[n]
    assert five_plets(classes, "sm") == PROFILES_U_CYCLIC_SM[n]


@pytest.mark.parametrize(
    "n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow)]
)
def test_y_and_u_dihedral_swap_mirror_profiles_agree(classes_for, n):
    assert five_plets(classes_for(Method.Y, n), "sm") == PROFILES_Y_SM[n]
    assert five_plets(classes_for(Method.U_DIHEDRAL, n), "sm") == PROFILES_Y_SM[n]


def test_profile_arithmetic():
    p = SymmetryProfile(Method.Z, InvolutionPair.RM, 4, 0, 5, 0, 0, 12, 2)
    assert p.total == 37
    assert p.modulo_i == 21
    assert p.modulo_j == 21
    assert p.modulo_both == 19
    assert (p.r_i, p.s_i, p.r_j, p.s_j) == (5, 16, 5, 16)


def test_pair_members():
    assert InvolutionPair("rm").first == Involution.REVERSE
    assert InvolutionPair("rm").second == Involution.MIRROR


def test_single_involution_counts(classes_for):
    # (x, y, z, v, w) = (3, 0, 0, 3, 0) for n = 3, g = 0
    assert single_involution_counts(classes_for(Method.Z, 3), "m")[0] == (3, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_merging_by_reverse_and_mirror(classes_for, n):
    merged = merge_classes(classes_for(Method.Z, n), ["r", "m"])
    assert len(merged) == TOTALS["UU"][n - 1]
    assert sum(1 for c in merged if c.g == 0) == GENERAL_BY_GENUS["UU"][n - 1][0]


def test_merging_keeps_the_smallest_representative(classes_for):
    classes = classes_for(Method.Z, 3)
    index = ClassIndex(classes)
    for c in merge_classes(classes, ["r"]):
        assert c.rep <= index.image(c, [Involution.REVERSE]).rep


def test_incomplete_class_list(classes_for):
    classes = classes_for(Method.Z, 3)
    index = ClassIndex(classes)
    chiral = next(c for c in classes if index.image(c, [Involution.MIRROR]) is not c)
    with pytest.raises(IncompleteClassListError):
        symmetry_profile([chiral], "rm")
