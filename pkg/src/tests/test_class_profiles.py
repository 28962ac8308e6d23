import pytest

from immersion_census.cosetcount.class_profiles import (
    UnsupportedProfileError,
    diagonal_profile,
    enumerated_profile,
    full_symmetric_profile,
    profile_of,
)
from immersion_census.grouporbits.group_spec import GroupName, make_group


@pytest.mark.parametrize(
    "name, n",
    [
        (GroupName.CYCLIC_ON_POINTS, 3),
        (GroupName.DIHEDRAL_ON_POINTS, 3),
        (GroupName.DIHEDRAL_ON_POINTS, 4),
        (GroupName.C_RHO_PRIME, 4),
        (GroupName.C_RHO_PRIME_EXT, 2),
        (GroupName.C_RHO_PRIME_EXT, 3),
        (GroupName.C_RHO_PRIME_EXT, 4),
        (GroupName.C_RHO, 3),
        (GroupName.C_TAU, 1),
        (GroupName.C_SIGMA, 2),
    ],
)
def test_closed_forms_match_enumeration(name, n):
    group = make_group(name, n)
    assert profile_of(group) == enumerated_profile(group)
    assert profile_of(group).order == group.order


def test_coset_profile_keeps_even_parts_split():
    profile = profile_of(make_group(GroupName.C_RHO_PRIME_EXT, 2))
    assert profile.counts == {(1, 1, 1, 1): 1, (2, 2): 3}
    assert diagonal_profile(4, with_coset=True).counts[(2, 2, 2, 2)] == 3 + 1 + 6 + 3


def test_full_symmetric_profile_order():
    assert full_symmetric_profile(6).order == 720


def test_unmaterialized_group_without_closed_form(monkeypatch):
    monkeypatch.setenv("CENSUS_MATERIALIZE_LIMIT", "1")
    with pytest.raises(UnsupportedProfileError):
        profile_of(make_group(GroupName.D_N, 3))
