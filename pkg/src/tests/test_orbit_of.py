import pytest

from immersion_census.grouporbits.group_spec import GroupName, make_group
from immersion_census.grouporbits.orbit_of import OrbitTooLargeError, orbit_of, stabilizer_order
from immersion_census.permcore.fixed_perms import beta
from immersion_census.permcore.perm import DegreeMismatchError, Perm, identity


def test_orbit_of_beta_under_pair_relabelling():
    group = make_group(GroupName.C_RHO_PRIME, 3)
    summary, members = orbit_of(beta(3), group)
    assert len(members) == len(set(members)) == summary.length
    assert summary.length * summary.omega == group.order
    assert stabilizer_order(beta(3), group) == summary.omega


def test_identity_is_fixed():
    group = make_group(GroupName.C_RHO, 3)
    summary, members = orbit_of(identity(6), group)
    assert members == [identity(6)]
    assert summary.omega == group.order


def test_orbit_cap():
    group = make_group(GroupName.C_RHO, 3)
    with pytest.raises(OrbitTooLargeError):
        orbit_of(Perm([2, 3, 4, 5, 6, 1]), group, cap=2)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        orbit_of(identity(4), make_group(GroupName.C_RHO, 3))
