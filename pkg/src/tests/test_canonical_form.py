import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from immersion_census.grouporbits.canonical_form import (
    GroupTooLargeError,
    block_canonical_form,
    canonical_form,
    materialized_canonical_form,
)
from immersion_census.grouporbits.group_spec import GroupName, make_group
from immersion_census.grouporbits.orbit_of import orbit_of
from immersion_census.permcore.perm import Perm, conjugate

BLOCK_GROUPS = [
    (GroupName.C_RHO, 3),
    (GroupName.C_RHO_PRIME, 3),
    (GroupName.C_RHO_PRIME_EXT, 3),
    (GroupName.C_SIGMA, 2),
]


@pytest.mark.parametrize("name, n", BLOCK_GROUPS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_block_canonizer_matches_element_scan(name, n, data):
    group = make_group(name, n)
    x = data.draw(st.permutations(range(group.degree)).map(tuple))
    assert block_canonical_form(x, group.block_action) == materialized_canonical_form(x, group)


@pytest.mark.parametrize("name, n", BLOCK_GROUPS)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_canonical_form_is_an_orbit_invariant(name, n, data):
    group = make_group(name, n)
    x = Perm.from_array(data.draw(st.permutations(range(group.degree)).map(tuple)))
    g = data.draw(st.sampled_from(group.elements))
    assert canonical_form(conjugate(x, g), group) == canonical_form(x, group)


def test_stabilizer_times_orbit_is_group_order():
    group = make_group(GroupName.D_N, 4)
    x = Perm([2, 1, 4, 3, 6, 5, 8, 7])
    summary, members = orbit_of(x, group)
    canon, omega = canonical_form(x, group)
    assert summary.canonical == canon == min(members)
    assert summary.omega == omega
    assert summary.length * omega == group.order


def test_no_canonizer_for_large_unstructured_groups(monkeypatch):
    monkeypatch.setenv("CENSUS_MATERIALIZE_LIMIT", "1")
    group = make_group(GroupName.D_N, 4)
    with pytest.raises(GroupTooLargeError):
        canonical_form(Perm(range(1, 9)), group)
