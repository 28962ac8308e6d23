from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from immersion_census.permcore.perm import Perm
from immersion_census.permcore.ranking import (
    RankOutOfRangeError,
    pack_array,
    perm_rank,
    perm_unrank,
)


ranks = st.integers(min_value=1, max_value=8).flatmap(
    lambda m: st.tuples(st.just(m), st.integers(0, factorial(m) - 1))
)


@given(ranks)
def test_unrank_then_rank(pair):
    m, i = pair
    assert perm_rank(perm_unrank(i, m)) == i


def test_rank_follows_lexicographic_order():
    ranked = [perm_rank(Perm.from_array(a)) for a in permutations(range(4))]
    assert ranked == list(range(24))


@pytest.mark.parametrize("i", [-1, 24])
def test_rank_out_of_range(i):
    with pytest.raises(RankOutOfRangeError):
        perm_unrank(i, 4)


def test_pack_array_is_injective():
    keys = {pack_array(a) for a in permutations(range(5))}
    assert len(keys) == 120
