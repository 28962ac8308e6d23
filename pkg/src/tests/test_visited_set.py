import pytest

from immersion_census.grouporbits.visited_set import (
    MemoryBudgetExceededError,
    PackedSet,
    RankBitmap,
    make_visited_set,
)


def test_bitmap_for_small_degrees():
    visited = make_visited_set(6, 720, memory_mb=16)
    assert isinstance(visited, RankBitmap)
    visited.add((1, 0, 2, 3, 4, 5))
    visited.add((1, 0, 2, 3, 4, 5))
    assert (1, 0, 2, 3, 4, 5) in visited
    assert (0, 1, 2, 3, 4, 5) not in visited
    assert len(visited) == 1


def test_packed_set_for_sparse_universes():
    # 16! bits is far more than a few thousand set entries
    visited = make_visited_set(16, 1000, memory_mb=16)
    assert isinstance(visited, PackedSet)
    a = tuple(reversed(range(16)))
    visited.add(a)
    assert a in visited
    assert len(visited) == 1


def test_budget_exceeded():
    with pytest.raises(MemoryBudgetExceededError):
        make_visited_set(20, 10**9, memory_mb=1)
