from math import factorial

import pytest

from immersion_census.permcore.partitions import centralizer_order, class_size, partitions_of


@pytest.mark.parametrize("m, count", [(0, 1), (1, 1), (4, 5), (5, 7), (10, 42)])
def test_partition_counts(m, count):
    parts = partitions_of(m)
    assert len(parts) == count
    assert len(set(parts)) == count
    assert all(sum(p) == m for p in parts)


@pytest.mark.parametrize("m", range(1, 9))
def test_class_sizes_sum_to_group_order(m):
    assert sum(class_size(t) for t in partitions_of(m)) == factorial(m)


def test_centralizer_order():
    assert centralizer_order((2, 2, 1)) == 2**2 * 2 * 1
    assert class_size((3, 1)) == 8
