from math import factorial

import pytest

from immersion_census.census.reference_counts import Z_PRIME_BY_GENUS
from immersion_census.encodings.codes import InvalidCodeError, ZCode
from immersion_census.encodings.z_method import (
    is_single_cycle,
    psi_array,
    z_genus,
    z_genus_partition,
    z_prime_arrays,
    z_prime_size,
)
from immersion_census.permcore.perm import cycle_count_array, identity, parse_perm

PI = "(1,2,7,8,3,5,6,9,10,4)"


def test_faces_of_worked_example():
    pi = parse_perm(PI, 10)
    assert cycle_count_array(psi_array(pi.array, 5)) == 7
    assert z_genus(ZCode(5, pi)) == 0


def test_pi_must_be_cyclic():
    with pytest.raises(InvalidCodeError):
        z_genus(ZCode(2, identity(4)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_z_prime_enumerates_every_cycle_once(n):
    arrays = list(z_prime_arrays(n))
    assert len(arrays) == len(set(arrays)) == z_prime_size(n) == factorial(2 * n - 1)
    assert all(is_single_cycle(a) for a in arrays)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_genus_partition(n):
    assert z_genus_partition(n) == list(Z_PRIME_BY_GENUS[n - 1])


@pytest.mark.slow
def test_genus_partition_five():
    assert z_genus_partition(5) == list(Z_PRIME_BY_GENUS[4])
