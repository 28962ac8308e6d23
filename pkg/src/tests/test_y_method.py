from math import factorial

import pytest

from immersion_census.census.immersion_class import Method, group_for_method
from immersion_census.encodings.codes import UCode, YCode
from immersion_census.encodings.y_method import (
    beta_code,
    convert_u_to_y,
    hyperoctahedral_arrays,
    is_one_component_y,
    u_enumerate,
    u_sigma_arrays,
    y_classify,
    y_prime_arrays,
    y_prime_generate,
    y_prime_size,
)
from immersion_census.grouporbits.canonical_form import canonical_form_array
from immersion_census.permcore.fixed_perms import rho0
from immersion_census.permcore.perm import identity, parse_perm


def test_worked_example_is_spherical():
    sigma = parse_perm("[3,5,7,1,2,6,4,8]")
    assert y_classify(YCode(4, sigma)) == 0


def test_several_components():
    # σ = e gives ρ̃ρ = e, i.e. 2n fixed points instead of two n-cycles
    assert y_classify(YCode(3, identity(6))) is None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_y_prime_size(n):
    assert sum(1 for _ in y_prime_arrays(n)) == y_prime_size(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gauge_fixed_codes_are_one_component(n):
    sigmas = list(u_sigma_arrays(n))
    assert len(sigmas) == len(set(sigmas)) == 2**n * factorial(n)
    assert all(is_one_component_y(s, n) for s in sigmas)


def test_hyperoctahedral_elements_commute_with_rho():
    rho = rho0(3).array
    for xi in hyperoctahedral_arrays(3):
        assert tuple(xi[r] for r in rho) == tuple(rho[x] for x in xi)


def test_u_codes_convert_to_y():
    for c in u_enumerate(2):
        assert isinstance(c, UCode)
        assert convert_u_to_y(c).sigma == c.sigma


@pytest.mark.parametrize("n", [1, 2, 5])
def test_beta_is_spherical(n):
    assert y_classify(beta_code(n)) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generated_codes_are_one_component(n):
    codes = list(y_prime_generate(n))
    assert len(codes) == y_prime_size(n)
    assert all(y_classify(c) is not None for c in codes)


@pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_dihedral_and_hyperoctahedral_stabilizers_agree_on_u(n):
    dihedral = group_for_method(Method.U_DIHEDRAL, n)
    hyperoctahedral = group_for_method(Method.Y, n)
    for sigma in u_sigma_arrays(n):
        omega = canonical_form_array(sigma, dihedral)[1]
        assert omega == canonical_form_array(sigma, hyperoctahedral)[1]
