"""The fixed gauge permutations every encoding refers to.

All are built for a given number of double points ``n``.
"""

from functools import cache

from immersion_census.permcore.perm import Perm


@cache
def x_sigma(n: int) -> Perm:
    """σ = (1,2,3,4)(5,6,7,8)… in S₄ₙ, the vertex rotation of the X method."""
    return Perm.from_array(tuple(4 * (i // 4) + (i + 1) % 4 for i in range(4 * n)))


@cache
def x_sigma_squared(n: int) -> Perm:
    """σ² = (1,3)(2,4)(5,7)(6,8)…, pairing opposite half-edges."""
    return Perm.from_array(tuple(4 * (i // 4) + (i + 2) % 4 for i in range(4 * n)))


@cache
def rho0(n: int) -> Perm:
    """ρ₀ = (1,2)(3,4)…(2n−1,2n)."""
    return Perm.from_array(tuple(i ^ 1 for i in range(2 * n)))


@cache
def beta(n: int) -> Perm:
    """β = (1,2,…,2n)."""
    return Perm.from_array(tuple((i + 1) % (2 * n) for i in range(2 * n)))


@cache
def alpha0(n: int) -> Perm:
    """α₀ = (1,3,…,2n−1)(2,2n,2n−2,…,4), the gauge value of σρσ⁻¹ρ on U."""
    m = 2 * n
    return Perm.from_array(tuple((i + 2) % m if i % 2 == 0 else (i - 2) % m for i in range(m)))


@cache
def reversal(n: int) -> Perm:
    """r = [2n, 2n−1, …, 1]."""
    m = 2 * n
    return Perm.from_array(tuple(m - 1 - i for i in range(m)))


@cache
def sigma_r(n: int) -> Perm:
    """σ_r = (2,2n)(3,2n−1)…, the reflection with β^{σ_r} = β⁻¹."""
    m = 2 * n
    return Perm.from_array(tuple((-i) % m for i in range(m)))
