"""Colour swap, mirror and orientation reversal, acting on each method's codes.

The formulas depend on the encoding:

    Y:  s(σ) = σ⁻¹ρ₀,          m(σ) = σρ₀
    U:  s(σ) = β⁻¹ρ₀σ⁻¹β,      m(σ) = σρ₀,    r(σ) = rσr
    Z:                          m(π) = ρ₀πρ₀,  r(π) = π⁻¹

Each image stays in the same universe, and the three maps commute on classes.
"""

from collections.abc import Callable
from enum import StrEnum

from immersion_census.census.immersion_class import Method
from immersion_census.permcore.fixed_perms import beta, reversal, rho0
from immersion_census.permcore.perm import (
    Array,
    Perm,
    compose_arrays,
    conjugate_arrays,
    inverse_array,
)


class UnavailableInvolutionError(ValueError):
    """Raised when an involution has no meaning for the chosen method."""

    pass


class Involution(StrEnum):
    SWAP = "s"
    MIRROR = "m"
    REVERSE = "r"


AVAILABLE = {
    Method.X: frozenset(),
    Method.Y: frozenset({Involution.SWAP, Involution.MIRROR}),
    Method.U_DIHEDRAL: frozenset(Involution),
    Method.U_CYCLIC: frozenset(Involution),
    Method.Z: frozenset({Involution.REVERSE, Involution.MIRROR}),
}

_NAMES = {"swap": Involution.SWAP, "mirror": Involution.MIRROR, "reverse": Involution.REVERSE}


def parse_involutions(which: str | Involution) -> list[Involution]:
    """``"swap"``, ``"s"`` or a composition such as ``"sm"``, applied right to left.

    Raises:
        UnavailableInvolutionError: For an unknown name.

    """
    if which in _NAMES:
        return [_NAMES[which]]
    try:
        return [Involution(ch) for ch in reversed(str(which))]
    except ValueError as e:
        raise UnavailableInvolutionError(f"Unknown involution {which!r}") from e


def involution_array_map(
    method: Method | str, which: Involution, n: int
) -> Callable[[Array], Array]:
    """The array-level action of one involution for ``method``.

    Raises:
        UnavailableInvolutionError: If ``which`` is not defined for ``method``.

    """
    method = Method(method)
    if which not in AVAILABLE[method]:
        raise UnavailableInvolutionError(f"{which.name.lower()} is not available for {method}")
    rho = rho0(n).array
    if which == Involution.MIRROR:
        if method == Method.Z:
            return lambda a: conjugate_arrays(a, rho, rho)
        return lambda a: compose_arrays(a, rho)
    if which == Involution.REVERSE:
        if method == Method.Z:
            return inverse_array
        rev = reversal(n).array
        return lambda a: conjugate_arrays(a, rev, rev)
    if method == Method.Y:
        return lambda a: compose_arrays(inverse_array(a), rho)
    b = beta(n).array
    b_inv = inverse_array(b)
    return lambda a: compose_arrays(b_inv, compose_arrays(rho, compose_arrays(inverse_array(a), b)))


def apply_involution(method: Method | str, which: str | Involution, x: Perm) -> Perm:
    """Image of a code under swap, mirror, reverse or a composition of them.

    Args:
        method (Method | str): Census method ``x`` belongs to.
        which (str | Involution): Involution name, letter, or letters such as ``"rm"``.
        x (Perm): A valid code of the method.

    Returns:
        Perm: The transformed code, valid for the same method.

    Raises:
        UnavailableInvolutionError: If an involution is not defined for the method.

    """
    n = x.degree // (4 if Method(method) == Method.X else 2)
    a = x.array
    for inv in parse_involutions(which):
        a = involution_array_map(method, inv, n)(a)
    return Perm.from_array(a)
