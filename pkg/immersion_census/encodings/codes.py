"""Permutation encodings of one-component 4-valent maps.

Each code carries the number of double points ``n`` and the one free
permutation of its method; the other permutations (σ for X, ρ₀ for Y and Z,
β for U) are fixed gauges from ``permcore.fixed_perms``.
"""

from dataclasses import dataclass

from immersion_census.permcore.fixed_perms import beta
from immersion_census.permcore.perm import Perm, compose, format_cycles, parse_perm


class InvalidCodeError(ValueError):
    """Raised when a permutation does not have the shape its encoding requires."""

    pass


@dataclass(frozen=True)
class XCode:
    """Half-edge encoding: τ ∈ [2^{2n}] in S₄ₙ against σ = (1,2,3,4)(5,6,7,8)…"""

    n: int
    tau: Perm

    def __post_init__(self) -> None:
        if self.tau.degree != 4 * self.n:
            raise InvalidCodeError(f"τ must have degree {4 * self.n}, got {self.tau.degree}")


@dataclass(frozen=True)
class YCode:
    """Bicoloured encoding: σ ∈ S₂ₙ against ρ₀ = (1,2)(3,4)…"""

    n: int
    sigma: Perm

    def __post_init__(self) -> None:
        if self.sigma.degree != 2 * self.n:
            raise InvalidCodeError(f"σ must have degree {2 * self.n}, got {self.sigma.degree}")


@dataclass(frozen=True)
class UCode:
    """Gauge-fixed bicoloured encoding σ = β·ξ with ξ in the hyperoctahedral group."""

    n: int
    xi: Perm

    @property
    def sigma(self) -> Perm:
        return compose(beta(self.n), self.xi)


@dataclass(frozen=True)
class ZCode:
    """Oriented-curve encoding: a 2n-cycle π against ρ₀."""

    n: int
    pi: Perm

    def __post_init__(self) -> None:
        if self.pi.degree != 2 * self.n:
            raise InvalidCodeError(f"π must have degree {2 * self.n}, got {self.pi.degree}")


def code_to_text(perm: Perm) -> dict[str, int | str]:
    """Serialized form: cycle string plus explicit degree."""
    return {"degree": perm.degree, "cycles": format_cycles(perm)}


def code_from_text(record: dict) -> Perm:
    return parse_perm(str(record["cycles"]), int(record["degree"]))
