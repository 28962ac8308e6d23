from fractions import Fraction
from math import factorial

from sympy import isprime

from immersion_census.cosetcount.class_profiles import ClassProfile, profile_of
from immersion_census.grouporbits.group_spec import GroupName, make_group
from immersion_census.permcore.partitions import class_size
from immersion_census.permcore.perm import DegreeMismatchError
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

KIND_GROUPS = {
    "OO": (GroupName.CYCLIC_ON_POINTS, GroupName.C_RHO_PRIME),
    "UO": (GroupName.DIHEDRAL_ON_POINTS, GroupName.C_RHO_PRIME),
    "OU": (GroupName.CYCLIC_ON_POINTS, GroupName.C_RHO_PRIME_EXT),
    "UU": (GroupName.DIHEDRAL_ON_POINTS, GroupName.C_RHO_PRIME_EXT),
}


class NotPrimeError(ValueError):
    """Raised when the prime-n closed form is asked for a composite n."""

    pass


def frobenius_count(h: ClassProfile, k: ClassProfile) -> int:
    """Number of double cosets H\\S_m/K.

    |H\\G/K| = m!/(|H||K|) · Σ_μ |H_μ||K_μ|/|G_μ|, over classes meeting both groups.

    Raises:
        DegreeMismatchError: If the profiles have different degrees.

    """
    if h.degree != k.degree:
        raise DegreeMismatchError(f"Profile degrees differ: {h.degree} != {k.degree}")
    small, large = (h, k) if len(h.counts) <= len(k.counts) else (k, h)
    total = Fraction(0)
    for mu, count in small.counts.items():
        other = large.counts.get(mu)
        if other:
            total += Fraction(count * other, class_size(mu))
    result = Fraction(factorial(h.degree), h.order * k.order) * total
    if result.denominator != 1:
        raise ArithmeticError(f"Frobenius sum is not an integer: {result}")
    return int(result)


@loggable
def count_total_immersions(kind: str, n: int) -> int:
    """All-genus number of immersion classes of one of the kinds OO, UO, OU, UU.

    Args:
        kind (str): Orientation kind.
        n (int): Number of double points.

    Returns:
        int: Exact count.

    """
    h_name, k_name = KIND_GROUPS[kind.upper()]
    count = frobenius_count(profile_of(make_group(h_name, n)), profile_of(make_group(k_name, n)))
    logger.debug(f"{kind.upper()} n={n}: {count}")
    return count


@loggable
def count_x_orbits(n: int) -> int:
    """Number of 𝒞_σ-orbits on all fixed-point-free involutions of 4n points."""
    return frobenius_count(
        profile_of(make_group(GroupName.C_SIGMA, n)), profile_of(make_group(GroupName.C_TAU, n))
    )


def prime_n_orbit_formula(n: int) -> int:
    """n − 1 + (2n−1)!/n!, the OO total when n is prime.

    Raises:
        NotPrimeError: If ``n`` is not prime.

    """
    if not isprime(n):
        raise NotPrimeError(f"{n} is not prime")
    return n - 1 + factorial(2 * n - 1) // factorial(n)
