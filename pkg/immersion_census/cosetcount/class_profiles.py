from collections import Counter
from dataclasses import dataclass, field
from math import factorial, gcd

from immersion_census.grouporbits.group_spec import GroupName, GroupSpec
from immersion_census.permcore.partitions import centralizer_order, class_size, partitions_of
from immersion_census.permcore.perm import CycleType, cycle_analysis, cycle_type
from immersion_census.utils.custom_logger import loggable


class UnsupportedProfileError(ValueError):
    """Raised when no closed form or element list is available for a group."""

    pass


@dataclass(frozen=True)
class ClassProfile:
    """|H ∩ G_μ| for every conjugacy class μ of S_degree meeting H."""

    degree: int
    counts: dict[CycleType, int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return sum(self.counts.values())


def cyclic_profile(m: int) -> ClassProfile:
    """Profile of ⟨β⟩, β an m-cycle: β^j has type d^{m/d}, d = m/gcd(j, m)."""
    counts: Counter = Counter()
    for j in range(m):
        d = m // gcd(j, m)
        counts[(d,) * (m // d)] += 1
    return ClassProfile(m, dict(counts))


def dihedral_profile(n: int) -> ClassProfile:
    """Profile of ⟨β, σ_r⟩ on 2n points, n ≥ 2."""
    counts = Counter(cyclic_profile(2 * n).counts)
    counts[(2,) * (n - 1) + (1, 1)] += n
    counts[(2,) * n] += n
    return ClassProfile(2 * n, dict(counts))


def _coset_parts(lam: CycleType) -> list[int]:
    parts: list[int] = []
    for k in lam:
        parts.extend((2 * k,) if k % 2 else (k, k))
    return parts


def diagonal_profile(n: int, with_coset: bool = False) -> ClassProfile:
    """Profile of the diagonal S_n on pairs, optionally joined with its ρ-coset.

    A type-λ element of S_n has, on 2n points, every part repeated twice. Its
    product with ρ turns an odd part ℓ into one 2ℓ-cycle and leaves an even part
    as two ℓ-cycles.
    """
    counts: Counter = Counter()
    for lam in partitions_of(n):
        size = factorial(n) // centralizer_order(lam)
        counts[cycle_type(lam + lam)] += size
        if with_coset:
            counts[cycle_type(_coset_parts(lam))] += size
    return ClassProfile(2 * n, dict(counts))


def wreath_profile(block_size: int, n_blocks: int) -> ClassProfile:
    """Profile of Z_b ≀ S_k with Z_b regular on each block of b points.

    For a k-cycle of blocks the b^k local choices collapse to their product h ∈ Z_b
    (b^{k−1} choices each), and the block cycle then splits into b/ord(h) cycles of
    length k·ord(h).
    """
    b = block_size
    total: Counter = Counter()
    for lam in partitions_of(n_blocks):
        weight = factorial(n_blocks) // centralizer_order(lam)
        poly: Counter = Counter({(): 1})
        for k in lam:
            options: Counter = Counter()
            for h in range(b):
                o = b // gcd(h, b)
                options[(k * o,) * (b // o)] += b ** (k - 1)
            nxt: Counter = Counter()
            for t, c in poly.items():
                for t2, c2 in options.items():
                    nxt[cycle_type(t + t2)] += c * c2
            poly = nxt
        for t, c in poly.items():
            total[t] += weight * c
    return ClassProfile(b * n_blocks, dict(total))


def full_symmetric_profile(m: int) -> ClassProfile:
    return ClassProfile(m, {t: class_size(t) for t in partitions_of(m)})


def enumerated_profile(group: GroupSpec) -> ClassProfile:
    """Profile by running over a materialized element list.

    Raises:
        UnsupportedProfileError: If the group has no element list.

    """
    if group.elements is None:
        raise UnsupportedProfileError(f"{group.name} (n={group.n}) is not materialized")
    counts: Counter = Counter(cycle_analysis(g)[0] for g in group.elements)
    return ClassProfile(group.degree, dict(counts))


@loggable
def profile_of(group: GroupSpec) -> ClassProfile:
    """Exact class profile of one of the named groups.

    Args:
        group (GroupSpec): The group.

    Returns:
        ClassProfile: Closed form where one exists, enumeration otherwise.

    """
    n = group.n
    match group.name:
        case GroupName.CYCLIC_ON_POINTS:
            return cyclic_profile(2 * n)
        case GroupName.DIHEDRAL_ON_POINTS if n >= 2:
            return dihedral_profile(n)
        case GroupName.C_RHO_PRIME:
            return diagonal_profile(n)
        case GroupName.C_RHO_PRIME_EXT:
            return diagonal_profile(n, with_coset=True)
        case GroupName.C_RHO:
            return wreath_profile(2, n)
        case GroupName.C_TAU:
            return wreath_profile(2, 2 * n)
        case GroupName.C_SIGMA:
            return wreath_profile(4, n)
        case _:
            return enumerated_profile(group)
