from collections import Counter
from math import factorial, prod

from sympy.utilities.iterables import partitions

from immersion_census.permcore.perm import CycleType


def partitions_of(m: int) -> list[CycleType]:
    """All partitions of ``m`` as descending tuples, in sympy's deterministic order.

    Args:
        m (int): Non-negative integer.

    Returns:
        list[CycleType]: Each partition exactly once; ``m == 0`` gives ``[()]``.

    """
    result = []
    for part in partitions(m):
        # sympy reuses the dict between yields
        parts = (k for k, mult in part.items() if k > 0 for _ in range(mult))
        result.append(tuple(sorted(parts, reverse=True)))
    return result


def centralizer_order(t: CycleType) -> int:
    """z_λ = Π_k k^{m_k} m_k!, the order of the centralizer of a type-λ element."""
    return prod(k**mult * factorial(mult) for k, mult in Counter(t).items())


def class_size(t: CycleType) -> int:
    """Number of permutations of cycle type ``t`` in S_m, m = sum(t)."""
    return factorial(sum(t)) // centralizer_order(t)
