from math import factorial

from immersion_census.permcore.perm import Array, Perm


class RankOutOfRangeError(ValueError):
    """Raised when a rank lies outside [0, m!)."""

    pass


def rank_array(a: Array) -> int:
    """Lexicographic rank of a 0-based one-line array (Lehmer code)."""
    m = len(a)
    rank = 0
    for i in range(m):
        ai = a[i]
        smaller = 0
        for j in range(i + 1, m):
            if a[j] < ai:
                smaller += 1
        rank = rank * (m - i) + smaller
    return rank


def unrank_array(rank: int, m: int) -> Array:
    digits = []
    for base in range(1, m + 1):
        rank, d = divmod(rank, base)
        digits.append(d)
    remaining = list(range(m))
    return tuple(remaining.pop(d) for d in reversed(digits))


def perm_rank(p: Perm) -> int:
    """Position of ``p`` in the lexicographic order of S_m, starting at 0."""
    return rank_array(p.array)


def perm_unrank(i: int, m: int) -> Perm:
    """Inverse of ``perm_rank``.

    Raises:
        RankOutOfRangeError: If ``i`` is not in [0, m!).

    """
    if not 0 <= i < factorial(m):
        raise RankOutOfRangeError(f"Rank {i} outside [0, {m}!)")
    return Perm.from_array(unrank_array(i, m))


def pack_array(a: Array) -> int:
    """Injective integer key for arrays of one fixed degree."""
    bits = max(1, (len(a) - 1).bit_length())
    key = 0
    for v in a:
        key = (key << bits) | v
    return key
