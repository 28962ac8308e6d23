from math import factorial

import numpy as np

from immersion_census.permcore.perm import Array
from immersion_census.permcore.ranking import pack_array, rank_array

# rough footprint of one int in a Python set
SET_ENTRY_BYTES = 80


class MemoryBudgetExceededError(MemoryError):
    """Raised when neither visited-set layout fits the memory budget."""

    pass


class RankBitmap:
    """Visited set over S_m indexed by lexicographic rank, one bit per permutation."""

    def __init__(self, m: int) -> None:
        self._bits = np.zeros((factorial(m) + 7) // 8, dtype=np.uint8)
        self._count = 0

    def add(self, a: Array) -> None:
        r = rank_array(a)
        byte, mask = r >> 3, np.uint8(1 << (r & 7))
        if not self._bits[byte] & mask:
            self._bits[byte] |= mask
            self._count += 1

    def __contains__(self, a: Array) -> bool:
        r = rank_array(a)
        return bool(self._bits[r >> 3] & (1 << (r & 7)))

    def __len__(self) -> int:
        return self._count


class PackedSet:
    """Visited set keyed by a packed integer encoding of the one-line array."""

    def __init__(self) -> None:
        self._keys: set[int] = set()

    def add(self, a: Array) -> None:
        self._keys.add(pack_array(a))

    def __contains__(self, a: Array) -> bool:
        return pack_array(a) in self._keys

    def __len__(self) -> int:
        return len(self._keys)


def make_visited_set(m: int, universe_size: int, memory_mb: int) -> RankBitmap | PackedSet:
    """Pick the visited-set layout for a sweep over a universe in S_m.

    The rank bitmap is used when it fits the budget and is no larger than the
    packed set would be; otherwise the packed set, if that fits.

    Raises:
        MemoryBudgetExceededError: If neither layout fits; shard the sweep instead.

    """
    budget = memory_mb * 1024 * 1024
    bitmap_bytes = factorial(m) // 8
    set_bytes = universe_size * SET_ENTRY_BYTES
    if bitmap_bytes <= budget and bitmap_bytes <= set_bytes:
        return RankBitmap(m)
    if set_bytes <= budget:
        return PackedSet()
    raise MemoryBudgetExceededError(
        f"Visited set for {universe_size} elements of S_{m} exceeds {memory_mb} MB: "
        "run the sweep sharded (--jobs) or raise --memory-mb"
    )
