from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice
from typing import Protocol

from immersion_census.permcore.perm import Array


class Universe(Protocol):
    """A finite, deterministically ordered set of permutations closed under a group action.

    Implementations must be picklable so that shards can run in worker processes.
    """

    @property
    def label(self) -> str: ...

    @property
    def degree(self) -> int: ...

    @property
    def size(self) -> int: ...

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]: ...


@dataclass(frozen=True)
class ExplicitUniverse:
    """A universe given by its members."""

    label: str
    degree: int
    members: tuple[Array, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]:
        return islice(iter(self.members), start, stop)
