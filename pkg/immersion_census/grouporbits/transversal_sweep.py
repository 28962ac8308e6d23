import asyncio
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from immersion_census.grouporbits.canonical_form import canonical_form_array
from immersion_census.grouporbits.group_spec import GroupSpec
from immersion_census.grouporbits.orbit_of import (
    OrbitClosureError,
    OrbitSummary,
    orbit_arrays,
)
from immersion_census.grouporbits.universe import Universe
from immersion_census.grouporbits.visited_set import make_visited_set
from immersion_census.permcore.perm import Array, Perm
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

SHARDS_PER_JOB = 4


@loggable
def transversal_sweep(
    universe: Universe,
    group: GroupSpec,
    memory_mb: int,
    jobs: int = 1,
    cache_dir: Path | None = None,
) -> list[OrbitSummary]:
    """One summary per orbit of ``group`` on ``universe``, sorted by canonical rank.

    With ``jobs == 1`` each unvisited element seeds a BFS orbit and every member is
    marked visited. With more jobs the universe is cut into contiguous rank ranges,
    each worker tallies the canonical forms of its members, and the tallies are
    summed; the output is identical either way.

    Args:
        universe (Universe): Action-closed set of permutations.
        group (GroupSpec): Acting group.
        memory_mb (int): Budget for the visited set.
        jobs (int): Worker processes.
        cache_dir (Path | None): Where finished shards are kept for resuming.

    Returns:
        list[OrbitSummary]: The transversal.

    Raises:
        OrbitClosureError: If the orbit lengths do not add up to the universe size.

    """
    if jobs <= 1:
        summaries = _sequential_sweep(universe, group, memory_mb)
    else:
        tallies = asyncio.run(_sharded_tallies(universe, group, jobs, cache_dir))
        total: Counter = Counter()
        for tally in tallies:
            total.update(tally)
        summaries = []
        for canon, length in total.items():
            if group.order % length:
                raise OrbitClosureError(f"Orbit length {length} does not divide {group.order}")
            summaries.append(OrbitSummary(Perm.from_array(canon), length, group.order // length))
    summaries.sort(key=lambda s: s.canonical.array)
    covered = sum(s.length for s in summaries)
    if covered != universe.size:
        raise OrbitClosureError(f"Orbits cover {covered} of {universe.size} elements")
    logger.debug(f"{universe.label}: {len(summaries)} orbits under {group.name}")
    return summaries


def _sequential_sweep(universe: Universe, group: GroupSpec, memory_mb: int) -> list[OrbitSummary]:
    visited = make_visited_set(universe.degree, universe.size, memory_mb)
    summaries = []
    for x in universe.iter_range():
        if x in visited:
            continue
        members = orbit_arrays(x, group, cap=group.order)
        for y in members:
            visited.add(y)
        length = len(members)
        summaries.append(OrbitSummary(Perm.from_array(min(members)), length, group.order // length))
    return summaries


def count_shard(universe: Universe, group: GroupSpec, start: int, stop: int) -> dict[Array, int]:
    """Tally canonical forms over one contiguous slice of the universe."""
    tally: Counter = Counter()
    for x in universe.iter_range(start, stop):
        tally[canonical_form_array(x, group)[0]] += 1
    return dict(tally)


def _shard_bounds(size: int, shards: int) -> list[tuple[int, int]]:
    step = -(-size // shards)
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)] if size else []


def _shard_path(cache_dir: Path, universe: Universe, group: GroupSpec, k: int, total: int) -> Path:
    return cache_dir / f"{universe.label}_{group.name}_shard{k}of{total}.json"


def _read_shard(path: Path) -> dict[Array, int]:
    with path.open() as f:
        return {tuple(canon): count for canon, count in json.load(f)}


def _write_shard(path: Path, tally: dict[Array, int]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as f:
        json.dump(sorted([list(canon), count] for canon, count in tally.items()), f)


async def _sharded_tallies(
    universe: Universe, group: GroupSpec, jobs: int, cache_dir: Path | None
) -> list[dict[Array, int]]:
    bounds = _shard_bounds(universe.size, jobs * SHARDS_PER_JOB)
    loop = asyncio.get_running_loop()

    with ProcessPoolExecutor(max_workers=jobs) as pool:

        async def run_shard(k: int, start: int, stop: int) -> dict[Array, int]:
            path = _shard_path(cache_dir, universe, group, k, len(bounds)) if cache_dir else None
            if path is not None and path.exists():
                logger.debug(f"Resuming shard {k} from {path}")
                return _read_shard(path)
            tally = await loop.run_in_executor(pool, count_shard, universe, group, start, stop)
            if path is not None:
                _write_shard(path, tally)
            return tally

        tasks = [run_shard(k, start, stop) for k, (start, stop) in enumerate(bounds)]
        return await asyncio.gather(*tasks)
