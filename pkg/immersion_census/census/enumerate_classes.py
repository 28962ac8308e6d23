from enum import StrEnum
from pathlib import Path

from immersion_census.census.immersion_class import (
    ImmersionClass,
    Method,
    genus_of,
    group_for_method,
    universe_for_method,
)
from immersion_census.cosetcount.double_coset_representatives import (
    double_coset_representatives,
    orbit_representative,
)
from immersion_census.encodings.x_method import is_one_component_x
from immersion_census.encodings.y_method import is_one_component_y
from immersion_census.grouporbits.canonical_form import canonical_form
from immersion_census.grouporbits.group_spec import GroupName, GroupSpec, make_group
from immersion_census.grouporbits.orderly_generation import Structure, orderly_representatives
from immersion_census.grouporbits.transversal_sweep import transversal_sweep
from immersion_census.permcore.fixed_perms import beta
from immersion_census.permcore.perm import Array, Perm
from immersion_census.utils.custom_logger import CustomLogger, loggable
from immersion_census.utils.settings import get_settings

logger = CustomLogger.get_logger()


class OutOfEnvelopeError(RuntimeError):
    """Raised when n lies beyond what a method enumerates in reasonable time."""

    pass


class Engine(StrEnum):
    ORDERLY = "orderly"
    SWEEP = "sweep"
    DOUBLE_COSET = "double-coset"


ENVELOPES = {
    Method.X: 5,
    Method.Y: 6,
    Method.U_DIHEDRAL: 8,
    Method.U_CYCLIC: 8,
    Method.Z: 6,
}

DOUBLE_COSET_ENVELOPE = 7

DEFAULT_ENGINES = {
    Method.X: Engine.ORDERLY,
    Method.Y: Engine.ORDERLY,
    Method.U_DIHEDRAL: Engine.SWEEP,
    Method.U_CYCLIC: Engine.SWEEP,
    Method.Z: Engine.ORDERLY,
}


def envelope_for(method: Method | str, engine: Engine | str | None = None) -> int:
    """Largest n enumerated without ``--allow-slow``; double-coset Z reaches further."""
    if engine is not None and Engine(engine) == Engine.DOUBLE_COSET and Method(method) == Method.Z:
        return DOUBLE_COSET_ENVELOPE
    return ENVELOPES[Method(method)]


def check_envelope(
    method: Method | str, n: int, allow_slow: bool = False, engine: Engine | str | None = None
) -> None:
    """Refuse n < 1, and n beyond the envelope unless ``allow_slow``.

    The envelope depends on the engine, see :func:`envelope_for`.

    Raises:
        ValueError: If ``n`` < 1.
        OutOfEnvelopeError: If ``n`` is too large.

    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    limit = envelope_for(method, engine)
    if n > limit and not allow_slow:
        raise OutOfEnvelopeError(
            f"{method} enumeration is limited to n <= {limit}; pass --allow-slow to go further"
        )


def _orderly(method: Method, n: int, group: GroupSpec) -> list[tuple[Array, int]]:
    if group.block_action is None:
        raise ValueError(f"{group.name} has no block structure")
    match method:
        case Method.X:
            return orderly_representatives(
                4 * n, group.block_action, Structure.INVOLUTION, lambda a: is_one_component_x(a, n)
            )
        case Method.Y:
            return orderly_representatives(
                2 * n, group.block_action, Structure.ANY, lambda a: is_one_component_y(a, n)
            )
        case Method.Z:
            return orderly_representatives(
                2 * n, group.block_action, Structure.CYCLE, lambda a: True
            )
        case _:
            raise ValueError(f"No orderly generation for {method}")


def _double_coset(n: int, group: GroupSpec) -> list[tuple[Array, int]]:
    h = make_group(GroupName.CYCLIC_ON_POINTS, n)
    reps = []
    for x in double_coset_representatives(h, group, beta(n)):
        canon, omega = canonical_form(orbit_representative(x, beta(n)), group)
        reps.append((canon.array, omega))
    return sorted(reps)


@loggable
def enumerate_classes(
    method: Method | str,
    n: int,
    engine: Engine | str | None = None,
    jobs: int = 1,
    memory_mb: int | None = None,
    cache_dir: Path | None = None,
    allow_slow: bool = False,
) -> list[ImmersionClass]:
    """One ImmersionClass per orbit of the method's group on its universe.

    Classes come out sorted by genus, then by canonical representative.

    Args:
        method (Method | str): Census method.
        n (int): Number of double points.
        engine (Engine | str | None): ``orderly`` (X, Y, Z), ``sweep`` (all) or
            ``double-coset`` (Z). Defaults per method.
        jobs (int): Worker processes for sharded sweeps.
        memory_mb (int | None): Visited-set budget; defaults to ``CENSUS_MEMORY_MB``.
        cache_dir (Path | None): Shard cache for resumable sweeps.
        allow_slow (bool): Permit n beyond the envelope.

    Returns:
        list[ImmersionClass]: The classes.

    Raises:
        OutOfEnvelopeError: If n is beyond the envelope and ``allow_slow`` is off.
        ValueError: If the engine does not apply to the method.

    """
    method = Method(method)
    engine = Engine(engine) if engine is not None else DEFAULT_ENGINES[method]
    check_envelope(method, n, allow_slow, engine)
    group = group_for_method(method, n)

    if engine == Engine.SWEEP:
        budget = memory_mb if memory_mb is not None else get_settings().memory_mb
        summaries = transversal_sweep(
            universe_for_method(method, n), group, budget, jobs=jobs, cache_dir=cache_dir
        )
        reps = [(s.canonical.array, s.omega) for s in summaries]
    elif engine == Engine.DOUBLE_COSET:
        if method != Method.Z:
            raise ValueError("The double-coset engine only applies to the Z method")
        reps = _double_coset(n, group)
    else:
        reps = _orderly(method, n, group)

    classes = [
        ImmersionClass(
            method=method,
            n=n,
            g=genus_of(method, rep, n),
            rep=Perm.from_array(rep),
            orbit_len=group.order // omega,
            stab_order=omega,
        )
        for rep, omega in reps
    ]
    classes.sort(key=lambda c: (c.g, c.rep.array))
    logger.info(f"{method} n={n}: {len(classes)} classes ({engine})")
    return classes


def genus_histogram(classes: list[ImmersionClass]) -> list[int]:
    """Class counts indexed by genus."""
    if not classes:
        return []
    counts = [0] * (max(c.g for c in classes) + 1)
    for c in classes:
        counts[c.g] += 1
    return counts
