import sys

from immersion_census.census.filters import filter_kink_free, filter_prime
from immersion_census.census.immersion_class import ImmersionClass, Method
from immersion_census.census.involutions import AVAILABLE, Involution
from immersion_census.census.kinds import classes_of_kind, source_method
from immersion_census.census.symmetry_profile import ClassIndex
from immersion_census.cli.class_cache import ClassCache
from immersion_census.cli.run_config import RunConfig, UsageError
from immersion_census.data_exporters.write_catalog import catalog_frame, write_catalog
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

# catalog flag name for "class is fixed by this involution"
SYMMETRY_FLAGS = {
    "self_swap": Involution.SWAP,
    "achiral": Involution.MIRROR,
    "reversible": Involution.REVERSE,
}


def class_flags(c: ImmersionClass, index: ClassIndex) -> dict[str, bool | None]:
    """Filter and symmetry flags of one class; None where the method has no such involution."""
    irreducible, indecomposable = filter_prime(c)
    flags: dict[str, bool | None] = {
        "kink_free": filter_kink_free(c),
        "irreducible": irreducible,
        "indecomposable": indecomposable,
    }
    for name, inv in SYMMETRY_FLAGS.items():
        flags[name] = index.is_fixed(c, inv) if inv in AVAILABLE[c.method] else None
    return flags


def selected_classes(
    cache: ClassCache, cfg: RunConfig, n: int
) -> tuple[list[ImmersionClass], list[ImmersionClass]]:
    """(classes to list, complete class list of their method) for one n."""
    if cfg.kind is not None:
        method = source_method(cfg.kind)
        chosen = classes_of_kind(cfg.kind, lambda m: cache.classes(m, n))
    else:
        method = cfg.method if cfg.method is not None else Method.Z
        chosen = cache.classes(method, n)
    if cfg.g is not None:
        chosen = [c for c in chosen if c.g == cfg.g]
    return chosen, cache.classes(method, n)


@loggable
def cmd_list(cfg: RunConfig) -> int:
    """Emit a JSON-lines catalog of the selected classes with their flags.

    Args:
        cfg (RunConfig): Invocation settings; exactly one of kind and method is set.

    Returns:
        int: Exit code 0.

    Raises:
        OutOfEnvelopeError: For n beyond the envelope without ``--allow-slow``.
        CatalogIOError: When ``--out`` cannot be written.

    """
    if (cfg.kind is None) == (cfg.method is None):
        raise UsageError("list needs exactly one of --kind or --method")
    method = source_method(cfg.kind) if cfg.kind is not None else cfg.method
    cache = ClassCache(cfg)
    for n in cfg.n_values:
        cache.check_envelope(method, n)
    rows: list[ImmersionClass] = []
    flags: list[dict] = []
    for n in cfg.n_values:
        chosen, complete = selected_classes(cache, cfg, n)
        index = ClassIndex(complete)
        for c in chosen:
            f = class_flags(c, index)
            if cfg.kink_free and not f["kink_free"]:
                continue
            if cfg.prime and not (f["irreducible"] and f["indecomposable"]):
                continue
            rows.append(c)
            flags.append(f)

    if cfg.out is not None:
        write_catalog(rows, cfg.out, flags)
        logger.info(f"Wrote {len(rows)} classes to {cfg.out}")
    elif rows:
        frame = catalog_frame(rows, flags)
        text = frame.to_json(orient="records", lines=True, force_ascii=False)
        sys.stdout.write(text.rstrip("\n") + "\n")
    return 0
