from collections import defaultdict
from pathlib import Path

from immersion_census.census.immersion_class import ImmersionClass, Method
from immersion_census.census.kinds import classes_of_kind, source_method
from immersion_census.cli.class_cache import ClassCache
from immersion_census.cli.cmd_count import keep_filtered
from immersion_census.cli.run_config import RunConfig, UsageError
from immersion_census.data_exporters.write_diagrams import write_diagrams
from immersion_census.encodings.codes import XCode, ZCode
from immersion_census.encodings.diagrams import DiagramCode, diagram_from_z
from immersion_census.encodings.z_method import convert_x_to_z
from immersion_census.permcore.ranking import perm_rank
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

DRAWABLE = (Method.Z, Method.X)


def to_diagram(c: ImmersionClass) -> DiagramCode:
    if c.method == Method.X:
        return diagram_from_z(convert_x_to_z(XCode(c.n, c.rep)))
    return diagram_from_z(ZCode(c.n, c.rep))


@loggable
def cmd_export_diagrams(cfg: RunConfig) -> int:
    """Write one DiagramCode JSON per class, named by genus and representative rank.

    Files are ``<kind or method>_n<n>_g<g>_<rank>.json`` in ``cfg.out`` where rank is
    the lexicographic rank of the canonical representative.

    Args:
        cfg (RunConfig): Invocation settings.

    Returns:
        int: Exit code 0.

    Raises:
        UsageError: For kinds or methods without a drawable encoding.
        CatalogIOError: When a file cannot be written.

    """
    if (cfg.kind is None) == (cfg.method is None):
        raise UsageError("export-diagrams needs exactly one of --kind or --method")
    method = source_method(cfg.kind) if cfg.kind is not None else cfg.method
    if method not in DRAWABLE:
        raise UsageError(f"Diagrams are drawn from Z or X codes, not {method}")
    cache = ClassCache(cfg)
    for n in cfg.n_values:
        cache.check_envelope(method, n)
    label = (cfg.kind or str(method)).lower()
    out_dir = cfg.out if cfg.out is not None else Path("diagrams")
    written = 0
    for n in cfg.n_values:
        if cfg.kind is not None:
            chosen = classes_of_kind(cfg.kind, lambda m: cache.classes(m, n))
        else:
            chosen = cache.classes(method, n)
        by_genus: dict[int, list[tuple[int, DiagramCode]]] = defaultdict(list)
        for c in chosen:
            if (cfg.g is None or c.g == cfg.g) and keep_filtered(c, cfg.kink_free, cfg.prime):
                by_genus[c.g].append((perm_rank(c.rep), to_diagram(c)))
        for g, diagrams in sorted(by_genus.items()):
            written += len(write_diagrams(sorted(diagrams), out_dir, f"{label}_n{n}_g{g}"))
    logger.info(f"Wrote {written} diagrams to {out_dir}")
    return 0
