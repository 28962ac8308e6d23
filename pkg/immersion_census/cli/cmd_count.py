import sys
from collections import Counter

import pandas as pd

from immersion_census.census.derive_counts import CountTable, derive_counts
from immersion_census.census.filters import filter_kink_free, filter_prime
from immersion_census.census.immersion_class import ImmersionClass
from immersion_census.census.kinds import PROFILE_PAIRS, classes_of_kind, source_method
from immersion_census.census.symmetry_profile import symmetry_profile
from immersion_census.cli.class_cache import ClassCache
from immersion_census.cli.run_config import RunConfig, UsageError
from immersion_census.cosetcount.frobenius_count import KIND_GROUPS, count_total_immersions
from immersion_census.data_exporters.write_count_table import render_frame, write_count_table
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


def keep_filtered(c: ImmersionClass, kink_free: bool, prime: bool) -> bool:
    if kink_free and not filter_kink_free(c):
        return False
    return not prime or all(filter_prime(c))


def frobenius_totals(kind: str, n_values: tuple[int, ...]) -> pd.DataFrame:
    """All-genus totals (kind, n, count) by double-coset counting.

    Raises:
        UsageError: For kinds other than OO, UO, OU, UU.

    """
    if kind not in KIND_GROUPS:
        raise UsageError(f"--frobenius counts only OO, UO, OU and UU, not {kind}")
    rows = [(kind, n, count_total_immersions(kind, n)) for n in n_values]
    return pd.DataFrame(rows, columns=["kind", "n", "count"]).astype({"count": object})


def profile_counts(cache: ClassCache, kind: str, n: int) -> CountTable:
    """Counts per genus of ``kind`` from the symmetry profiles of its source method."""
    method = source_method(kind)
    classes = cache.classes(method, n)
    profiles = [
        p for pair in PROFILE_PAIRS[method] for p in symmetry_profile(classes, pair).values()
    ]
    return derive_counts(profiles, required=[kind]).select(kind)


def filtered_counts(cache: ClassCache, cfg: RunConfig, kind: str, n: int) -> CountTable:
    """Counts per genus of the kink-free and/or prime immersions of ``kind``."""
    merged = classes_of_kind(kind, lambda m: cache.classes(m, n))
    genera = range(max(c.g for c in merged) + 1) if merged else range(0)
    hits = Counter(c.g for c in merged if keep_filtered(c, cfg.kink_free, cfg.prime))
    return CountTable.from_records((kind, n, g, hits[g]) for g in genera)


@loggable
def cmd_count(cfg: RunConfig) -> int:
    """Print (or write) counts for one kind over the requested n.

    Args:
        cfg (RunConfig): Invocation settings; ``cfg.kind`` is set.

    Returns:
        int: Exit code 0.

    Raises:
        UsageError: For kinds ``--frobenius`` cannot count.
        OutOfEnvelopeError: For n beyond the envelope without ``--allow-slow``.

    """
    if cfg.kind is None:
        raise UsageError("count needs --kind")
    if cfg.frobenius:
        frame = frobenius_totals(cfg.kind, cfg.n_values)
    else:
        method = source_method(cfg.kind)
        cache = ClassCache(cfg)
        for n in cfg.n_values:
            cache.check_envelope(method, n)
        table = CountTable()
        for n in cfg.n_values:
            part = (
                filtered_counts(cache, cfg, cfg.kind, n)
                if cfg.filtered
                else profile_counts(cache, cfg.kind, n)
            )
            table = table.merge(part)
        frame = table.select(g=cfg.g).frame

    if cfg.out is not None:
        write_count_table(frame, cfg.out, cfg.fmt)
        logger.info(f"Wrote {len(frame)} rows to {cfg.out}")
    else:
        sys.stdout.write(render_frame(frame, cfg.fmt))
    return 0
