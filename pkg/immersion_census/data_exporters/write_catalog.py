from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from immersion_census.census.immersion_class import ImmersionClass
from immersion_census.permcore.perm import format_cycles
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


class CatalogIOError(OSError):
    """Raised when a catalog, table or diagram file cannot be written or read."""

    pass


def catalog_frame(
    classes: Sequence[ImmersionClass], flags: Sequence[dict] | None = None
) -> pd.DataFrame:
    """One row per class, representatives as cycle strings."""
    rows = []
    for k, c in enumerate(classes):
        rows.append(
            {
                "method": str(c.method),
                "n": c.n,
                "g": c.g,
                "rep": format_cycles(c.rep),
                "orbit_len": c.orbit_len,
                "stab_order": c.stab_order,
                "flags": dict(flags[k]) if flags is not None else {},
            }
        )
    return pd.DataFrame(
        rows, columns=["method", "n", "g", "rep", "orbit_len", "stab_order", "flags"]
    )


@loggable
def write_catalog(
    classes: Sequence[ImmersionClass], path: Path, flags: Sequence[dict] | None = None
) -> Path:
    """Write a JSON-lines catalog, one record per class.

    Args:
        classes (Sequence[ImmersionClass]): Classes in output order.
        path (Path): Destination file; parent directories are created.
        flags (Sequence[dict] | None): Per-class flag dictionaries, aligned with ``classes``.

    Returns:
        Path: The written file.

    Raises:
        CatalogIOError: When the file cannot be written.

    """
    frame = catalog_frame(classes, flags)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w") as f:
            if not frame.empty:
                text = frame.to_json(orient="records", lines=True, force_ascii=False)
                f.write(text.rstrip("\n") + "\n")
        logger.debug(f"Wrote {len(frame)} classes to {path}")
    except OSError as e:
        raise CatalogIOError(f"An error occurred while writing catalog {path}: {e}") from e
    return path
