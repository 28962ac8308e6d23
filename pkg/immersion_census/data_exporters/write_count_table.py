import json
from pathlib import Path

import pandas as pd

from immersion_census.census.derive_counts import CountTable
from immersion_census.data_exporters.write_catalog import CatalogIOError
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

_INT_COLUMNS = ("n", "g", "count")


def render_frame(frame: pd.DataFrame, fmt: str = "csv") -> str:
    """CSV or JSON records of a table; ``n``, ``g`` and ``count`` print as exact integers."""
    ints = [c for c in _INT_COLUMNS if c in frame.columns]
    if fmt == "json":
        records = frame.to_dict(orient="records")
        for r in records:
            for c in ints:
                r[c] = int(r[c])
        return json.dumps(records) + "\n"
    out = frame.copy()
    for c in ints:
        out[c] = [str(int(v)) for v in out[c]]
    return out.to_csv(index=False)


def render_count_table(table: CountTable, fmt: str = "csv") -> str:
    """CSV with columns kind,n,g,count, or JSON records."""
    return render_frame(table.frame, fmt)


@loggable
def write_count_table(table: CountTable | pd.DataFrame, path: Path, fmt: str = "csv") -> Path:
    """Write a count table (or an all-genus totals frame) to ``path``.

    Raises:
        CatalogIOError: When the file cannot be written.

    """
    frame = table.frame if isinstance(table, CountTable) else table
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(render_frame(frame, fmt))
        logger.debug(f"Wrote {len(frame)} rows to {path}")
    except OSError as e:
        raise CatalogIOError(f"An error occurred while writing counts to {path}: {e}") from e
    return path
