from pathlib import Path

import pandas as pd

from immersion_census.census.immersion_class import ImmersionClass, Method, rep_degree
from immersion_census.data_exporters.write_catalog import CatalogIOError
from immersion_census.permcore.perm import parse_perm
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


@loggable
def load_catalog_frame(path: Path) -> pd.DataFrame:
    """Read a JSON-lines catalog into a DataFrame.

    Raises:
        CatalogIOError: When the file is missing or unreadable.

    """
    try:
        if path.stat().st_size == 0:
            return pd.DataFrame(
                columns=["method", "n", "g", "rep", "orbit_len", "stab_order", "flags"]
            )
        return pd.read_json(path, orient="records", lines=True, dtype={"rep": str})
    except (OSError, ValueError) as e:
        raise CatalogIOError(f"An error occurred while reading catalog {path}: {e}") from e


def load_catalog(path: Path) -> list[ImmersionClass]:
    """Rebuild the ImmersionClass records of a catalog written by ``write_catalog``."""
    frame = load_catalog_frame(path)
    classes = []
    for row in frame.itertuples(index=False):
        method = Method(row.method)
        n = int(row.n)
        classes.append(
            ImmersionClass(
                method=method,
                n=n,
                g=int(row.g),
                rep=parse_perm(str(row.rep), rep_degree(method, n)),
                orbit_len=int(row.orbit_len),
                stab_order=int(row.stab_order),
            )
        )
    logger.debug(f"Loaded {len(classes)} classes from {path}")
    return classes
