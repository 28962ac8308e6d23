from collections.abc import Sequence
from pathlib import Path

from immersion_census.data_exporters.write_catalog import CatalogIOError
from immersion_census.encodings.diagrams import DiagramCode
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


@loggable
def write_diagrams(
    diagrams: Sequence[tuple[int, DiagramCode]], out_dir: Path, prefix: str
) -> list[Path]:
    """One JSON file per diagram, named ``<prefix>_<rank>.json`` by representative rank.

    Args:
        diagrams (Sequence[tuple[int, DiagramCode]]): (rank, diagram) pairs.
        out_dir (Path): Target directory, created if needed.
        prefix (str): File name prefix, e.g. ``uu_n3_g0``.

    Returns:
        list[Path]: Written files in input order.

    Raises:
        CatalogIOError: When a file cannot be written.

    """
    paths = []
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for rank, diagram in diagrams:
            path = out_dir / f"{prefix}_{rank}.json"
            path.write_text(diagram.to_json() + "\n")
            paths.append(path)
    except OSError as e:
        raise CatalogIOError(f"An error occurred while writing diagrams to {out_dir}: {e}") from e
    logger.debug(f"Wrote {len(paths)} diagrams to {out_dir}")
    return paths
