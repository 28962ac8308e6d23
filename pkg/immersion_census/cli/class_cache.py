from pathlib import Path

from immersion_census.census.enumerate_classes import (
    DEFAULT_ENGINES,
    Engine,
    check_envelope,
    enumerate_classes,
    envelope_for,
)
from immersion_census.census.immersion_class import ImmersionClass, Method
from immersion_census.cli.run_config import RunConfig
from immersion_census.data_exporters.write_catalog import write_catalog
from immersion_census.data_loaders.load_catalog import load_catalog
from immersion_census.utils.custom_logger import CustomLogger

logger = CustomLogger.get_logger()


def catalog_path(cache_dir: Path, method: Method, n: int) -> Path:
    return cache_dir / f"{method}_n{n}.jsonl"


class ClassCache:
    """Complete class lists per (method, n), memoized in-process and on disk."""

    def __init__(self, cfg: RunConfig) -> None:
        self.cfg = cfg
        self._classes: dict[tuple[Method, int], list[ImmersionClass]] = {}

    def engine_for(self, method: Method) -> Engine:
        if self.cfg.engine is not None and (self.cfg.method in (None, method)):
            return Engine(self.cfg.engine)
        return DEFAULT_ENGINES[method]

    def check_envelope(self, method: Method, n: int) -> None:
        check_envelope(method, n, self.cfg.allow_slow, self.engine_for(method))

    def feasible(self, method: Method, n: int) -> bool:
        return self.cfg.allow_slow or n <= envelope_for(method, self.engine_for(method))

    def classes(self, method: Method, n: int) -> list[ImmersionClass]:
        """All classes of ``method`` with ``n`` double points.

        Raises:
            OutOfEnvelopeError: If n is beyond the envelope and slow runs are off.

        """
        key = (method, n)
        if key in self._classes:
            return self._classes[key]
        path = catalog_path(self.cfg.cache_dir, method, n) if self.cfg.cache_dir else None
        if path is not None and path.exists():
            logger.debug(f"Reusing cached catalog {path}")
            found = load_catalog(path)
        else:
            found = enumerate_classes(
                method,
                n,
                engine=self.engine_for(method),
                jobs=self.cfg.jobs,
                memory_mb=self.cfg.memory_mb,
                cache_dir=self.cfg.cache_dir,
                allow_slow=self.cfg.allow_slow,
            )
            if path is not None:
                write_catalog(found, path)
        self._classes[key] = found
        return found
