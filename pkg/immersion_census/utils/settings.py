import os
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Settings:
    """Environment-derived defaults; CLI flags take precedence over these."""

    memory_mb: int
    jobs: int
    cache_dir: Path
    orbit_cap: int
    materialize_limit: int
    log_level: str


def get_settings() -> Settings:
    """Read census defaults from the environment.

    ``load_dotenv`` is expected to have run already (see ``main.py``).

    Returns:
        Settings: Current defaults.

    """
    return Settings(
        memory_mb=int(os.getenv("CENSUS_MEMORY_MB", "2048")),
        jobs=int(os.getenv("CENSUS_JOBS", "1")),
        cache_dir=Path(os.getenv("CENSUS_CACHE_DIR", ".census_cache")),
        orbit_cap=int(os.getenv("CENSUS_ORBIT_CAP", "5000000")),
        materialize_limit=int(os.getenv("CENSUS_MATERIALIZE_LIMIT", "50000")),
        log_level=os.getenv("CENSUS_LOG_LEVEL", "INFO"),
    )
