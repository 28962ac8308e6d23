from collections.abc import Callable
from functools import cache

import pytest

from immersion_census.census.enumerate_classes import enumerate_classes
from immersion_census.census.immersion_class import ImmersionClass, Method


@cache
def _classes(method: Method, n: int) -> tuple[ImmersionClass, ...]:
    return tuple(enumerate_classes(method, n))


@pytest.fixture(scope="session")
def classes_for() -> Callable[[Method, int], list[ImmersionClass]]:
    """Memoized complete class lists, shared by every test in the session."""
    return lambda method, n: list(_classes(Method(method), n))


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CENSUS_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"
