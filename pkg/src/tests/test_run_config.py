import pytest

from immersion_census.census.immersion_class import Method
from immersion_census.cli.parser import build_parser
from immersion_census.cli.run_config import (
    RunConfig,
    UsageError,
    check_engine,
    parse_method,
    parse_n_range,
)


@pytest.mark.parametrize(
    ("text", "values"),
    [("5", (5,)), ("1..4", (1, 2, 3, 4)), ("2,5", (2, 5)), ("3..4,1", (1, 3, 4)), ("2..2", (2,))],
)
def test_parse_n_range(text, values):
    assert parse_n_range(text) == values


@pytest.mark.parametrize("text", ["0", "4..2", "a", "1..", "-1", "1...3", ""])
def test_malformed_n_range(text):
    with pytest.raises(UsageError):
        parse_n_range(text)


@pytest.mark.parametrize(
    ("text", "method"),
    [("x", Method.X), ("U", Method.U_DIHEDRAL), ("u-cyclic", Method.U_CYCLIC), ("z", Method.Z)],
)
def test_parse_method(text, method):
    assert parse_method(text) == method


def test_unknown_method():
    assert parse_method(None) is None
    with pytest.raises(UsageError):
        parse_method("w")


def test_engine_rules():
    check_engine("double-coset", Method.Z)
    check_engine("sweep", Method.U_CYCLIC)
    with pytest.raises(UsageError):
        check_engine("double-coset", Method.Y)
    with pytest.raises(UsageError):
        check_engine("orderly", Method.U_DIHEDRAL)


def config(*argv):
    return RunConfig.from_args(build_parser().parse_args(list(argv)))


def test_flags_override_environment(monkeypatch):
    monkeypatch.setenv("CENSUS_JOBS", "3")
    monkeypatch.setenv("CENSUS_MEMORY_MB", "512")
    cfg = config("count", "--kind", "uub", "--n", "1..3")
    assert (cfg.kind, cfg.n_values, cfg.jobs, cfg.memory_mb) == ("UUb", (1, 2, 3), 3, 512)
    assert config("count", "--kind", "uu", "--n", "2", "--jobs", "1").jobs == 1


def test_no_cache_and_filters():
    cfg = config("list", "--method", "z", "--n", "3", "--prime", "--no-cache")
    assert cfg.cache_dir is None
    assert cfg.filtered
    assert not config("list", "--method", "z", "--n", "3").filtered


def test_verify_defaults():
    cfg = config("verify")
    assert cfg.n_values == (1, 2, 3, 4, 5, 6)
    assert not (cfg.theorem4 or cfg.sumrules)


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--n", "3"),
        ("count", "--kind", "QQ", "--n", "3"),
        ("list", "--n", "3"),
        ("list", "--kind", "uu", "--method", "z", "--n", "3"),
        ("count", "--kind", "uu", "--n", "3", "--g", "-1"),
        ("count", "--kind", "uu", "--n", "3", "--jobs", "0"),
        ("count", "--kind", "ooc", "--n", "3", "--engine", "orderly"),
        ("list", "--method", "y", "--n", "3", "--engine", "double-coset"),
    ],
)
def test_refused_combinations(argv):
    with pytest.raises(UsageError):
        config(*argv)
