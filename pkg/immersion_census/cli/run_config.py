import argparse
import re
from dataclasses import dataclass
from pathlib import Path

from immersion_census.census.derive_counts import normalize_kind
from immersion_census.census.enumerate_classes import Engine
from immersion_census.census.immersion_class import Method
from immersion_census.census.kinds import source_method
from immersion_census.utils.settings import get_settings


class UsageError(ValueError):
    """Raised for option combinations the CLI refuses; maps to exit code 2."""

    pass


_METHOD_NAMES = {
    "x": Method.X,
    "y": Method.Y,
    "u": Method.U_DIHEDRAL,
    "u-dihedral": Method.U_DIHEDRAL,
    "u-cyclic": Method.U_CYCLIC,
    "z": Method.Z,
}

_RANGE_RE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def parse_n_range(text: str) -> tuple[int, ...]:
    """``"5"`` → (5,), ``"1..4"`` → (1, 2, 3, 4), ``"2,5"`` → (2, 5).

    Raises:
        UsageError: On malformed ranges or n < 1.

    """
    values: list[int] = []
    for chunk in text.split(","):
        match = _RANGE_RE.match(chunk.strip())
        if match is None:
            raise UsageError(f"Malformed n range {text!r}")
        lo = int(match.group(1))
        hi = int(match.group(2)) if match.group(2) else lo
        if lo < 1 or hi < lo:
            raise UsageError(f"n must be a range of integers >= 1, got {chunk!r}")
        values.extend(range(lo, hi + 1))
    return tuple(sorted(set(values)))


def parse_method(text: str | None) -> Method | None:
    if text is None:
        return None
    try:
        return _METHOD_NAMES[text.lower()]
    except KeyError as e:
        raise UsageError(f"Unknown method {text!r}") from e


def check_engine(engine: str, method: Method | None) -> None:
    """Refuse engines that cannot enumerate ``method``.

    Raises:
        UsageError: For orderly generation of U codes or double cosets outside Z.

    """
    if engine == Engine.DOUBLE_COSET and method not in (None, Method.Z):
        raise UsageError("The double-coset engine only enumerates the Z method")
    if engine == Engine.ORDERLY and method in (Method.U_DIHEDRAL, Method.U_CYCLIC):
        raise UsageError("U codes are enumerated by sweep only")


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs, after flags have overridden the environment."""

    subcommand: str
    n_values: tuple[int, ...]
    method: Method | None = None
    kind: str | None = None
    g: int | None = None
    frobenius: bool = False
    kink_free: bool = False
    prime: bool = False
    jobs: int = 1
    memory_mb: int = 2048
    fmt: str = "csv"
    out: Path | None = None
    cache_dir: Path | None = None
    allow_slow: bool = False
    engine: str | None = None
    theorem4: bool = False
    sumrules: bool = False

    @property
    def filtered(self) -> bool:
        return self.kink_free or self.prime

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Merge parsed arguments with environment defaults.

        Raises:
            UsageError: For invalid values or combinations.

        """
        settings = get_settings()
        kind = None
        if getattr(args, "kind", None):
            try:
                kind = normalize_kind(args.kind)
            except ValueError as e:
                raise UsageError(str(e)) from e
        method = parse_method(getattr(args, "method", None))
        if args.subcommand in ("list", "export-diagrams") and (kind is None) == (method is None):
            raise UsageError(f"{args.subcommand} needs exactly one of --kind or --method")
        if args.subcommand == "count" and kind is None:
            raise UsageError("count needs --kind")
        g = getattr(args, "g", None)
        if g is not None and g < 0:
            raise UsageError(f"Genus must be non-negative, got {g}")
        engine = getattr(args, "engine", None)
        if engine is not None:
            target = method if method is not None else (source_method(kind) if kind else None)
            check_engine(engine, target)
        jobs = args.jobs if args.jobs is not None else settings.jobs
        if jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {jobs}")
        return cls(
            subcommand=args.subcommand,
            n_values=parse_n_range(args.n),
            method=method,
            kind=kind,
            g=g,
            frobenius=getattr(args, "frobenius", False),
            kink_free=getattr(args, "kink_free", False),
            prime=getattr(args, "prime", False),
            jobs=jobs,
            memory_mb=args.memory_mb if args.memory_mb is not None else settings.memory_mb,
            fmt=getattr(args, "format", "csv"),
            out=Path(args.out) if getattr(args, "out", None) else None,
            cache_dir=settings.cache_dir if not getattr(args, "no_cache", False) else None,
            allow_slow=args.allow_slow,
            engine=engine,
            theorem4=getattr(args, "theorem4", False),
            sumrules=getattr(args, "sumrules", False),
        )
