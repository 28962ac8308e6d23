import argparse

from immersion_census.census.enumerate_classes import Engine


def _add_common(sub: argparse.ArgumentParser, n_default: str | None = None) -> None:
    sub.add_argument(
        "--n",
        required=n_default is None,
        default=n_default,
        help="Number of double points: 5, 1..9 or 2,4",
    )
    sub.add_argument("--jobs", type=int, default=None, help="Worker processes (CENSUS_JOBS)")
    sub.add_argument(
        "--memory-mb", type=int, default=None, help="Visited-set budget (CENSUS_MEMORY_MB)"
    )
    sub.add_argument(
        "--allow-slow", action="store_true", help="Enumerate beyond the feasibility envelope"
    )
    sub.add_argument("--no-cache", action="store_true", help="Neither read nor write catalogs")


def _add_selection(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--method", help="Census method: x, y, u (u-dihedral), u-cyclic, z")
    sub.add_argument("--kind", help="Immersion kind: oo, uo, ou, uu, optionally suffixed b or c")
    sub.add_argument("--g", type=int, default=None, help="Restrict to one genus")
    sub.add_argument("--kink-free", action="store_true", help="Only curves with no simple loop")
    sub.add_argument(
        "--prime", action="store_true", help="Only irreducible and indecomposable curves"
    )
    sub.add_argument("--engine", choices=[e.value for e in Engine], default=None)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the count, list, verify and export-diagrams subcommands."""
    parser = argparse.ArgumentParser(
        description="Census of circle immersions in surfaces via permutation encodings"
    )
    parser.add_argument("--profile", help="Load .env.<profile> after .env")
    parser.add_argument("--log-level", default=None, help="Overrides CENSUS_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    count = subparsers.add_parser("count", help="Print immersion counts")
    _add_common(count)
    _add_selection(count)
    count.add_argument(
        "--frobenius", action="store_true", help="All-genus totals from double-coset counting"
    )
    count.add_argument("--format", choices=["csv", "json"], default="csv")
    count.add_argument("--out", help="Write to this file instead of stdout")

    listing = subparsers.add_parser("list", help="Write a JSON-lines catalog of classes")
    _add_common(listing)
    _add_selection(listing)
    listing.add_argument("--out", help="Catalog file; defaults to stdout")

    verify = subparsers.add_parser("verify", help="Check the census against published tables")
    _add_common(verify, n_default="1..6")
    verify.add_argument("--theorem4", action="store_true", help="Only the structure identities")
    verify.add_argument("--sumrules", action="store_true", help="Only the orbit sum rules")

    export = subparsers.add_parser("export-diagrams", help="Write one diagram JSON per class")
    _add_common(export)
    _add_selection(export)
    export.add_argument("--out", default="diagrams", help="Output directory")
    return parser
