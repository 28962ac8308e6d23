from collections.abc import Iterable

import pandas as pd

from immersion_census.census.immersion_class import Method
from immersion_census.census.symmetry_profile import InvolutionPair, SymmetryProfile
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()

KINDS = (
    "OO", "UO", "OU", "UU",
    "OOc", "OOb", "UOc", "UOb", "OUc", "OUb", "UUc", "UUb",
)  # fmt: skip

# (all classes, modulo I, modulo J, modulo both) for each source of profiles
DERIVATIONS: dict[tuple[Method, InvolutionPair], tuple[str, str, str, str]] = {
    (Method.Y, InvolutionPair.SM): ("UOc", "UOb", "UUc", "UUb"),
    (Method.U_DIHEDRAL, InvolutionPair.SM): ("UOc", "UOb", "UUc", "UUb"),
    (Method.U_CYCLIC, InvolutionPair.SR): ("OOc", "OOb", "UOc", "UOb"),
    (Method.U_CYCLIC, InvolutionPair.SM): ("OOc", "OOb", "OUc", "OUb"),
    (Method.Z, InvolutionPair.RM): ("OO", "UO", "OU", "UU"),
}

COLUMNS = ["kind", "n", "g", "count"]


class MissingProfileError(KeyError):
    """Raised when a count is requested that no supplied profile determines."""

    pass


class InconsistentCountsError(ValueError):
    """Raised when two profiles derive different values for the same count."""

    pass


def normalize_kind(kind: str) -> str:
    """``"uub"`` → ``"UUb"``.

    Raises:
        ValueError: For anything that is not one of the twelve kinds.

    """
    k = kind[:2].upper() + kind[2:].lower()
    if k not in KINDS:
        raise ValueError(f"Unknown immersion kind {kind!r}")
    return k


class CountTable:
    """Immersion counts keyed by (kind, n, g), held in a DataFrame.

    Counts are exact Python integers (object dtype).
    """

    def __init__(self, frame: pd.DataFrame | None = None) -> None:
        if frame is None:
            frame = pd.DataFrame(columns=COLUMNS)
        self.frame = (
            frame[COLUMNS]
            .astype({"count": object})
            .sort_values(["kind", "n", "g"], ignore_index=True)
        )

    @classmethod
    def from_records(cls, records: Iterable[tuple[str, int, int, int]]) -> "CountTable":
        return cls(pd.DataFrame([list(r) for r in records], columns=COLUMNS))

    def __len__(self) -> int:
        return len(self.frame)

    def kinds(self) -> list[str]:
        return [k for k in KINDS if k in set(self.frame["kind"])]

    def has(self, kind: str, n: int, g: int | None = None) -> bool:
        mask = (self.frame["kind"] == kind) & (self.frame["n"] == n)
        if g is not None:
            mask &= self.frame["g"] == g
        return bool(mask.any())

    def count(self, kind: str, n: int, g: int) -> int:
        """One entry.

        Raises:
            MissingProfileError: If the entry is absent.

        """
        rows = self.frame[
            (self.frame["kind"] == kind) & (self.frame["n"] == n) & (self.frame["g"] == g)
        ]
        if rows.empty:
            raise MissingProfileError(f"No count for {kind} n={n} g={g}")
        return int(rows["count"].iloc[0])

    def genera(self, n: int) -> list[int]:
        return sorted({int(g) for g in self.frame.loc[self.frame["n"] == n, "g"]})

    def totals(self) -> pd.DataFrame:
        """Sum over genera, one row per (kind, n)."""
        grouped = self.frame.groupby(["kind", "n"], as_index=False)["count"].agg(
            lambda s: sum(int(v) for v in s)
        )
        return grouped.astype({"count": object})

    def total(self, kind: str, n: int) -> int:
        rows = self.frame[(self.frame["kind"] == kind) & (self.frame["n"] == n)]
        if rows.empty:
            raise MissingProfileError(f"No counts for {kind} n={n}")
        return sum(int(v) for v in rows["count"])

    def select(self, kind: str | None = None, g: int | None = None) -> "CountTable":
        frame = self.frame
        if kind is not None:
            frame = frame[frame["kind"] == kind]
        if g is not None:
            frame = frame[frame["g"] == g]
        return CountTable(frame)

    def merge(self, other: "CountTable") -> "CountTable":
        """Union of two tables.

        Raises:
            InconsistentCountsError: If both hold different values for an entry.

        """
        combined = pd.concat([self.frame, other.frame], ignore_index=True)
        dupes = combined.groupby(["kind", "n", "g"])["count"].nunique()
        clashes = dupes[dupes > 1]
        if not clashes.empty:
            raise InconsistentCountsError(f"Conflicting counts for {list(clashes.index)}")
        return CountTable(combined.drop_duplicates(subset=["kind", "n", "g"]))


@loggable
def derive_counts(
    profiles: Iterable[SymmetryProfile], required: Iterable[str] = ()
) -> CountTable:
    """Fill the immersion kinds each profile determines.

    A profile (x, y, z, v, w) for involutions (I, J) gives four kinds: all classes
    x+2y+2z+2v+4w, classes modulo I x+2y+z+v+2w, modulo J x+y+2z+v+2w, and modulo
    both x+y+z+v+w.

    Args:
        profiles (Iterable[SymmetryProfile]): Profiles of any methods, pairs, n and g.
        required (Iterable[str]): Kinds that must appear in the result.

    Returns:
        CountTable: Counts per (kind, n, g).

    Raises:
        MissingProfileError: If a required kind is not derivable from ``profiles``,
            or a profile comes from a (method, pair) with no derivation.
        InconsistentCountsError: If two profiles disagree on a count.

    """
    values: dict[tuple[str, int, int], int] = {}
    for p in profiles:
        kinds = DERIVATIONS.get((p.method, p.pair))
        if kinds is None:
            raise MissingProfileError(f"No derivation from {p.method} ({p.pair}) profiles")
        derived = (p.total, p.modulo_i, p.modulo_j, p.modulo_both)
        for kind, value in zip(kinds, derived, strict=True):
            key = (kind, p.n, p.g)
            if key in values and values[key] != value:
                raise InconsistentCountsError(
                    f"{kind} n={p.n} g={p.g}: {values[key]} != {value} from {p.method} ({p.pair})"
                )
            values[key] = value

    table = CountTable.from_records((k, n, g, v) for (k, n, g), v in values.items())
    missing = [k for k in map(normalize_kind, required) if k not in table.kinds()]
    if missing:
        raise MissingProfileError(f"Profiles given do not determine {missing}")
    logger.debug(f"Derived {len(table)} counts")
    return table
