from collections.abc import Iterable
from dataclasses import dataclass, field

from immersion_census.census.derive_counts import CountTable
from immersion_census.census.immersion_class import Method
from immersion_census.census.symmetry_profile import InvolutionPair, SymmetryProfile
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


@dataclass
class StructureReport:
    """Outcome of the structural checks: failures break the run, observations do not."""

    checked: int = 0
    failures: list[str] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, holds: bool, message: str) -> None:
        self.checked += 1
        if not holds:
            self.failures.append(message)


# (left, factor, right) such that |left| = factor · |right|, for even and odd n
_EVEN_N = [("OOc", 2, "OOb"), ("UOc", 1, "OOb"), ("OUc", 2, "OUb"), ("UUc", 1, "OUb")]
_ODD_N = [("OOc", 2, "OOb"), ("UOc", 2, "UOb"), ("OUc", 1, "OOb"), ("UUc", 1, "UOb")]


def _check_identities(table: CountTable, report: StructureReport) -> None:
    for n in sorted({int(v) for v in table.frame["n"]}):
        identities = _EVEN_N if n % 2 == 0 else _ODD_N
        for g in table.genera(n):
            for left, factor, right in identities:
                if table.has(left, n, g) and table.has(right, n, g):
                    lv, rv = table.count(left, n, g), table.count(right, n, g)
                    report.expect(
                        lv == factor * rv,
                        f"n={n} g={g}: |{left}| = {lv} but {factor}·|{right}| = {factor * rv}",
                    )


def _check_vanishings(p: SymmetryProfile, report: StructureReport) -> None:
    where = f"{p.method} ({p.pair}) n={p.n} g={p.g}"
    even = p.n % 2 == 0
    if p.method == Method.U_CYCLIC:
        report.expect(p.x == 0 and p.y == 0, f"{where}: x = {p.x}, y = {p.y}, expected 0")
        if p.pair == InvolutionPair.SR:
            name, value = ("z", p.z) if even else ("v", p.v)
        else:
            name, value = ("v", p.v) if even else ("z", p.z)
        report.expect(value == 0, f"{where}: {name} = {value}, expected 0")
    elif p.method in (Method.Y, Method.U_DIHEDRAL) and not even:
        # no self-swapped or achiral classes for odd n
        report.expect(
            p.r_i == 0 and p.r_j == 0, f"{where}: r_s = {p.r_i}, r_m = {p.r_j}, expected 0"
        )


def _observe(profiles: list[SymmetryProfile], report: StructureReport) -> None:
    for p in profiles:
        if p.method in (Method.Y, Method.U_DIHEDRAL) and p.g % 2 == 1:
            holds = p.x == p.y == p.z == 0
            report.observations.append(
                f"{p.method} (sm) n={p.n} g={p.g}: x = y = z = 0 {'holds' if holds else 'FAILS'}"
            )
    rm = {(p.n, p.g): p for p in profiles if p.method == Method.Z}
    for p in profiles:
        if p.method == Method.Y and p.g == 0 and p.n % 2 == 0 and (p.n, 0) in rm:
            same = p.as_tuple() == rm[(p.n, 0)].as_tuple()
            report.observations.append(
                f"n={p.n} g=0: (sm) and (rm) five-plets {'coincide' if same else 'DIFFER'}"
            )


@loggable
def check_structure_theorems(
    table: CountTable, profiles: Iterable[SymmetryProfile] = ()
) -> StructureReport:
    """Check the identities between immersion kinds and the vanishing profile entries.

    For even n: |OOc| = 2|OOb|, |UOc| = |OOb|, |OUc| = 2|OUb|, |UUc| = |OUb|.
    For odd n:  |OOc| = 2|OOb|, |UOc| = 2|UOb|, |OUc| = |OOb|, |UUc| = |UOb|.
    On U-cyclic profiles x = y = 0, and z (sr, even n), v (sr, odd n), v (sm, even n),
    z (sm, odd n) vanish. Empirical regularities are recorded as observations only.

    Args:
        table (CountTable): Counts to check; identities with a missing side are skipped.
        profiles (Iterable[SymmetryProfile]): Profiles to check.

    Returns:
        StructureReport: Number of checks, failures with their (n, g), observations.

    """
    report = StructureReport()
    profiles = list(profiles)
    _check_identities(table, report)
    for p in profiles:
        _check_vanishings(p, report)
    _observe(profiles, report)
    for failure in report.failures:
        logger.warning(failure)
    return report
