from dataclasses import dataclass

from immersion_census.grouporbits.canonical_form import (
    GroupTooLargeError,
    block_canonical_form,
    materialized_canonical_form,
)
from immersion_census.grouporbits.group_spec import GroupSpec
from immersion_census.permcore.perm import Array, DegreeMismatchError, Perm, inverse_array
from immersion_census.utils.settings import get_settings


class OrbitTooLargeError(RuntimeError):
    """Raised when an orbit outgrows the configured cap; use a transversal sweep instead."""

    pass


class OrbitClosureError(RuntimeError):
    """Raised when an orbit is longer than its group, which means the action is broken."""

    pass


@dataclass(frozen=True)
class OrbitSummary:
    """One orbit: its minimal-rank member, its length and the stabilizer order ω."""

    canonical: Perm
    length: int
    omega: int


def orbit_arrays(x: Array, group: GroupSpec, cap: int | None = None) -> list[Array]:
    """BFS closure of ``x`` under conjugation by the generators of ``group``.

    Raises:
        OrbitTooLargeError: If the orbit grows beyond ``cap``.
        OrbitClosureError: If the orbit grows beyond the group order.

    """
    if cap is None:
        cap = get_settings().orbit_cap
    gens = [(g, inverse_array(g)) for g in group.generator_arrays]
    seen = {x}
    members = [x]
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g, g_inv in gens:
                z = tuple([g[y[j]] for j in g_inv])
                if z not in seen:
                    seen.add(z)
                    members.append(z)
                    nxt.append(z)
        if len(members) > group.order:
            raise OrbitClosureError(f"Orbit exceeds |{group.name}| = {group.order}")
        if len(members) > cap:
            raise OrbitTooLargeError(f"Orbit exceeds cap {cap}")
        frontier = nxt
    return members


def orbit_of(x: Perm, group: GroupSpec, cap: int | None = None) -> tuple[OrbitSummary, list[Perm]]:
    """Full orbit of ``x`` with its summary.

    Args:
        x (Perm): Starting element.
        group (GroupSpec): Acting group.
        cap (int | None): Largest orbit accepted; defaults to ``CENSUS_ORBIT_CAP``.

    Returns:
        tuple[OrbitSummary, list[Perm]]: Summary and deduplicated members in BFS order.

    Raises:
        DegreeMismatchError: If degrees differ.

    """
    if x.degree != group.degree:
        raise DegreeMismatchError(f"Degree {x.degree} != group degree {group.degree}")
    members = orbit_arrays(x.array, group, cap)
    length = len(members)
    if group.order % length:
        raise OrbitClosureError(f"Orbit length {length} does not divide {group.order}")
    summary = OrbitSummary(Perm.from_array(min(members)), length, group.order // length)
    return summary, [Perm.from_array(a) for a in members]


def stabilizer_order(x: Perm, group: GroupSpec) -> int:
    """|{k ∈ group : k·x·k⁻¹ = x}|.

    Raises:
        GroupTooLargeError: If the group has no element list and no block structure.

    """
    if group.elements is not None:
        return materialized_canonical_form(x.array, group)[1]
    if group.block_action is not None:
        return block_canonical_form(x.array, group.block_action)[1]
    raise GroupTooLargeError(f"Cannot compute stabilizers in {group.name} (n={group.n})")
