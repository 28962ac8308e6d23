from itertools import permutations
from math import factorial

from immersion_census.grouporbits.canonical_form import block_canonical_form
from immersion_census.grouporbits.group_spec import GroupName, GroupSpec
from immersion_census.grouporbits.orderly_generation import Structure, orderly_representatives
from immersion_census.permcore.fixed_perms import beta
from immersion_census.permcore.perm import (
    Array,
    Perm,
    compose_arrays,
    conjugate,
    inverse,
    inverse_array,
)
from immersion_census.utils.custom_logger import CustomLogger, loggable
from immersion_census.utils.settings import get_settings

logger = CustomLogger.get_logger()


class InfeasibleRangeError(RuntimeError):
    """Raised when double cosets can be neither derived from orbits nor brute-forced."""

    pass


def conjugator_to_beta(pi: Array) -> Array:
    """The x with x⁻¹·β·x = π for a single cycle π: x(π^j(1)) = j + 1."""
    x = [0] * len(pi)
    label = 0
    for j in range(len(pi)):
        x[label] = j
        label = pi[label]
    return tuple(x)


def orbit_representative(x: Perm, base: Perm) -> Perm:
    """Map a double-coset representative x to the orbit representative x⁻¹·base·x."""
    return conjugate(base, inverse(x))


@loggable
def double_coset_representatives(
    h: GroupSpec, k: GroupSpec, base: Perm, brute_force: bool = False
) -> list[Perm]:
    """One representative x per double coset H·x·K of S_m.

    When H is ⟨β⟩ or ⟨β, σ_r⟩, ``base`` is β and K relabels pairs, the double
    cosets are read off the K-orbits on the 2n-cycles (merged with their inverses
    for the dihedral H). Otherwise S_m is swept directly.

    Args:
        h (GroupSpec): Left group.
        k (GroupSpec): Right group.
        base (Perm): Element whose conjugates the representatives describe.
        brute_force (bool): Force the direct sweep over S_m.

    Returns:
        list[Perm]: Representatives, ordered by their orbit representative.

    Raises:
        InfeasibleRangeError: If the direct sweep is too large or a group is not materialized.

    """
    n = h.n
    orbit_route = (
        h.name in (GroupName.CYCLIC_ON_POINTS, GroupName.DIHEDRAL_ON_POINTS)
        and k.block_action is not None
        and base == beta(n)
    )
    if orbit_route and not brute_force:
        reps = orderly_representatives(2 * n, k.block_action, Structure.CYCLE, lambda a: True)
        chosen = []
        for pi, _ in reps:
            if h.name == GroupName.DIHEDRAL_ON_POINTS:
                mirror, _ = block_canonical_form(inverse_array(pi), k.block_action)
                if mirror < pi:
                    continue
            chosen.append(Perm.from_array(conjugator_to_beta(pi)))
        logger.debug(f"{len(chosen)} double cosets {h.name}\\S_{2 * n}/{k.name}")
        return chosen
    return _brute_force_double_cosets(h, k)


def _brute_force_double_cosets(h: GroupSpec, k: GroupSpec) -> list[Perm]:
    m = h.degree
    if factorial(m) > get_settings().materialize_limit or h.elements is None or k.elements is None:
        raise InfeasibleRangeError(f"Cannot sweep S_{m} for {h.name}\\S_{m}/{k.name}")
    h_arrays = [g.array for g in h.elements]
    k_arrays = [g.array for g in k.elements]
    seen: set[Array] = set()
    reps = []
    for g in permutations(range(m)):
        if g in seen:
            continue
        reps.append(Perm.from_array(g))
        for a in h_arrays:
            ag = compose_arrays(a, g)
            for b in k_arrays:
                seen.add(compose_arrays(ag, b))
    return reps
