from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum

from immersion_census.census.immersion_class import ImmersionClass, Method, group_for_method
from immersion_census.census.involutions import Involution, involution_array_map, parse_involutions
from immersion_census.grouporbits.canonical_form import canonical_form_array
from immersion_census.permcore.perm import Array
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


class IncompleteClassListError(ValueError):
    """Raised when an involution sends a class outside the list being profiled."""

    pass


class InvolutionPair(StrEnum):
    SM = "sm"
    SR = "sr"
    RM = "rm"

    @property
    def first(self) -> Involution:
        return Involution(self.value[0])

    @property
    def second(self) -> Involution:
        return Involution(self.value[1])


@dataclass(frozen=True)
class SymmetryProfile:
    """Counts of the five symmetry types of classes under two commuting involutions I, J.

    x: classes fixed by both; y, z, v: pairs of classes fixed by I, by J, by IJ
    respectively; w: quadruples with no symmetry.
    """

    method: Method
    pair: InvolutionPair
    n: int
    g: int
    x: int
    y: int
    z: int
    v: int
    w: int

    @property
    def r_i(self) -> int:
        """Classes fixed by I."""
        return self.x + 2 * self.y

    @property
    def s_i(self) -> int:
        """Pairs of classes exchanged by I."""
        return self.z + self.v + 2 * self.w

    @property
    def r_j(self) -> int:
        return self.x + 2 * self.z

    @property
    def s_j(self) -> int:
        return self.y + self.v + 2 * self.w

    @property
    def total(self) -> int:
        return self.x + 2 * self.y + 2 * self.z + 2 * self.v + 4 * self.w

    @property
    def modulo_i(self) -> int:
        return self.x + 2 * self.y + self.z + self.v + 2 * self.w

    @property
    def modulo_j(self) -> int:
        return self.x + self.y + 2 * self.z + self.v + 2 * self.w

    @property
    def modulo_both(self) -> int:
        return self.x + self.y + self.z + self.v + self.w

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.x, self.y, self.z, self.v, self.w)


class ClassIndex:
    """Canonical-form lookup of a complete class list for one (method, n)."""

    def __init__(self, classes: Sequence[ImmersionClass]) -> None:
        if not classes:
            raise IncompleteClassListError("Empty class list")
        self.method = classes[0].method
        self.n = classes[0].n
        self.group = group_for_method(self.method, self.n)
        self.by_rep: dict[Array, ImmersionClass] = {c.rep.array: c for c in classes}

    def image(self, c: ImmersionClass, which: Sequence[Involution]) -> ImmersionClass:
        """Class of the image of ``c`` under the involutions, applied in list order.

        Raises:
            IncompleteClassListError: If the image class is not in the list.

        """
        a = c.rep.array
        for inv in which:
            a = involution_array_map(self.method, inv, self.n)(a)
        canon, _ = canonical_form_array(a, self.group)
        try:
            return self.by_rep[canon]
        except KeyError as e:
            raise IncompleteClassListError(
                f"Image of {c.rep} under {''.join(reversed(which))} is not in the list"
            ) from e

    def is_fixed(self, c: ImmersionClass, which: str | Involution) -> bool:
        return self.image(c, parse_involutions(which)) is c


@loggable
def symmetry_profile(
    classes: Sequence[ImmersionClass], pair: InvolutionPair | str
) -> dict[int, SymmetryProfile]:
    """Split the classes of one (method, n) into the five symmetry types, per genus.

    Membership of an image is decided by canonical-form equality.

    Args:
        classes (Sequence[ImmersionClass]): Every class of the method for one n.
        pair (InvolutionPair | str): ``sm``, ``sr`` or ``rm``.

    Returns:
        dict[int, SymmetryProfile]: Profile per genus, for every genus present.

    Raises:
        IncompleteClassListError: If an image falls outside ``classes``.
        UnavailableInvolutionError: If the pair is not defined for the method.

    """
    pair = InvolutionPair(pair)
    index = ClassIndex(classes)
    first, second = pair.first, pair.second
    tallies: dict[int, list[int]] = defaultdict(lambda: [0] * 5)
    seen: set[Array] = set()
    for c in classes:
        if c.rep.array in seen:
            continue
        ci = index.image(c, [first])
        cj = index.image(c, [second])
        cij = index.image(c, [second, first])
        orbit = {id(o): o for o in (c, ci, cj, cij)}
        seen.update(o.rep.array for o in orbit.values())
        if len(orbit) == 1:
            slot = 0
        elif len(orbit) == 4:
            slot = 4
        elif ci is c:
            slot = 1
        elif cj is c:
            slot = 2
        else:
            slot = 3
        tallies[c.g][slot] += 1

    profiles = {
        g: SymmetryProfile(index.method, pair, index.n, g, *counts)
        for g, counts in sorted(tallies.items())
    }
    logger.debug(f"{index.method} n={index.n} ({pair}): {len(profiles)} genera profiled")
    return profiles


def single_involution_counts(
    classes: Sequence[ImmersionClass], which: Involution | str
) -> dict[int, tuple[int, int]]:
    """Per genus, (classes fixed by ``which``, pairs of classes it exchanges)."""
    index = ClassIndex(classes)
    fixed: dict[int, int] = defaultdict(int)
    moved: dict[int, int] = defaultdict(int)
    for c in classes:
        if index.is_fixed(c, which):
            fixed[c.g] += 1
        else:
            moved[c.g] += 1
    return {g: (fixed[g], moved[g] // 2) for g in sorted(set(fixed) | set(moved))}


def merge_classes(
    classes: Sequence[ImmersionClass], involutions: Iterable[Involution | str]
) -> list[ImmersionClass]:
    """Keep one class per orbit of the group generated by ``involutions``.

    The kept class is the one with the smallest representative; input order is
    otherwise preserved. With no involutions the list is returned unchanged.
    """
    gens = [parse_involutions(i) for i in involutions]
    if not gens or not classes:
        return list(classes)
    index = ClassIndex(classes)
    kept = []
    done: set[Array] = set()
    for c in classes:
        if c.rep.array in done:
            continue
        orbit = {c.rep.array: c}
        frontier = [c]
        while frontier:
            nxt = []
            for o in frontier:
                for gen in gens:
                    img = index.image(o, gen)
                    if img.rep.array not in orbit:
                        orbit[img.rep.array] = img
                        nxt.append(img)
            frontier = nxt
        done.update(orbit)
        kept.append(orbit[min(orbit)])
    return kept
