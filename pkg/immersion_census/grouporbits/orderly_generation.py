"""Direct generation of canonical orbit representatives.

Instead of sweeping a universe and discarding visited elements, build one-line
arrays position by position, keeping only those already normalised for the
identity root (blocks appear in order of first use, each entering at its smallest
label). A completed array is emitted when no other root gives a smaller
conjugate, i.e. when it is its own canonical form.
"""

from collections.abc import Callable
from enum import StrEnum

from immersion_census.grouporbits.canonical_form import block_canonical_form
from immersion_census.grouporbits.group_spec import BlockAction, ShiftMode
from immersion_census.permcore.perm import Array


class Structure(StrEnum):
    ANY = "any"
    INVOLUTION = "involution"  # fixed-point free
    CYCLE = "cycle"  # a single cycle through every label


def orderly_representatives(
    degree: int,
    action: BlockAction,
    structure: Structure,
    accept: Callable[[Array], bool],
) -> list[tuple[Array, int]]:
    """Canonical representatives of the connected arrays satisfying ``accept``.

    "Connected" is with respect to the block structure: the group generated by the
    array and the blocks is transitive. Every orbit of such arrays under the block
    group contributes exactly one representative.

    Args:
        degree (int): Degree of the arrays.
        action (BlockAction): Block structure of the relabelling group.
        structure (Structure): Shape constraint on the arrays.
        accept (Callable[[Array], bool]): Final predicate on completed arrays.

    Returns:
        list[tuple[Array, int]]: (canonical array, stabilizer order), in lexicographic order.

    """
    b = action.block_size
    free = action.shift_mode == ShiftMode.FREE
    x = [-1] * degree
    used = [False] * degree
    out: list[tuple[Array, int]] = []

    def closes_early(i: int, v: int, assigned: int) -> bool:
        w = v
        while x[w] >= 0:
            w = x[w]
        return w == i and assigned + 1 < degree

    def allowed(v: int, next_t: int) -> int:
        """New value of next_t if ``v`` may be placed, else -1."""
        vb = v // b
        if vb < next_t:
            return next_t
        if vb == next_t and (not free or v % b == 0):
            return next_t + 1
        return -1

    def leaf() -> None:
        arr = tuple(x)
        if not accept(arr):
            return
        canon, omega = block_canonical_form(arr, action)
        if canon == arr:
            out.append((arr, omega))

    def extend(i: int, next_t: int, assigned: int) -> None:
        while i < degree and x[i] >= 0:
            i += 1
        if i == degree:
            leaf()
            return
        if i // b >= next_t:
            return
        candidates = range(i + 1, degree) if structure == Structure.INVOLUTION else range(degree)
        for v in candidates:
            if used[v]:
                continue
            if structure == Structure.INVOLUTION and x[v] >= 0:
                continue
            if structure == Structure.CYCLE and (v == i or closes_early(i, v, assigned)):
                continue
            t = allowed(v, next_t)
            if t < 0:
                continue
            x[i] = v
            used[v] = True
            if structure == Structure.INVOLUTION:
                x[v] = i
                used[i] = True
                extend(i + 1, t, assigned + 2)
                x[v] = -1
                used[i] = False
            else:
                extend(i + 1, t, assigned + 1)
            x[i] = -1
            used[v] = False

    extend(0, 1, 0)
    return out
