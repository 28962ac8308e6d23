"""Minimum-rank conjugates and stabilizer orders under relabelling groups.

Lexicographic order on 0-based one-line arrays is the same as ``perm_rank`` order,
so the minimal conjugate is the canonical representative of an orbit.
"""

from immersion_census.grouporbits.group_spec import BlockAction, GroupSpec, ShiftMode
from immersion_census.permcore.perm import Array, Perm, inverse_array


class GroupTooLargeError(RuntimeError):
    """Raised when a group has neither a block structure nor a materialized element list."""

    pass


def block_canonical_form(x: Array, action: BlockAction) -> tuple[Array, int]:
    """Minimal conjugate k·x·k⁻¹ over a block relabelling group, and |Stab(x)|.

    Positions are filled left to right. A value falling in a block not yet placed
    forces that block onto the next free target block with the shift giving the
    smallest label, so the only genuine choices are which source block (and shift)
    lands on a target block nothing has reached yet. For connected maps that only
    happens at the root.

    Args:
        x (Array): 0-based one-line array of degree divisible by the block size.
        action (BlockAction): The block structure of the acting group.

    Returns:
        tuple[Array, int]: Canonical array and the stabilizer order.

    """
    b = action.block_size
    nb = len(x) // b
    best: list = [None, 0]
    global_shifts = range(b) if action.shift_mode == ShiftMode.GLOBAL else range(1)
    for gshift in global_shifts:
        _extend(x, b, nb, action.shift_mode, gshift, [-1] * nb, [-1] * nb, [0] * nb, [], 0, best)
    return tuple(best[0]), best[1]


def _extend(
    x: Array,
    b: int,
    nb: int,
    mode: ShiftMode,
    gshift: int,
    src_of_tgt: list[int],
    tgt_of_src: list[int],
    shift: list[int],
    code: list[int],
    next_t: int,
    best: list,
) -> None:
    m = len(x)
    pos = len(code)
    tight = best[0] is not None and best[0][:pos] == code
    while pos < m:
        t_blk = pos // b
        if src_of_tgt[t_blk] < 0:
            if mode == ShiftMode.FREE:
                choices = range(b)
            elif mode == ShiftMode.GLOBAL:
                choices = range(gshift, gshift + 1)
            else:
                choices = range(1)
            for blk in range(nb):
                if tgt_of_src[blk] >= 0:
                    continue
                for s in choices:
                    s_of, t_of, sh = src_of_tgt[:], tgt_of_src[:], shift[:]
                    s_of[t_blk], t_of[blk], sh[blk] = blk, t_blk, s
                    _extend(x, b, nb, mode, gshift, s_of, t_of, sh, code[:], next_t + 1, best)
            return
        src = src_of_tgt[t_blk]
        v = x[b * src + (pos % b - shift[src]) % b]
        vb = v // b
        if tgt_of_src[vb] < 0:
            if mode == ShiftMode.FREE:
                shift[vb] = (-(v % b)) % b
            elif mode == ShiftMode.GLOBAL:
                shift[vb] = gshift
            else:
                shift[vb] = 0
            tgt_of_src[vb] = next_t
            src_of_tgt[next_t] = vb
            next_t += 1
        val = b * tgt_of_src[vb] + (v % b + shift[vb]) % b
        if tight:
            bv = best[0][pos]
            if val > bv:
                return
            if val < bv:
                tight = False
        code.append(val)
        pos += 1
    if tight:
        best[1] += 1
    else:
        best[0], best[1] = code, 1


_PAIRS_CACHE: dict[tuple, list[tuple[Array, Array]]] = {}


def _element_pairs(group: GroupSpec) -> list[tuple[Array, Array]]:
    key = (group.name, group.n, group.degree)
    if key not in _PAIRS_CACHE:
        if group.elements is None:
            raise GroupTooLargeError(f"{group.name} (n={group.n}) is not materialized")
        _PAIRS_CACHE[key] = [(g.array, inverse_array(g.array)) for g in group.elements]
    return _PAIRS_CACHE[key]


def materialized_canonical_form(x: Array, group: GroupSpec) -> tuple[Array, int]:
    """Minimal conjugate and stabilizer order by running over every group element."""
    best = None
    ties = 0
    for g, g_inv in _element_pairs(group):
        y = tuple([g[x[j]] for j in g_inv])
        if best is None or y < best:
            best, ties = y, 1
        elif y == best:
            ties += 1
    return best, ties  # type: ignore[return-value]


def canonical_form_array(x: Array, group: GroupSpec) -> tuple[Array, int]:
    """Dispatch to the block or the element-list canonizer.

    Raises:
        GroupTooLargeError: If neither route applies.

    """
    if group.block_action is not None:
        return block_canonical_form(x, group.block_action)
    if group.elements is not None:
        return materialized_canonical_form(x, group)
    raise GroupTooLargeError(f"No canonizer for {group.name} (n={group.n})")


def canonical_form(x: Perm, group: GroupSpec) -> tuple[Perm, int]:
    """Canonical orbit representative of ``x`` and the order of its stabilizer."""
    canon, omega = canonical_form_array(x.array, group)
    return Perm.from_array(canon), omega
