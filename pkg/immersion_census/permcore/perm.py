"""Permutations of {1..m} in one-line form.

Images are stored 0-based (``Perm.array``) for fast composition in sweeps; every
public interface speaks 1-based labels. Products are right-to-left:
``compose(p, q)(i) == p(q(i))``.
"""

import re
from collections.abc import Iterable, Sequence
from typing import TypeAlias

CycleType: TypeAlias = tuple[int, ...]
Array: TypeAlias = tuple[int, ...]


class InvalidPermutationError(ValueError):
    """Raised when images or cycle text do not describe a bijection."""

    pass


class DegreeMismatchError(ValueError):
    """Raised when combining permutations of different degrees."""

    pass


class Perm:
    """A permutation of {1..m}, immutable and hashable."""

    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int]) -> None:
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise InvalidPermutationError(f"Not a permutation of 1..{len(img)}: {images}")
        self._img = img

    @classmethod
    def from_array(cls, array: Array) -> "Perm":
        """Wrap a 0-based image tuple without validation."""
        perm = cls.__new__(cls)
        perm._img = array
        return perm

    @property
    def array(self) -> Array:
        return self._img

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    @property
    def degree(self) -> int:
        return len(self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def __len__(self) -> int:
        return len(self._img)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._img == other._img

    def __lt__(self, other: "Perm") -> bool:
        return self._img < other._img

    def __le__(self, other: "Perm") -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def __str__(self) -> str:
        return format_cycles(self)


def _check_degrees(p: Perm, q: Perm) -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(f"Degrees differ: {p.degree} != {q.degree}")


def identity(m: int) -> Perm:
    return Perm.from_array(tuple(range(m)))


def compose_arrays(a: Array, b: Array) -> Array:
    return tuple([a[j] for j in b])


def inverse_array(a: Array) -> Array:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def conjugate_arrays(x: Array, g: Array, g_inv: Array | None = None) -> Array:
    """Return g·x·g⁻¹ on 0-based arrays."""
    if g_inv is None:
        g_inv = inverse_array(g)
    return tuple([g[x[j]] for j in g_inv])


def cycle_count_array(a: Array) -> int:
    seen = bytearray(len(a))
    count = 0
    for start in range(len(a)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = 1
            j = a[j]
    return count


def has_fixed_point_array(a: Array) -> bool:
    return any(j == i for i, j in enumerate(a))


def compose(p: Perm, q: Perm) -> Perm:
    """Return the product i ↦ p(q(i)).

    Raises:
        DegreeMismatchError: If the degrees differ.

    """
    _check_degrees(p, q)
    return Perm.from_array(compose_arrays(p.array, q.array))


def inverse(p: Perm) -> Perm:
    return Perm.from_array(inverse_array(p.array))


def conjugate(p: Perm, g: Perm) -> Perm:
    """Return g·p·g⁻¹, the image of ``p`` under relabelling by ``g``.

    Raises:
        DegreeMismatchError: If the degrees differ.

    """
    _check_degrees(p, g)
    return Perm.from_array(conjugate_arrays(p.array, g.array))


def cycles(p: Perm, include_singletons: bool = True) -> list[tuple[int, ...]]:
    """Cycles of ``p`` in 1-based labels, each starting at its smallest element."""
    a = p.array
    seen = [False] * len(a)
    result = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j + 1)
            j = a[j]
        if include_singletons or len(cycle) > 1:
            result.append(tuple(cycle))
    return result


def cycle_type(parts: Iterable[int]) -> CycleType:
    return tuple(sorted(parts, reverse=True))


def cycle_analysis(p: Perm) -> tuple[CycleType, int]:
    """Return the cycle type (singletons included, descending) and the cycle count."""
    lengths = [len(c) for c in cycles(p)]
    return cycle_type(lengths), len(lengths)


def from_cycles(cycle_list: Iterable[Sequence[int]], degree: int) -> Perm:
    """Build a permutation of degree ``degree`` from 1-based cycles.

    Raises:
        InvalidPermutationError: If a label repeats or falls outside 1..degree.

    """
    img = list(range(degree))
    used: set[int] = set()
    for cycle in cycle_list:
        for k, label in enumerate(cycle):
            if not 1 <= label <= degree or label in used:
                raise InvalidPermutationError(f"Bad label {label} in cycle {tuple(cycle)}")
            used.add(label)
            img[label - 1] = cycle[(k + 1) % len(cycle)] - 1
    return Perm.from_array(tuple(img))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse one-line ``[3,5,7,1,2,6,4,8]`` or cycle ``(1,3,7,4)(2,5)`` text.

    Cycle text may omit singletons, in which case ``degree`` is required.

    Raises:
        InvalidPermutationError: On malformed text or a degree conflict.

    """
    text = text.strip()
    if text.startswith("["):
        body = text.strip("[]").strip()
        perm = Perm(int(tok) for tok in body.split(",")) if body else Perm(())
        if degree is not None and perm.degree != degree:
            raise InvalidPermutationError(f"Expected degree {degree}, got {perm.degree}")
        return perm
    if degree is None:
        raise InvalidPermutationError("Cycle notation needs an explicit degree")
    if _CYCLE_RE.sub("", text).strip():
        raise InvalidPermutationError(f"Malformed cycle text: {text!r}")
    cycle_list = [
        [int(tok) for tok in body.split(",")]
        for body in _CYCLE_RE.findall(text)
        if body.strip()
    ]
    return from_cycles(cycle_list, degree)


def format_one_line(p: Perm) -> str:
    return "[" + ",".join(str(i) for i in p.images) + "]"


def format_cycles(p: Perm) -> str:
    """Cycle string without singletons; the identity prints as ``()``."""
    parts = cycles(p, include_singletons=False)
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(i) for i in c) + ")" for c in parts)
