from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice, product
from math import prod

from immersion_census.encodings.codes import InvalidCodeError, XCode
from immersion_census.permcore.fixed_perms import x_sigma, x_sigma_squared
from immersion_census.permcore.perm import Array, Perm, compose_arrays, cycle_count_array


def is_one_component_x(tau: Array, n: int) -> bool:
    """σ²τ ∈ [(2n)²]: two cycles of length 2n."""
    a = compose_arrays(x_sigma_squared(n).array, tau)
    seen = bytearray(len(a))
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = 1
            j = a[j]
            length += 1
        lengths.append(length)
        if length != 2 * n:
            return False
    return len(lengths) == 2


def x_genus_array(tau: Array, n: int) -> int:
    """Genus from the face count c(στ) = n + 2 − 2g."""
    return (n + 2 - cycle_count_array(compose_arrays(x_sigma(n).array, tau))) // 2


def x_classify(c: XCode) -> int | None:
    """Genus of the immersion encoded by ``c``, or None when it has several components.

    Raises:
        InvalidCodeError: If τ is not a fixed-point-free involution.

    """
    tau = c.tau.array
    if any(tau[i] == i or tau[tau[i]] != i for i in range(len(tau))):
        raise InvalidCodeError("τ must be a fixed-point-free involution")
    if not is_one_component_x(tau, c.n):
        return None
    return x_genus_array(tau, c.n)


def x_prime_size(n: int) -> int:
    """|X′| = (4n−2)!!."""
    return prod(range(2, 4 * n - 1, 2))


def _tau_from_choices(n: int, choices: tuple[int, ...]) -> Array:
    s2 = x_sigma_squared(n).array
    tau = [-1] * (4 * n)
    a, i0 = 0, s2[0]
    avail = [lab for lab in range(4 * n) if lab not in (0, i0)]
    for c in choices:
        nxt = avail[c]
        tau[a], tau[nxt] = nxt, a
        a = s2[nxt]
        avail.remove(nxt)
        avail.remove(a)
    tau[a], tau[i0] = i0, a
    return tuple(tau)


def x_prime_arrays(n: int, start: int = 0, stop: int | None = None) -> Iterator[Array]:
    """Every τ in X′ exactly once, built by threading the σ²τ cycle through label 1.

    Starting at label 1, the partner of the current label is chosen among the
    labels not yet used (nor paired by σ² with a used one), then the thread
    continues from the σ² image of that partner; the last partner closes the
    cycle back onto σ²(1). That is 4n−2, 4n−4, …, 2 choices.
    """
    radices = [range(4 * n - 2 * (r + 1)) for r in range(2 * n - 1)]
    for choices in islice(product(*radices), start, stop):
        yield _tau_from_choices(n, choices)


def x_prime_generate(n: int, start: int = 0, stop: int | None = None) -> Iterator[XCode]:
    for tau in x_prime_arrays(n, start, stop):
        yield XCode(n, Perm.from_array(tau))


@dataclass(frozen=True)
class XPrimeUniverse:
    """X′ for ``n`` double points, as a sweepable universe."""

    n: int

    @property
    def label(self) -> str:
        return f"X_n{self.n}"

    @property
    def degree(self) -> int:
        return 4 * self.n

    @property
    def size(self) -> int:
        return x_prime_size(self.n)

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]:
        return x_prime_arrays(self.n, start, stop)
