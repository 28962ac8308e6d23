from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice, permutations
from math import factorial

from immersion_census.encodings.codes import InvalidCodeError, XCode, ZCode
from immersion_census.permcore.fixed_perms import x_sigma, x_sigma_squared
from immersion_census.permcore.perm import Array, Perm, cycle_count_array, inverse_array


def is_single_cycle(a: Array) -> bool:
    j, length = a[0], 1
    while j != 0:
        j = a[j]
        length += 1
    return length == len(a)


def psi_array(pi: Array, n: int) -> Array:
    """ψ_π ∈ S₄ₙ, whose cycles are the faces of the map encoded by π.

    In 1-based labels, for 1 ≤ i ≤ 2n: ψ(i) = π(i+1) for odd i and i−1+2n for
    even i; with j = π⁻¹(i), ψ(i+2n) = j+1+2n for odd j and π(j−1) for even j.
    """
    m = 2 * n
    inv = inverse_array(pi)
    psi = [0] * (2 * m)
    for lab in range(m):
        psi[lab] = pi[lab + 1] if lab % 2 == 0 else lab + m - 1
        j = inv[lab]
        psi[lab + m] = j + 1 + m if j % 2 == 0 else pi[j - 1]
    return tuple(psi)


def z_genus_array(pi: Array, n: int) -> int:
    return (n + 2 - cycle_count_array(psi_array(pi, n))) // 2


def z_genus(c: ZCode) -> int:
    """Genus of the oriented immersion encoded by a cyclic π.

    Raises:
        InvalidCodeError: If π is not a single 2n-cycle.

    """
    if not is_single_cycle(c.pi.array):
        raise InvalidCodeError("π must be a single 2n-cycle")
    return z_genus_array(c.pi.array, c.n)


def z_prime_size(n: int) -> int:
    """|Z′| = (2n−1)!."""
    return factorial(2 * n - 1)


def z_prime_arrays(n: int, start: int = 0, stop: int | None = None) -> Iterator[Array]:
    """Every 2n-cycle, read off as 1 → a₂ → … → a₂ₙ → 1 over the orders of 2..2n."""
    m = 2 * n
    for tail in islice(permutations(range(1, m)), start, stop):
        pi = [0] * m
        prev = 0
        for lab in tail:
            pi[prev] = lab
            prev = lab
        pi[prev] = 0
        yield tuple(pi)


def z_prime_generate(n: int, start: int = 0, stop: int | None = None) -> Iterator[ZCode]:
    for pi in z_prime_arrays(n, start, stop):
        yield ZCode(n, Perm.from_array(pi))


def z_genus_partition(n: int) -> list[int]:
    """Number of cyclic π of each genus, by direct enumeration of Z′."""
    counts = Counter(z_genus_array(pi, n) for pi in z_prime_arrays(n))
    return [counts[g] for g in range(max(counts) + 1)]


def convert_x_to_z(c: XCode) -> ZCode:
    """Orient the thread of a one-component X code and label its edges the Z way.

    The thread leaves half-edge 1, crosses each edge to its partner under τ and
    leaves each vertex by the opposite half-edge σ². At every vertex the two
    incoming half-edges are adjacent; the one followed clockwise by the other gets
    the odd label of that vertex's pair.

    Raises:
        InvalidCodeError: If the code has more than one component.

    """
    n = c.n
    tau = c.tau.array
    s1 = x_sigma(n).array
    s2 = x_sigma_squared(n).array
    m = 2 * n
    incoming = []
    out = 0
    for _ in range(m):
        incoming.append(tau[out])
        out = s2[tau[out]]
    if out != 0 or len(set(incoming)) != m:
        raise InvalidCodeError("X code does not describe a single closed curve")

    in_set = set(incoming)
    label = {}
    for h in incoming:
        vertex = h // 4
        first = h if s1[h] in in_set else s2[s1[h]]
        label[h] = 2 * vertex + (0 if h == first else 1)
    pi = [0] * m
    for k in range(m):
        pi[label[incoming[k]]] = label[incoming[(k + 1) % m]]
    return ZCode(n, Perm.from_array(tuple(pi)))


@dataclass(frozen=True)
class ZPrimeUniverse:
    n: int

    @property
    def label(self) -> str:
        return f"Z_n{self.n}"

    @property
    def degree(self) -> int:
        return 2 * self.n

    @property
    def size(self) -> int:
        return z_prime_size(self.n)

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]:
        return z_prime_arrays(self.n, start, stop)
