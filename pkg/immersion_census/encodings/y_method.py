from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice, permutations, product
from math import factorial

from immersion_census.encodings.codes import InvalidCodeError, UCode, XCode, YCode
from immersion_census.encodings.x_method import is_one_component_x
from immersion_census.permcore.fixed_perms import beta, rho0, x_sigma
from immersion_census.permcore.perm import (
    Array,
    Perm,
    compose_arrays,
    conjugate_arrays,
    cycle_count_array,
    inverse_array,
)


class BicolourabilityError(ValueError):
    """Raised when the faces of a map admit no proper 2-colouring."""

    pass


def is_one_component_y(sigma: Array, n: int) -> bool:
    """ρ̃ρ ∈ [n²] with ρ̃ = σρσ⁻¹."""
    rho = rho0(n).array
    a = compose_arrays(conjugate_arrays(rho, sigma), rho)
    seen = bytearray(len(a))
    cycles = 0
    for start in range(len(a)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = 1
            j = a[j]
            length += 1
        if length != n:
            return False
        cycles += 1
    return cycles == 2


def y_genus_array(sigma: Array, n: int) -> int:
    """Genus from c(σ) + c(σρ) = n + 2 − 2g."""
    faces = cycle_count_array(sigma) + cycle_count_array(compose_arrays(sigma, rho0(n).array))
    return (n + 2 - faces) // 2


def y_classify(c: YCode) -> int | None:
    """Genus of the bicoloured immersion encoded by ``c``, None if it has several components."""
    if not is_one_component_y(c.sigma.array, c.n):
        return None
    return y_genus_array(c.sigma.array, c.n)


def y_prime_size(n: int) -> int:
    """|Y′| = 2^{2n−1}(n−1)!n!."""
    return 2 ** (2 * n - 1) * factorial(n - 1) * factorial(n)


def y_prime_arrays(n: int, start: int = 0, stop: int | None = None) -> Iterator[Array]:
    """Every one-component σ ∈ S₂ₙ, in lexicographic order."""
    valid = (s for s in permutations(range(2 * n)) if is_one_component_y(s, n))
    return islice(valid, start, stop)


def y_prime_generate(n: int) -> Iterator[YCode]:
    for sigma in y_prime_arrays(n):
        yield YCode(n, Perm.from_array(sigma))


def hyperoctahedral_arrays(n: int, start: int = 0, stop: int | None = None) -> Iterator[Array]:
    """Elements ξ of 𝒞_ρ: pair a goes to pair p(a), flipped when f(a) = 1."""
    elements = product(permutations(range(n)), product((0, 1), repeat=n))
    for pairs, flips in islice(elements, start, stop):
        xi = [0] * (2 * n)
        for a in range(n):
            xi[2 * a] = 2 * pairs[a] + flips[a]
            xi[2 * a + 1] = 2 * pairs[a] + 1 - flips[a]
        yield tuple(xi)


def u_sigma_arrays(n: int, start: int = 0, stop: int | None = None) -> Iterator[Array]:
    """σ = β·ξ for every ξ ∈ 𝒞_ρ."""
    m = 2 * n
    for xi in hyperoctahedral_arrays(n, start, stop):
        yield tuple([(v + 1) % m for v in xi])


def u_enumerate(n: int, start: int = 0, stop: int | None = None) -> Iterator[UCode]:
    """All 2ⁿn! gauge-fixed codes."""
    for xi in hyperoctahedral_arrays(n, start, stop):
        yield UCode(n, Perm.from_array(xi))


def convert_u_to_y(c: UCode) -> YCode:
    return YCode(c.n, c.sigma)


def convert_x_to_y(c: XCode) -> YCode:
    """Re-encode a bicolourable X code on its 2n edges.

    Faces are the cycles of στ. The corner of the face reached through half-edge h
    is coloured white when h can be 2-coloured so; white faces are read clockwise
    (giving σ) and shaded faces counter-clockwise (giving τ = σρ). The edge pairing
    ρ = σ⁻¹τ is finally relabelled to ρ₀.

    Raises:
        BicolourabilityError: If the faces admit no proper 2-colouring.
        InvalidCodeError: If the code is not a one-component map.

    """
    n = c.n
    tau = c.tau.array
    if not is_one_component_x(tau, n):
        raise InvalidCodeError("X code does not describe a one-component curve")
    sig = x_sigma(n).array
    m = 4 * n
    phi = compose_arrays(sig, tau)

    face = [-1] * m
    n_faces = 0
    for start in range(m):
        if face[start] < 0:
            j = start
            while face[j] < 0:
                face[j] = n_faces
                j = phi[j]
            n_faces += 1

    neighbours: list[list[int]] = [[] for _ in range(n_faces)]
    for h in range(m):
        if face[h] == face[tau[h]]:
            raise BicolourabilityError("An edge has the same face on both sides")
        neighbours[face[h]].append(face[tau[h]])
    colour = [-1] * n_faces
    colour[face[tau[0]]] = 0
    queue = deque([face[tau[0]]])
    while queue:
        f = queue.popleft()
        for g in neighbours[f]:
            if colour[g] < 0:
                colour[g] = 1 - colour[f]
                queue.append(g)
            elif colour[g] == colour[f]:
                raise BicolourabilityError("Faces admit no proper 2-colouring")

    edge = [-1] * m
    n_edges = 0
    for h in range(m):
        if edge[h] < 0:
            edge[h] = edge[tau[h]] = n_edges
            n_edges += 1

    sigma_y = [-1] * n_edges
    tau_y = [-1] * n_edges
    for h in range(m):
        if colour[face[tau[h]]] == 0:
            sigma_y[edge[h]] = edge[sig[h]]
        else:
            tau_y[edge[sig[h]]] = edge[h]
    if -1 in sigma_y or -1 in tau_y:
        raise InvalidCodeError("Face colouring does not cover every edge once")
    rho = compose_arrays(inverse_array(tuple(sigma_y)), tuple(tau_y))
    if any(rho[e] == e or rho[rho[e]] != e for e in range(n_edges)):
        raise InvalidCodeError("Edge pairing is not a fixed-point-free involution")

    gamma = [-1] * n_edges
    k = 0
    for e in range(n_edges):
        if gamma[e] < 0:
            gamma[e], gamma[rho[e]] = 2 * k, 2 * k + 1
            k += 1
    return YCode(n, Perm.from_array(conjugate_arrays(tuple(sigma_y), tuple(gamma))))


@dataclass(frozen=True)
class YPrimeUniverse:
    n: int

    @property
    def label(self) -> str:
        return f"Y_n{self.n}"

    @property
    def degree(self) -> int:
        return 2 * self.n

    @property
    def size(self) -> int:
        return y_prime_size(self.n)

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]:
        return y_prime_arrays(self.n, start, stop)


@dataclass(frozen=True)
class UUniverse:
    n: int

    @property
    def label(self) -> str:
        return f"U_n{self.n}"

    @property
    def degree(self) -> int:
        return 2 * self.n

    @property
    def size(self) -> int:
        return 2**self.n * factorial(self.n)

    def iter_range(self, start: int = 0, stop: int | None = None) -> Iterator[Array]:
        return u_sigma_arrays(self.n, start, stop)


def beta_code(n: int) -> YCode:
    """σ = β, the U code with ξ = e."""
    return YCode(n, beta(n))
