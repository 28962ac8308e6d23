"""Census methods, their acting groups and universes, and the class record they produce."""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from immersion_census.encodings.x_method import XPrimeUniverse, x_genus_array
from immersion_census.encodings.y_method import UUniverse, YPrimeUniverse, y_genus_array
from immersion_census.encodings.z_method import ZPrimeUniverse, z_genus_array
from immersion_census.grouporbits.group_spec import GroupName, GroupSpec, make_group
from immersion_census.grouporbits.universe import Universe
from immersion_census.permcore.perm import Array, Perm


class Method(StrEnum):
    X = "X"
    Y = "Y"
    U_DIHEDRAL = "U-dihedral"
    U_CYCLIC = "U-cyclic"
    Z = "Z"


METHOD_GROUPS = {
    Method.X: GroupName.C_SIGMA,
    Method.Y: GroupName.C_RHO,
    Method.U_DIHEDRAL: GroupName.D_N,
    Method.U_CYCLIC: GroupName.Z_N,
    Method.Z: GroupName.C_RHO_PRIME,
}


def group_for_method(method: Method | str, n: int) -> GroupSpec:
    """The relabelling group whose orbits are the classes of ``method``."""
    return make_group(METHOD_GROUPS[Method(method)], n)


def universe_for_method(method: Method | str, n: int) -> Universe:
    """X′, Y′, U or Z′ for ``n`` double points."""
    match Method(method):
        case Method.X:
            return XPrimeUniverse(n)
        case Method.Y:
            return YPrimeUniverse(n)
        case Method.U_DIHEDRAL | Method.U_CYCLIC:
            return UUniverse(n)
        case Method.Z:
            return ZPrimeUniverse(n)


def rep_degree(method: Method | str, n: int) -> int:
    return 4 * n if Method(method) == Method.X else 2 * n


def genus_of(method: Method | str, rep: Array, n: int) -> int:
    """Genus of a one-component representative of ``method``."""
    match Method(method):
        case Method.X:
            return x_genus_array(rep, n)
        case Method.Z:
            return z_genus_array(rep, n)
        case _:
            return y_genus_array(rep, n)


def naive_estimate(method: Method | str, n: int) -> Fraction:
    """|universe| / |group|, the class count if every stabilizer were trivial."""
    return Fraction(universe_for_method(method, n).size, group_for_method(method, n).order)


@dataclass(frozen=True)
class ImmersionClass:
    """One orbit of a census method: an immersion class up to the method's relabelling.

    Attributes:
        method (Method): Encoding and acting group.
        n (int): Number of double points.
        g (int): Genus.
        rep (Perm): Canonical (minimal) member of the orbit.
        orbit_len (int): Number of members.
        stab_order (int): Order of the stabilizer; ``orbit_len * stab_order`` is the group order.

    """

    method: Method
    n: int
    g: int
    rep: Perm
    orbit_len: int
    stab_order: int

    def recomputed_genus(self) -> int:
        return genus_of(self.method, self.rep.array, self.n)
