"""The twelve immersion kinds as explicit class lists.

Each kind is the class list of one census method taken modulo some of its
involutions, e.g. UU = Z classes modulo reversal and mirror.
"""

from collections.abc import Callable, Sequence

from immersion_census.census.derive_counts import normalize_kind
from immersion_census.census.immersion_class import ImmersionClass, Method
from immersion_census.census.symmetry_profile import InvolutionPair, merge_classes

KIND_SOURCES: dict[str, tuple[Method, tuple[str, ...]]] = {
    "OO": (Method.Z, ()),
    "UO": (Method.Z, ("r",)),
    "OU": (Method.Z, ("m",)),
    "UU": (Method.Z, ("r", "m")),
    "OOc": (Method.U_CYCLIC, ()),
    "OOb": (Method.U_CYCLIC, ("s",)),
    "OUc": (Method.U_CYCLIC, ("m",)),
    "OUb": (Method.U_CYCLIC, ("s", "m")),
    "UOc": (Method.U_DIHEDRAL, ()),
    "UOb": (Method.U_DIHEDRAL, ("s",)),
    "UUc": (Method.U_DIHEDRAL, ("m",)),
    "UUb": (Method.U_DIHEDRAL, ("s", "m")),
}

# profiles whose derivations cover every kind of a source method
PROFILE_PAIRS: dict[Method, tuple[InvolutionPair, ...]] = {
    Method.Z: (InvolutionPair.RM,),
    Method.U_CYCLIC: (InvolutionPair.SR, InvolutionPair.SM),
    Method.U_DIHEDRAL: (InvolutionPair.SM,),
}


def source_method(kind: str) -> Method:
    return KIND_SOURCES[normalize_kind(kind)][0]


def classes_of_kind(
    kind: str, classes_for: Callable[[Method], Sequence[ImmersionClass]]
) -> list[ImmersionClass]:
    """Representatives of the immersions of ``kind``.

    Args:
        kind (str): One of the twelve kinds, any case.
        classes_for (Callable[[Method], Sequence[ImmersionClass]]): Supplies the
            complete class list of a method (for a fixed n).

    Returns:
        list[ImmersionClass]: One class per immersion of the kind.

    """
    method, involutions = KIND_SOURCES[normalize_kind(kind)]
    return merge_classes(classes_for(method), involutions)
