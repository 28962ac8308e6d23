"""Kink and primality filters on immersion classes.

Primality is tested on the curve diagram as a graph: crossings are nodes and each
arc between crossings is a further node joined to its two ends, so that loops and
parallel arcs stay visible to the connectivity routines.
"""

from itertools import combinations

import networkx as nx

from immersion_census.census.immersion_class import ImmersionClass, Method
from immersion_census.encodings.z_method import psi_array
from immersion_census.permcore.fixed_perms import rho0, x_sigma
from immersion_census.permcore.perm import compose_arrays, has_fixed_point_array, inverse_array


def curve_graph(c: ImmersionClass) -> nx.MultiGraph:
    """Crossings 0..n−1 as nodes, one edge per arc of the curve."""
    rep = c.rep.array
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(c.n))
    if c.method == Method.X:
        for h in range(4 * c.n):
            if h < rep[h]:
                graph.add_edge(h // 4, rep[h] // 4, key=h)
    else:
        # arc e joins the crossings of the label pairs holding e and rep⁻¹(e)
        inv = inverse_array(rep)
        for e in range(2 * c.n):
            graph.add_edge(e // 2, inv[e] // 2, key=e)
    return graph


def _subdivided(graph: nx.MultiGraph) -> nx.Graph:
    sub = nx.Graph()
    sub.add_nodes_from(("v", v) for v in graph.nodes)
    for a, b, key in graph.edges(keys=True):
        sub.add_edge(("v", a), ("e", key))
        sub.add_edge(("v", b), ("e", key))
    return sub


def filter_kink_free(c: ImmersionClass) -> bool:
    """True iff no face has length 1, i.e. the curve has no simple loop."""
    rep = c.rep.array
    match c.method:
        case Method.X:
            return not has_fixed_point_array(compose_arrays(x_sigma(c.n).array, rep))
        case Method.Z:
            return not has_fixed_point_array(psi_array(rep, c.n))
        case _:
            return not (
                has_fixed_point_array(rep)
                or has_fixed_point_array(compose_arrays(rep, rho0(c.n).array))
            )


def is_irreducible(c: ImmersionClass) -> bool:
    """No crossing whose removal disconnects the diagram."""
    sub = _subdivided(curve_graph(c))
    return not any(node[0] == "v" for node in nx.articulation_points(sub))


def is_indecomposable(c: ImmersionClass) -> bool:
    """No two arcs whose cutting leaves two parts that both contain a crossing."""
    sub = _subdivided(curve_graph(c))
    arcs = [node for node in sub.nodes if node[0] == "e"]
    for a, b in combinations(arcs, 2):
        rest = sub.subgraph(node for node in sub.nodes if node not in (a, b))
        parts_with_crossings = sum(
            1 for part in nx.connected_components(rest) if any(node[0] == "v" for node in part)
        )
        if parts_with_crossings >= 2:
            return False
    return True


def filter_prime(c: ImmersionClass) -> tuple[bool, bool]:
    """(irreducible, indecomposable) for the diagram of ``c``."""
    return is_irreducible(c), is_indecomposable(c)
