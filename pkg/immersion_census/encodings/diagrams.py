import json
from dataclasses import asdict, dataclass

from immersion_census.encodings.codes import InvalidCodeError, ZCode
from immersion_census.encodings.z_method import is_single_cycle
from immersion_census.permcore.perm import Perm, cycle_count_array


@dataclass(frozen=True)
class DiagramCode:
    """Vertex-by-vertex record of an oriented curve diagram, for external drawing tools.

    Edges carry the labels 1..2n. Vertex a lists its half-edges clockwise as
    ``[in1, in2, out1, out2]``: the edges entering it, then the edges leaving it,
    where ``out1`` continues ``in1`` across the crossing. ``closure`` is the edge
    sequence met along the curve starting from edge 1. ``virtual_crossings`` is the
    genus, the least number of virtual crossings any planar drawing needs.
    """

    n: int
    vertices: tuple[tuple[int, int, int, int], ...]
    closure: tuple[int, ...]
    virtual_crossings: int
    single_component: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "DiagramCode":
        data = json.loads(text)
        return cls(
            n=data["n"],
            vertices=tuple(tuple(v) for v in data["vertices"]),
            closure=tuple(data["closure"]),
            virtual_crossings=data["virtual_crossings"],
            single_component=data["single_component"],
        )


def diagram_face_count(vertices: tuple[tuple[int, int, int, int], ...]) -> int:
    """Faces of the fat graph given by the clockwise vertex records.

    Darts are edge ends (head of edge e = 2(e−1), tail = 2(e−1)+1); faces are the
    cycles of "rotate clockwise after crossing to the other end".
    """
    m = 2 * len(vertices)
    rotation = [0] * (2 * m)
    for in1, in2, out1, out2 in vertices:
        darts = [2 * (in1 - 1), 2 * (in2 - 1), 2 * (out1 - 1) + 1, 2 * (out2 - 1) + 1]
        for k in range(4):
            rotation[darts[k]] = darts[(k + 1) % 4]
    return cycle_count_array(tuple(rotation[d ^ 1] for d in range(2 * m)))


def diagram_from_z(c: ZCode) -> DiagramCode:
    """Assemble the diagram record of a Z code.

    Vertex a receives the edges 2a−1 and 2a; each leaves along π of itself, giving
    the record (2a−1, 2a, π(2a−1), π(2a)). Reading the curve instead as the word of
    edges it meets, a vertex is often written, for an odd edge e = π(j), as e and
    e+1 ingoing with π(j+1) and π(π(j)+1) outgoing: the edges that follow e and e+1
    along the curve. Both describe the same map; records here are ordered by vertex
    rather than by position along the curve.

    Raises:
        InvalidCodeError: If π is not a single cycle.

    """
    pi = c.pi
    if not is_single_cycle(pi.array):
        raise InvalidCodeError("π must be a single 2n-cycle")
    vertices = tuple(
        (2 * a - 1, 2 * a, pi(2 * a - 1), pi(2 * a)) for a in range(1, c.n + 1)
    )
    closure = [1]
    while len(closure) < 2 * c.n:
        closure.append(pi(closure[-1]))
    faces = diagram_face_count(vertices)
    genus = (c.n + 2 - faces) // 2
    return DiagramCode(c.n, vertices, tuple(closure), genus, pi(closure[-1]) == 1)


def z_from_diagram(d: DiagramCode) -> ZCode:
    """Read π back off the vertex records: π(in1) = out1, π(in2) = out2."""
    images = [0] * (2 * d.n)
    for in1, in2, out1, out2 in d.vertices:
        images[in1 - 1], images[in2 - 1] = out1, out2
    return ZCode(d.n, Perm(images))
