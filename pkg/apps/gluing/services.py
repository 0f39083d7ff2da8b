"""
Edge classes, cusp links and validation of glued complexes.
Reports describe problems in their fields; nothing here raises on a bad gluing.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .complex import FaceRef, GluingComplex
from .unionfind import DisjointSet

logger = logging.getLogger(__name__)


class EdgeEmbedding(NamedTuple):
    polyhedron: int
    edge: int
    reversed: bool


@dataclass(frozen=True)
class EdgeClass:
    members: Tuple[EdgeEmbedding, ...]
    flipped: bool
    closed: bool

    @property
    def size(self) -> int:
        return len(self.members)


class CycleStep(NamedTuple):
    pairing: int
    sign: int


@dataclass(frozen=True)
class EdgeCycle:
    """Pairings crossed, with direction, while circling one edge class."""
    edge_class: int
    steps: Tuple[CycleStep, ...]


@dataclass(frozen=True)
class CuspLink:
    vertices: Tuple[Tuple[int, int], ...]
    link_vertices: int
    link_edges: int
    link_faces: int
    orientable: bool
    closed: bool

    @property
    def corner_count(self) -> int:
        return len(self.vertices)

    @property
    def euler(self) -> int:
        return self.link_vertices - self.link_edges + self.link_faces

    @property
    def is_torus(self) -> bool:
        return self.closed and self.orientable and self.euler == 0


@dataclass(frozen=True)
class ValidityReport:
    edge_valences_ok: bool
    edge_holonomy_ok: bool
    links_are_tori: bool
    oriented_ok: bool
    connected_ok: bool
    cusp_count: int
    cusp_vertex_distribution: Tuple[int, ...]

    @property
    def accepted(self) -> bool:
        return all((
            self.edge_valences_ok,
            self.edge_holonomy_ok,
            self.links_are_tori,
            self.oriented_ok,
            self.connected_ok,
        ))

    @property
    def distribution_text(self) -> str:
        return ','.join(str(n) for n in self.cusp_vertex_distribution)


def _mapped_edge(complex_: GluingComplex, ref: FaceRef, edge: int) -> Tuple[FaceRef, int, int]:
    """Carry ``edge`` of face ``ref`` across its pairing; returns (face, edge, parity)."""
    t = complex_.template
    other, _, index = complex_.partner(ref)
    mapping = complex_.pairings[index].vertex_map(t, ref)
    u, v = t.edges[edge]
    mu, mv = mapping[u], mapping[v]
    return other, t.edge_index(mu, mv), int(mu > mv)


def edge_classes(complex_: GluingComplex) -> List[EdgeClass]:
    """
    Partition all edge embeddings (p, e) under the identifications made by
    the face pairings. Classes come ordered by their smallest member and each
    member records whether it runs against the class representative.
    """
    t = complex_.template
    sets = DisjointSet((p, e) for p in range(complex_.count) for e in range(t.edge_count))
    open_faces = set()
    for ref in complex_.refs():
        if complex_.partner(ref) is None:
            open_faces.add(ref)
            continue
        for e in t.face_edges[ref.face]:
            other, image, parity = _mapped_edge(complex_, ref, e)
            sets.union((ref.polyhedron, e), (other.polyhedron, image), parity)

    classes = []
    for members in sets.groups():
        embeddings = tuple(
            EdgeEmbedding(p, e, bool(sets.find_with_parity((p, e))[1]))
            for p, e in members
        )
        closed = not any(
            FaceRef(p, f) in open_faces for p, e in members for f in t.edge_faces[e]
        )
        classes.append(EdgeClass(embeddings, sets.has_conflict(members[0]), closed))
    return classes


def edge_cycles(complex_: GluingComplex) -> List[EdgeCycle]:
    """
    Walk once around each edge class of a complete complex.

    The walk leaves a polyhedron through one face at the edge, crosses the
    pairing and continues through the other face at the image edge. A step
    counts +1 when it leaves through the ``a`` side of a pairing and -1
    through the ``b`` side.
    """
    t = complex_.template
    cycles = []
    for index, edge_class in enumerate(edge_classes(complex_)):
        start = edge_class.members[0]
        state = (start.polyhedron, start.edge, t.edge_faces[start.edge][0])
        steps = []
        first = state
        while True:
            p, e, f = state
            ref = FaceRef(p, f)
            pairing_index = complex_.partner(ref)[2]
            pairing = complex_.pairings[pairing_index]
            steps.append(CycleStep(pairing_index, 1 if pairing.a == ref else -1))
            other, image, _ = _mapped_edge(complex_, ref, e)
            g0, g1 = t.edge_faces[image]
            state = (other.polyhedron, image, g1 if g0 == other.face else g0)
            if state == first:
                break
        cycles.append(EdgeCycle(index, tuple(steps)))
    return cycles


def vertex_links(complex_: GluingComplex) -> List[CuspLink]:
    """
    Group ideal vertices into cusps and assemble each cusp's link surface
    from the corner polygons, one side per face at the vertex.
    """
    t = complex_.template
    corners = DisjointSet((p, v) for p in range(complex_.count) for v in range(t.vertex_count))
    # link vertices are edge ends (p, edge, endpoint)
    ends = DisjointSet(
        (p, e, v) for p in range(complex_.count) for e, edge in enumerate(t.edges) for v in edge
    )
    sides_glued: Dict[Tuple[int, int], int] = {}

    for pairing in complex_.pairings:
        mapping = pairing.vertex_map(t, pairing.a)
        pa, pb = pairing.a.polyhedron, pairing.b.polyhedron
        face = t.faces[pairing.a.face]
        for c, v in enumerate(face):
            w = mapping[v]
            # side of polygon (pa, v) runs face[c+1] -> face[c+2]
            start, end = face[(c + 1) % 3], face[(c + 2) % 3]
            g_face = t.faces[pairing.b.face]
            cw = t.corner(pairing.b.face, w)
            g_start = g_face[(cw + 1) % 3]
            # sides traversed in opposite directions keep orientations compatible
            corners.union((pa, v), (pb, w), 0 if mapping[end] == g_start else 1)
            for key in ((pa, v), (pb, w)):
                sides_glued[key] = sides_glued.get(key, 0) + 1
            for x in (start, end):
                ends.union((pa, t.edge_index(v, x), v), (pb, t.edge_index(w, mapping[x]), w))

    corner_degree = len(t.faces_at(0))
    links = []
    for members in corners.groups():
        member_set = set(members)
        link_ends = {
            ends.find((p, t.edge_index(v, x), v))
            for p, v in members
            for x in t.neighbors_around(v)
        }
        glued = sum(sides_glued.get(m, 0) for m in members)
        total_sides = corner_degree * len(members)
        links.append(CuspLink(
            vertices=tuple(members),
            link_vertices=len(link_ends),
            link_edges=glued // 2 + (total_sides - glued),
            link_faces=len(member_set),
            orientable=not corners.has_conflict(members[0]),
            closed=glued == total_sides,
        ))
    return links


def orientation_reversing(complex_: GluingComplex) -> bool:
    """True when every pairing reverses the boundary orientation of its faces."""
    t = complex_.template
    for pairing in complex_.pairings:
        mapping = pairing.vertex_map(t, pairing.a)
        image = [mapping[v] for v in t.faces[pairing.a.face]]
        target = t.faces[pairing.b.face]
        k = target.index(image[0])
        if image[1] != target[(k - 1) % 3]:
            return False
    return True


def validate(complex_: GluingComplex, *, classes: Optional[List[EdgeClass]] = None) -> ValidityReport:
    t = complex_.template
    if classes is None:
        classes = edge_classes(complex_)
    links = vertex_links(complex_)
    report = ValidityReport(
        edge_valences_ok=complex_.is_complete and all(
            c.size == t.edge_valence_target for c in classes
        ),
        edge_holonomy_ok=not any(c.flipped for c in classes),
        links_are_tori=all(link.is_torus for link in links),
        oriented_ok=orientation_reversing(complex_),
        connected_ok=len(complex_.components()) == 1,
        cusp_count=len(links),
        cusp_vertex_distribution=tuple(sorted(link.corner_count for link in links)),
    )
    logger.debug(f'Validated {complex_.kind}{complex_.count}: accepted={report.accepted}')
    return report


@dataclass(frozen=True)
class CellCounts:
    """Cells of the glued complex with its ideal vertices filled in."""
    vertices: int
    edges: int
    faces: int
    polyhedra: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces - self.polyhedra


def cell_counts(complex_: GluingComplex) -> CellCounts:
    t = complex_.template
    return CellCounts(
        vertices=len(vertex_links(complex_)),
        edges=len(edge_classes(complex_)),
        faces=complex_.count * t.face_count // 2,
        polyhedra=complex_.count,
    )
