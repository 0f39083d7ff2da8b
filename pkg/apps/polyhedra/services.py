"""
Combinatorial templates for the ideal regular tetrahedron and octahedron.

Vertex labels are fixed so that signatures are stable across runs:
octahedron vertices 0-5 with opposite pairs (0,5), (1,4), (2,3);
tetrahedron vertices 0-3. Every face is listed with its corners in the
cyclic order that induces the outward orientation of the boundary sphere.
"""
import itertools
import math
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Dict, List, Tuple

from django.core.exceptions import ValidationError

from .models import PolyhedronKind

Face = Tuple[int, int, int]
Edge = Tuple[int, int]
Permutation = Tuple[int, ...]


# Faces 0-3 surround vertex 0 in cyclic order; face f is opposite face 7 - f.
OCTAHEDRON_FACES: Tuple[Face, ...] = (
    (0, 1, 2),
    (0, 2, 4),
    (0, 4, 3),
    (0, 3, 1),
    (2, 5, 4),
    (1, 5, 2),
    (1, 3, 5),
    (3, 4, 5),
)
OCTAHEDRON_OPPOSITE: Dict[int, int] = {0: 5, 5: 0, 1: 4, 4: 1, 2: 3, 3: 2}

# Face i is the face opposite vertex i.
TETRAHEDRON_FACES: Tuple[Face, ...] = (
    (1, 2, 3),
    (0, 3, 2),
    (0, 1, 3),
    (0, 2, 1),
)

DIHEDRAL_ANGLES = {
    PolyhedronKind.TETRAHEDRON: math.pi / 3,
    PolyhedronKind.OCTAHEDRON: math.pi / 2,
}


@dataclass(frozen=True)
class PolyhedronTemplate:
    """Fixed combinatorics of one ideal regular polyhedron."""
    kind: PolyhedronKind
    faces: Tuple[Face, ...]
    edges: Tuple[Edge, ...]
    vertex_opposite: Dict[int, int]
    rotations: Tuple[Permutation, ...]
    edge_valence_target: int

    @property
    def vertex_count(self) -> int:
        return 1 + max(v for face in self.faces for v in face)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_lookup(self) -> List[List[int]]:
        """edge_lookup[u][v] is the index of edge {u, v}, or -1."""
        n = self.vertex_count
        table = [[-1] * n for _ in range(n)]
        for index, (u, v) in enumerate(self.edges):
            table[u][v] = index
            table[v][u] = index
        return table

    @cached_property
    def corner_table(self) -> List[List[int]]:
        """corner_table[f][v] is the corner of face f holding vertex v, or -1."""
        table = [[-1] * self.vertex_count for _ in self.faces]
        for f, face in enumerate(self.faces):
            for corner, v in enumerate(face):
                table[f][v] = corner
        return table

    @cached_property
    def face_lookup(self) -> Dict[frozenset, int]:
        return {frozenset(face): f for f, face in enumerate(self.faces)}

    @cached_property
    def face_edges(self) -> Tuple[Tuple[int, int, int], ...]:
        """Edges of each face; side i joins corner i to corner i + 1."""
        return tuple(
            tuple(self.edge_lookup[face[i]][face[(i + 1) % 3]] for i in range(3))
            for face in self.faces
        )

    @cached_property
    def edge_faces(self) -> Tuple[Tuple[int, int], ...]:
        incidences: List[List[int]] = [[] for _ in self.edges]
        for f, edges in enumerate(self.face_edges):
            for e in edges:
                incidences[e].append(f)
        return tuple(tuple(faces) for faces in incidences)

    def edge_index(self, u: int, v: int) -> int:
        index = self.edge_lookup[u][v]
        if index < 0:
            raise ValidationError(f'{u} and {v} do not span an edge of the {self.kind.label.lower()}')
        return index

    def corner(self, face: int, vertex: int) -> int:
        corner = self.corner_table[face][vertex]
        if corner < 0:
            raise ValidationError(f'Vertex {vertex} is not a corner of face {face}')
        return corner

    def face_of(self, vertices) -> int:
        return self.face_lookup[frozenset(vertices)]

    def rotated_face(self, face: int, rotation: Permutation) -> int:
        """Index of the face that ``rotation`` carries ``face`` onto."""
        return self.face_of(rotation[v] for v in self.faces[face])

    def faces_at(self, vertex: int) -> Tuple[int, ...]:
        """Faces containing ``vertex`` in the cyclic order of its link."""
        return _faces_at(self.kind, vertex)

    def neighbors_around(self, vertex: int) -> Tuple[int, ...]:
        """Vertices joined to ``vertex`` by an edge, in link order."""
        ring = []
        for f in self.faces_at(vertex):
            face = self.faces[f]
            c = self.corner(f, vertex)
            ring.append(face[(c + 1) % 3])
        return tuple(ring)

    @cached_property
    def flag_rotation(self) -> Dict[Tuple[int, int], Permutation]:
        """
        Rotation taking face f to face 0 with corner c landing on corner 0.

        The rotation group acts simply transitively on these (face, corner)
        flags, so each key has exactly one rotation.
        """
        table = {}
        target = self.faces[0][0]
        for rotation in self.rotations:
            for f, face in enumerate(self.faces):
                if self.rotated_face(f, rotation) != 0:
                    continue
                for c, v in enumerate(face):
                    if rotation[v] == target:
                        table[(f, c)] = rotation
        return table


def _is_rotation(faces: Tuple[Face, ...], permutation: Permutation) -> bool:
    oriented = set()
    for a, b, c in faces:
        oriented.update({(a, b, c), (b, c, a), (c, a, b)})
    return all(
        (permutation[a], permutation[b], permutation[c]) in oriented
        for a, b, c in faces
    )


def _edges_from_faces(faces: Tuple[Face, ...]) -> Tuple[Edge, ...]:
    edges = set()
    for face in faces:
        for i in range(3):
            u, v = face[i], face[(i + 1) % 3]
            edges.add((min(u, v), max(u, v)))
    return tuple(sorted(edges))


@cache
def template(kind) -> PolyhedronTemplate:
    """Return the canonical labeled template for ``kind``."""
    kind = PolyhedronKind(kind)
    if kind == PolyhedronKind.OCTAHEDRON:
        faces, opposite = OCTAHEDRON_FACES, dict(OCTAHEDRON_OPPOSITE)
    else:
        faces, opposite = TETRAHEDRON_FACES, {}
    vertex_count = 1 + max(v for face in faces for v in face)
    # Orientation-preserving symmetries only; identity sorts first.
    rotations = tuple(
        permutation
        for permutation in itertools.permutations(range(vertex_count))
        if _is_rotation(faces, permutation)
    )
    return PolyhedronTemplate(
        kind=kind,
        faces=faces,
        edges=_edges_from_faces(faces),
        vertex_opposite=opposite,
        rotations=rotations,
        edge_valence_target=target_edge_valence(kind),
    )


def target_edge_valence(kind) -> int:
    """Edge copies meeting around each edge class: 2*pi over the dihedral angle."""
    return round(2 * math.pi / DIHEDRAL_ANGLES[PolyhedronKind(kind)])


def opposite_face(kind, face: int) -> int:
    """The face of an octahedron sharing no vertex with ``face``."""
    kind = PolyhedronKind(kind)
    if kind != PolyhedronKind.OCTAHEDRON:
        raise ValidationError(f'A {kind.label.lower()} has no opposite faces')
    t = template(kind)
    opposite = {t.vertex_opposite[v] for v in t.faces[face]}
    return t.face_of(opposite)


@cache
def _faces_at(kind, vertex: int) -> Tuple[int, ...]:
    t = template(kind)
    start = next(f for f, face in enumerate(t.faces) if vertex in face)
    ring = [start]
    while True:
        face = t.faces[ring[-1]]
        c = t.corner(ring[-1], vertex)
        # The next face shares the edge from vertex to its predecessor corner.
        shared = t.edge_index(vertex, face[(c + 2) % 3])
        a, b = t.edge_faces[shared]
        following = b if a == ring[-1] else a
        if following == start:
            return tuple(ring)
        ring.append(following)


def opposite_around(kind, vertex: int, face: int) -> int:
    """The face across ``vertex`` from ``face`` (octahedra only)."""
    kind = PolyhedronKind(kind)
    if kind != PolyhedronKind.OCTAHEDRON:
        raise ValidationError(f'Faces around a {kind.label.lower()} vertex have no opposite')
    ring = template(kind).faces_at(vertex)
    if face not in ring:
        raise ValidationError(f'Face {face} does not contain vertex {vertex}')
    return ring[(ring.index(face) + 2) % len(ring)]


def inverse_rotation(rotation: Permutation) -> Permutation:
    inverse = [0] * len(rotation)
    for v, image in enumerate(rotation):
        inverse[image] = v
    return tuple(inverse)


def compose(first: Permutation, second: Permutation) -> Permutation:
    """Apply ``first`` then ``second``."""
    return tuple(second[first[v]] for v in range(len(first)))
