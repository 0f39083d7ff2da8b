"""
Face pairings of N labeled polyhedra.

A pairing glues face ``a`` to face ``b`` by the orientation-reversing
corner bijection i -> (rotation - i) mod 3. The same formula maps corners
of ``b`` back to ``a``, so swapping the sides keeps the rotation.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from django.core.exceptions import ValidationError

from apps.polyhedra.models import PolyhedronKind
from apps.polyhedra.services import Permutation, PolyhedronTemplate, template


class FaceRef(NamedTuple):
    polyhedron: int
    face: int


@dataclass(frozen=True, order=True)
class FacePairing:
    a: FaceRef
    b: FaceRef
    rotation: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValidationError(f'Face {tuple(self.a)} cannot be glued to itself')
        if self.rotation not in (0, 1, 2):
            raise ValidationError(f'Rotation must be 0, 1 or 2, got {self.rotation}')

    @classmethod
    def create(cls, a, b, rotation: int) -> 'FacePairing':
        """Build a pairing with its sides in normalized order (a < b)."""
        a, b = FaceRef(*a), FaceRef(*b)
        if b < a:
            a, b = b, a
        return cls(a, b, rotation)

    @classmethod
    def from_vertex_map(cls, t: PolyhedronTemplate, a, b, mapping: Dict[int, int]) -> 'FacePairing':
        """Build the pairing that sends vertex v of face ``a`` to ``mapping[v]`` on face ``b``."""
        a, b = FaceRef(*a), FaceRef(*b)
        face_a, face_b = t.faces[a.face], t.faces[b.face]
        rotation = t.corner(b.face, mapping[face_a[0]])
        for i, v in enumerate(face_a):
            if mapping[v] != face_b[(rotation - i) % 3]:
                raise ValidationError(
                    f'Vertex map {mapping} from face {tuple(a)} to {tuple(b)} preserves orientation'
                )
        return cls.create(a, b, rotation)

    def vertex_map(self, t: PolyhedronTemplate, source: FaceRef) -> Dict[int, int]:
        """Vertex correspondence from the ``source`` side to the other side."""
        if source == self.a:
            near, far = self.a, self.b
        elif source == self.b:
            near, far = self.b, self.a
        else:
            raise ValidationError(f'{tuple(source)} is not a side of this pairing')
        face_near, face_far = t.faces[near.face], t.faces[far.face]
        return {v: face_far[(self.rotation - i) % 3] for i, v in enumerate(face_near)}

    def other(self, ref: FaceRef) -> FaceRef:
        return self.b if ref == self.a else self.a


@dataclass(frozen=True)
class GluingComplex:
    """N polyhedra of one kind with a set of face pairings."""
    kind: PolyhedronKind
    count: int
    pairings: Tuple[FacePairing, ...]

    def __post_init__(self):
        object.__setattr__(self, 'kind', PolyhedronKind(self.kind))
        object.__setattr__(self, 'pairings', tuple(sorted(self.pairings)))
        if self.count < 1:
            raise ValidationError(f'A complex needs at least one polyhedron, got {self.count}')
        faces = self.template.face_count
        seen = set()
        for pairing in self.pairings:
            for ref in (pairing.a, pairing.b):
                if not (0 <= ref.polyhedron < self.count and 0 <= ref.face < faces):
                    raise ValidationError(f'Face reference {tuple(ref)} is out of range')
                if ref in seen:
                    raise ValidationError(f'Face {tuple(ref)} appears in more than one pairing')
                seen.add(ref)

    @property
    def template(self) -> PolyhedronTemplate:
        return template(self.kind)

    @property
    def is_complete(self) -> bool:
        return 2 * len(self.pairings) == self.count * self.template.face_count

    @cached_property
    def partners(self) -> Dict[FaceRef, Tuple[FaceRef, int, int]]:
        """Map each glued face to (partner face, rotation, pairing index)."""
        table = {}
        for index, pairing in enumerate(self.pairings):
            table[pairing.a] = (pairing.b, pairing.rotation, index)
            table[pairing.b] = (pairing.a, pairing.rotation, index)
        return table

    def partner(self, ref) -> Optional[Tuple[FaceRef, int, int]]:
        return self.partners.get(FaceRef(*ref))

    def refs(self) -> Iterable[FaceRef]:
        for p in range(self.count):
            for f in range(self.template.face_count):
                yield FaceRef(p, f)

    def components(self) -> List[List[int]]:
        """Polyhedron indices grouped by connectivity across pairings."""
        adjacency: Dict[int, set] = {p: set() for p in range(self.count)}
        for pairing in self.pairings:
            adjacency[pairing.a.polyhedron].add(pairing.b.polyhedron)
            adjacency[pairing.b.polyhedron].add(pairing.a.polyhedron)
        seen, groups = set(), []
        for start in range(self.count):
            if start in seen:
                continue
            group, stack = [], [start]
            seen.add(start)
            while stack:
                p = stack.pop()
                group.append(p)
                for q in sorted(adjacency[p]):
                    if q not in seen:
                        seen.add(q)
                        stack.append(q)
            groups.append(sorted(group))
        return groups

    def restricted(self, polyhedra: Sequence[int]) -> 'GluingComplex':
        """The sub-complex on ``polyhedra`` (a union of components), renumbered in order."""
        index = {p: i for i, p in enumerate(polyhedra)}
        pairings = [
            FacePairing.create(
                (index[pr.a.polyhedron], pr.a.face), (index[pr.b.polyhedron], pr.b.face), pr.rotation
            )
            for pr in self.pairings
            if pr.a.polyhedron in index
        ]
        return GluingComplex(self.kind, len(polyhedra), tuple(pairings))


def transform_pairing(
    t: PolyhedronTemplate,
    pairing: FacePairing,
    permutation: Sequence[int],
    rotations: Sequence[Permutation],
) -> FacePairing:
    """Image of ``pairing`` after renumbering polyhedra and rotating each one."""
    source = pairing.a
    mapping = pairing.vertex_map(t, source)
    rot_a = rotations[pairing.a.polyhedron]
    rot_b = rotations[pairing.b.polyhedron]
    new_a = (permutation[pairing.a.polyhedron], t.rotated_face(pairing.a.face, rot_a))
    new_b = (permutation[pairing.b.polyhedron], t.rotated_face(pairing.b.face, rot_b))
    new_mapping = {rot_a[v]: rot_b[w] for v, w in mapping.items()}
    return FacePairing.from_vertex_map(t, new_a, new_b, new_mapping)


def relabel(
    complex_: GluingComplex,
    permutation: Sequence[int],
    rotations: Sequence[Permutation],
) -> GluingComplex:
    """
    Renumber polyhedron p as ``permutation[p]`` and relabel its vertices by
    ``rotations[p]``. The result is isomorphic to the input.
    """
    if sorted(permutation) != list(range(complex_.count)):
        raise ValidationError(f'{list(permutation)} is not a permutation of the polyhedra')
    t = complex_.template
    pairings = tuple(transform_pairing(t, pr, permutation, rotations) for pr in complex_.pairings)
    return GluingComplex(complex_.kind, complex_.count, pairings)
