"""
Backtracking search over face pairings.

Faces are numbered as slots ``p * F + f``. The search always glues the
lowest free slot next, trying partners in (polyhedron, face, rotation)
order, and abandons a branch as soon as an edge class closes at the wrong
valence or flipped, grows past the valence target, or can no longer be
completed from the open chains that remain.

Workers receive plain tuples and return plain tuples so subtrees can be
fanned out to separate processes.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from apps.gluing.complex import FacePairing, GluingComplex, transform_pairing
from apps.polyhedra.services import PolyhedronTemplate, template

logger = logging.getLogger(__name__)

Leaf = Tuple[Tuple[int, int, int], ...]


@dataclass
class SearchState:
    """
    Mutable partial gluing owned by a single worker.

    Every edge wedge ``(p, e)`` sits in a chain of wedges joined through
    glued faces. An open chain has two ends, each an unglued face side of a
    wedge, numbered ``(p * E + e) * 2 + side``. Both ends of a chain hold its
    length and one bit saying whether the first vertex of the edge at one end
    is identified with the first or second vertex of the edge at the other.
    Gluing a face joins three pairs of ends; every change is recorded on a
    trail so ``unglue`` can restore it.
    """
    t: PolyhedronTemplate
    count: int
    partner: List[int] = field(default_factory=list)
    rotation: List[int] = field(default_factory=list)
    nodes: int = 0

    def __post_init__(self):
        t = self.t
        slots = self.count * t.face_count
        self.partner = [-1] * slots
        self.rotation = [0] * slots
        self.target = t.edge_valence_target
        ends = self.count * t.edge_count * 2
        self.twin = [end ^ 1 for end in range(ends)]
        self.length = [1] * ends
        self.flip = [0] * ends
        self.end_slot = [
            (end // 2 // t.edge_count) * t.face_count + t.edge_faces[(end // 2) % t.edge_count][end % 2]
            for end in range(ends)
        ]
        self.open_chains = [0] * (self.target + 1)
        self.open_chains[1] = self.count * t.edge_count
        self._trail: List[Tuple[List[int], int, int]] = []
        self._marks: List[int] = []
        self._joins = _join_table(t.kind)

    @property
    def faces(self) -> int:
        return self.t.face_count

    def _set(self, values: List[int], index: int, value: int) -> None:
        self._trail.append((values, index, values[index]))
        values[index] = value

    def glue(self, slot: int, other: int, rotation: int) -> bool:
        """Glue two free slots; False when some edge class can no longer be completed."""
        self._marks.append(len(self._trail))
        self._set(self.partner, slot, other)
        self._set(self.partner, other, slot)
        self._set(self.rotation, slot, rotation)
        self._set(self.rotation, other, rotation)
        p, f = divmod(slot, self.faces)
        q, g = divmod(other, self.faces)
        base_p, base_q = p * self.t.edge_count * 2, q * self.t.edge_count * 2
        touched = []
        for near, far, bit in self._joins[f][g][rotation]:
            end = self._join(base_p + near, base_q + far, bit)
            if end is None:
                return False
            if end >= 0:
                touched.append(end)
        return all(self._completable(end) for end in touched if self.twin[end] >= 0)

    def _join(self, near: int, far: int, bit: int) -> Optional[int]:
        """
        Join two chain ends across a glued face. Returns an end of the merged
        chain, -1 when the chain closed correctly, or None on a dead branch.
        """
        length, twin, flip = self.length, self.twin, self.flip
        near_twin, near_length, near_flip = twin[near], length[near], flip[near]
        if near_twin == far:
            if near_length != self.target or near_flip != bit:
                return None
            self._set(self.open_chains, near_length, self.open_chains[near_length] - 1)
            self._set(twin, near, -1)
            self._set(twin, far, -1)
            return -1
        far_twin, far_length = twin[far], length[far]
        merged = near_length + far_length
        if merged > self.target:
            return None
        combined = near_flip ^ bit ^ flip[far]
        self._set(self.open_chains, near_length, self.open_chains[near_length] - 1)
        self._set(self.open_chains, far_length, self.open_chains[far_length] - 1)
        self._set(self.open_chains, merged, self.open_chains[merged] + 1)
        self._set(twin, near_twin, far_twin)
        self._set(twin, far_twin, near_twin)
        for end in (near_twin, far_twin):
            self._set(length, end, merged)
            self._set(flip, end, combined)
        self._set(twin, near, -1)
        self._set(twin, far, -1)
        return near_twin

    def _completable(self, end: int) -> bool:
        """
        Lower bound for the open chain at ``end``. A full chain must close by
        gluing its two end faces together, so they must be different slots.
        A short chain can only grow by whole open chains, so the missing
        wedges must be a sum of lengths of other open chains.
        """
        size = self.length[end]
        missing = self.target - size
        if missing == 0:
            return self.end_slot[end] != self.end_slot[self.twin[end]]
        reachable = 1
        mask = (1 << (missing + 1)) - 1
        for size_ in range(1, missing + 1):
            available = self.open_chains[size_] - (size_ == size)
            for _ in range(min(available, missing // size_)):
                reachable = (reachable | reachable << size_) & mask
        return bool(reachable >> missing & 1)

    def unglue(self) -> None:
        """Undo the most recent ``glue``."""
        mark = self._marks.pop()
        trail = self._trail
        while len(trail) > mark:
            values, index, value = trail.pop()
            values[index] = value

    def first_free(self) -> int:
        try:
            return self.partner.index(-1)
        except ValueError:
            return -1

    def leaf(self) -> Leaf:
        return tuple(
            (slot, self.partner[slot], self.rotation[slot])
            for slot in range(len(self.partner))
            if slot < self.partner[slot]
        )

    def extend(self) -> Iterator[Leaf]:
        self.nodes += 1
        slot = self.first_free()
        if slot < 0:
            yield self.leaf()
            return
        for other in range(slot + 1, len(self.partner)):
            if self.partner[other] >= 0:
                continue
            for rotation in range(3):
                if self.glue(slot, other, rotation):
                    yield from self.extend()
                self.unglue()


Join = Tuple[int, int, int]


@lru_cache(maxsize=None)
def _join_table(kind) -> Tuple[Tuple[Tuple[Tuple[Join, ...], ...], ...], ...]:
    """
    For faces f, g and a rotation: the end offsets joined by that gluing and
    the bit comparing the first vertices of the two edges.
    """
    t = template(kind)

    def joins(f, g, r):
        face, target = t.faces[f], t.faces[g]
        image = {v: target[(r - i) % 3] for i, v in enumerate(face)}
        found = []
        for e in t.face_edges[f]:
            u, v = t.edges[e]
            image_edge = t.edge_index(image[u], image[v])
            bit = int(image[u] != t.edges[image_edge][0])
            near = e * 2 + t.edge_faces[e].index(f)
            far = image_edge * 2 + t.edge_faces[image_edge].index(g)
            found.append((near, far, bit))
        return tuple(found)

    faces = range(t.face_count)
    return tuple(tuple(tuple(joins(f, g, r) for r in range(3)) for g in faces) for f in faces)


def root_pairings(kind, count: int) -> List[FacePairing]:
    """
    Gluings of face (0, 0) that represent every complex up to isomorphism.

    A partner face on another polyhedron can always be renumbered and rotated
    to (1, 0) with rotation 0. Partners on polyhedron 0 are reduced to orbit
    minima under the rotations of polyhedron 0 that fix face 0.
    """
    t = template(kind)
    identity = t.rotations[0]
    stabilizer = [rot for rot in t.rotations if t.rotated_face(0, rot) == 0]
    roots = []
    for g, r in itertools.product(range(1, t.face_count), range(3)):
        pairing = FacePairing.create((0, 0), (0, g), r)
        orbit = {
            transform_pairing(t, pairing, range(count), [rot] + [identity] * (count - 1))
            for rot in stabilizer
        }
        if pairing == min(orbit):
            roots.append(pairing)
    if count > 1:
        roots.append(FacePairing.create((0, 0), (1, 0), 0))
    return roots


def search_root(kind, count: int, root: Tuple[int, int, int]) -> Tuple[List[Leaf], int]:
    """Complete every gluing below ``root`` (slot, slot, rotation); returns (leaves, nodes)."""
    state = SearchState(template(kind), count)
    slot, other, rotation = root
    leaves = []
    if state.glue(slot, other, rotation):
        leaves = list(state.extend())
    logger.debug(f'Root {root}: {len(leaves)} leaves, {state.nodes} nodes')
    return leaves, state.nodes


def root_slots(t: PolyhedronTemplate, pairing: FacePairing) -> Tuple[int, int, int]:
    a = pairing.a.polyhedron * t.face_count + pairing.a.face
    b = pairing.b.polyhedron * t.face_count + pairing.b.face
    return a, b, pairing.rotation


def leaf_complex(kind, count: int, leaf: Leaf) -> GluingComplex:
    faces = template(kind).face_count
    return GluingComplex(kind, count, tuple(
        FacePairing.create(divmod(a, faces), divmod(b, faces), r) for a, b, r in leaf
    ))


def perfect_matchings(slots: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for i, other in enumerate(rest):
        for matching in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + matching


def all_gluings(kind, count: int) -> Iterator[GluingComplex]:
    """Every complete gluing, with no pruning and no symmetry reduction."""
    slots = list(range(count * template(kind).face_count))
    for matching in perfect_matchings(slots):
        for rotations in itertools.product(range(3), repeat=len(matching)):
            yield leaf_complex(kind, count, tuple(
                (a, b, r) for (a, b), r in zip(matching, rotations)
            ))
