"""
Canonical signatures of glued complexes.

Every (polyhedron, rotation) start fixes a relabeling: polyhedra are numbered
in the order a breadth-first walk over the face pairings reaches them, and
each newly reached polyhedron is rotated so that it is entered through face 0
with rotation 0. Serializing the relabeled pairings gives one token sequence
per start; the smallest one is the signature. Relabeled and rotated copies
of a complex have the same set of sequences, hence the same signature.
"""
import string
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from django.core.exceptions import ValidationError

from apps.gluing.complex import FacePairing, FaceRef, GluingComplex, relabel
from apps.polyhedra.services import Permutation, inverse_rotation

DIGITS = string.digits + string.ascii_lowercase

Token = Tuple[int, int, int]


@dataclass(frozen=True, order=True)
class CanonicalSignature:
    text: str

    def __str__(self) -> str:
        return self.text


def _encode(tokens: Sequence[Token]) -> str:
    return ''.join(DIGITS[q] + DIGITS[g] + DIGITS[r] for q, g, r in tokens)


def _walk(
    complex_: GluingComplex, start: int, rotation: Permutation, best: Optional[List[Token]]
) -> Optional[Tuple[List[Token], List[int], List[Permutation]]]:
    """
    Token sequence for one start, or None as soon as it exceeds ``best``.
    Also returns the old -> new polyhedron numbering and vertex relabelings.
    """
    t = complex_.template
    labels = {start: 0}
    rotations = {start: rotation}
    order = [start]
    tokens: List[Token] = []
    emitted = set()
    position = 0
    while position < len(order):
        p = order[position]
        sigma = rotations[p]
        sigma_inverse = inverse_rotation(sigma)
        for g in range(t.face_count):
            # old face of p that sigma carries onto new face g
            old_face = t.face_of(sigma_inverse[v] for v in t.faces[g])
            ref = FaceRef(p, old_face)
            if ref in emitted:
                continue
            other, _, index = complex_.partner(ref)
            q, h = other
            mapping = complex_.pairings[index].vertex_map(t, ref)
            entry_vertex = mapping[sigma_inverse[t.faces[g][0]]]
            if q not in labels:
                rotations[q] = t.flag_rotation[(h, t.corner(h, entry_vertex))]
                labels[q] = len(order)
                order.append(q)
            tau = rotations[q]
            new_h = t.rotated_face(h, tau)
            # corner 0 of new face g lands on corner r of new face new_h
            token = (labels[q], new_h, t.corner(new_h, tau[entry_vertex]))
            emitted.add(ref)
            emitted.add(other)
            tokens.append(token)
            if best is not None:
                k = len(tokens) - 1
                if token > best[k]:
                    return None
                if token < best[k]:
                    best = None
        position += 1
    if len(order) != complex_.count:
        raise ValidationError('Canonical labeling needs a connected complex')
    permutation = [0] * complex_.count
    for old, new in labels.items():
        permutation[old] = new
    return tokens, permutation, [rotations[p] for p in range(complex_.count)]


def _connected_form(complex_: GluingComplex) -> Tuple[List[Token], GluingComplex]:
    t = complex_.template
    best = None
    for start in range(complex_.count):
        for rotation in t.rotations:
            result = _walk(complex_, start, rotation, best[0] if best else None)
            if result is not None and (best is None or result[0] < best[0]):
                best = result
    tokens, permutation, rotations = best
    return tokens, relabel(complex_, permutation, rotations)


def canonical_form(complex_: GluingComplex) -> Tuple[CanonicalSignature, GluingComplex]:
    """
    Signature plus the canonically relabeled complex. Disconnected complexes
    are handled per component; components are joined in signature order.
    """
    components = complex_.components()
    prefix = f'{complex_.kind.value}{complex_.count}:'
    if len(components) == 1:
        tokens, canonical = _connected_form(complex_)
        return CanonicalSignature(prefix + _encode(tokens)), canonical

    parts = []
    for polyhedra in components:
        tokens, canonical = _connected_form(complex_.restricted(polyhedra))
        parts.append((_encode(tokens), canonical))
    parts.sort(key=lambda part: part[0])
    pairings, offset = [], 0
    for _, canonical in parts:
        for pr in canonical.pairings:
            pairings.append(FacePairing.create(
                (pr.a.polyhedron + offset, pr.a.face), (pr.b.polyhedron + offset, pr.b.face), pr.rotation
            ))
        offset += canonical.count
    signature = CanonicalSignature(prefix + '|'.join(text for text, _ in parts))
    return signature, GluingComplex(complex_.kind, complex_.count, tuple(pairings))


def canonical_signature(complex_: GluingComplex) -> CanonicalSignature:
    return canonical_form(complex_)[0]
