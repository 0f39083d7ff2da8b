from collections import Counter

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from .models import PolyhedronKind
from .services import (
    compose,
    inverse_rotation,
    opposite_around,
    opposite_face,
    target_edge_valence,
    template,
)

KINDS = (PolyhedronKind.OCTAHEDRON, PolyhedronKind.TETRAHEDRON)


class TemplateTests(SimpleTestCase):

    def test_octahedron_counts(self):
        t = template(PolyhedronKind.OCTAHEDRON)
        self.assertEqual((t.face_count, t.edge_count, t.vertex_count), (8, 12, 6))

    def test_tetrahedron_counts(self):
        t = template('tet')
        self.assertEqual((t.face_count, t.edge_count, t.vertex_count), (4, 6, 4))

    def test_every_edge_lies_on_two_faces(self):
        for kind in KINDS:
            t = template(kind)
            incidences = Counter(e for edges in t.face_edges for e in edges)
            self.assertEqual(sum(incidences.values()), 3 * t.face_count)
            self.assertEqual(set(incidences.values()), {2})
            self.assertEqual(t.vertex_count - t.edge_count + t.face_count, 2)

    def test_rotation_group(self):
        for kind, order in ((PolyhedronKind.OCTAHEDRON, 24), (PolyhedronKind.TETRAHEDRON, 12)):
            t = template(kind)
            group = set(t.rotations)
            self.assertEqual(len(group), order)
            self.assertEqual(t.rotations[0], tuple(range(t.vertex_count)))
            for first in t.rotations:
                self.assertIn(inverse_rotation(first), group)
                for second in t.rotations:
                    self.assertIn(compose(first, second), group)

    def test_rotations_preserve_incidence(self):
        for kind in KINDS:
            t = template(kind)
            edge_set = set(t.edges)
            for rotation in t.rotations:
                images = sorted(t.rotated_face(f, rotation) for f in range(t.face_count))
                self.assertEqual(images, list(range(t.face_count)))
                for u, v in t.edges:
                    a, b = rotation[u], rotation[v]
                    self.assertIn((min(a, b), max(a, b)), edge_set)

    def test_flag_rotation_covers_every_flag_once(self):
        for kind in KINDS:
            t = template(kind)
            self.assertEqual(len(t.flag_rotation), 3 * t.face_count)
            self.assertEqual(len(set(t.flag_rotation.values())), len(t.rotations))


class ValenceTests(SimpleTestCase):

    def test_targets(self):
        self.assertEqual(target_edge_valence(PolyhedronKind.OCTAHEDRON), 4)
        self.assertEqual(target_edge_valence(PolyhedronKind.TETRAHEDRON), 6)
        self.assertEqual(template('oct').edge_valence_target, 4)


class OppositeFaceTests(SimpleTestCase):

    def test_fixed_point_free_involution(self):
        t = template('oct')
        for f in range(8):
            g = opposite_face('oct', f)
            self.assertNotEqual(f, g)
            self.assertEqual(opposite_face('oct', g), f)
            self.assertFalse(set(t.faces[f]) & set(t.faces[g]))

    def test_labeling_pairs_f_with_seven_minus_f(self):
        self.assertEqual([opposite_face('oct', f) for f in range(8)], [7, 6, 5, 4, 3, 2, 1, 0])

    def test_tetrahedron_rejected(self):
        with self.assertRaises(ValidationError):
            opposite_face('tet', 0)


class VertexRingTests(SimpleTestCase):

    def test_faces_at_vertex_zero(self):
        t = template('oct')
        self.assertEqual(t.faces_at(0), (0, 1, 2, 3))
        self.assertEqual(t.neighbors_around(0), (1, 2, 4, 3))

    def test_consecutive_faces_share_an_edge(self):
        for kind in KINDS:
            t = template(kind)
            for v in range(t.vertex_count):
                ring = t.faces_at(v)
                self.assertEqual(len(ring), 4 if kind == PolyhedronKind.OCTAHEDRON else 3)
                for i, f in enumerate(ring):
                    shared = set(t.faces[f]) & set(t.faces[ring[(i + 1) % len(ring)]])
                    self.assertEqual(len(shared), 2)
                    self.assertIn(v, shared)

    def test_opposite_around(self):
        self.assertEqual(opposite_around('oct', 0, 0), 2)
        self.assertEqual(opposite_around('oct', 0, 3), 1)
        with self.assertRaises(ValidationError):
            opposite_around('oct', 0, 7)
        with self.assertRaises(ValidationError):
            opposite_around('tet', 0, 1)
