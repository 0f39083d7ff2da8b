import random
from collections import Counter
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from apps.polyhedra.services import template

from .complex import FacePairing, FaceRef, GluingComplex, relabel
from .fileformat import dump_gluing, loads, read_gluings
from .services import cell_counts, edge_classes, edge_cycles, validate, vertex_links
from .unionfind import DisjointSet


def octahedra(count, *pairs):
    return GluingComplex('oct', count, tuple(
        FacePairing.create((p, f), (q, g), r) for p, f, q, g, r in pairs
    ))


# Four-cusp gluings with one-vertex cusps and with two-vertex cusps.
PATTERN_I = octahedra(
    2,
    (0, 0, 0, 2, 0), (0, 1, 0, 3, 0), (1, 0, 1, 2, 0), (1, 1, 1, 3, 0),
    (0, 4, 1, 6, 0), (0, 5, 1, 7, 0), (0, 6, 1, 4, 0), (0, 7, 1, 5, 0),
)
PATTERN_II = octahedra(
    2,
    (0, 0, 1, 0, 0), (0, 1, 1, 1, 0), (0, 2, 1, 2, 0), (0, 3, 1, 3, 0),
    (0, 4, 1, 6, 0), (0, 5, 1, 7, 0), (0, 6, 1, 4, 0), (0, 7, 1, 5, 0),
)
# Adjacent faces folded onto each other.
FOLDED = octahedra(1, (0, 0, 0, 1, 0), (0, 2, 0, 3, 0), (0, 4, 0, 5, 0), (0, 6, 0, 7, 0))
ONE_FACE_BETWEEN = octahedra(
    2,
    (0, 0, 1, 0, 0), (0, 1, 0, 2, 0), (0, 3, 0, 4, 0), (0, 5, 0, 6, 0),
    (0, 7, 1, 1, 0), (1, 2, 1, 3, 0), (1, 4, 1, 5, 0), (1, 6, 1, 7, 0),
)


def random_relabeling(rng, complex_):
    permutation = list(range(complex_.count))
    rng.shuffle(permutation)
    rotations = [rng.choice(complex_.template.rotations) for _ in range(complex_.count)]
    return relabel(complex_, permutation, rotations)


class DisjointSetTests(SimpleTestCase):

    def test_groups_are_sorted(self):
        sets = DisjointSet(range(6))
        sets.union(4, 1)
        sets.union(5, 3)
        sets.union(3, 1)
        self.assertEqual(sets.groups(), [[0], [1, 3, 4, 5], [2]])

    def test_odd_cycle_is_a_conflict(self):
        sets = DisjointSet('abc')
        self.assertTrue(sets.union('a', 'b', 1))
        self.assertTrue(sets.union('b', 'c', 1))
        self.assertFalse(sets.has_conflict('a'))
        self.assertFalse(sets.union('a', 'c', 1))
        self.assertTrue(sets.has_conflict('c'))

    def test_parity_relative_to_root(self):
        sets = DisjointSet('abcd')
        sets.union('c', 'd', 1)
        sets.union('a', 'b', 0)
        sets.union('b', 'd', 1)
        self.assertEqual(sets.find_with_parity('c'), ('a', 0))
        self.assertEqual(sets.find_with_parity('d'), ('a', 1))


class FacePairingTests(SimpleTestCase):

    def test_normalized_order(self):
        pairing = FacePairing.create((1, 3), (0, 5), 2)
        self.assertEqual(pairing.a, FaceRef(0, 5))
        self.assertEqual(pairing.b, FaceRef(1, 3))
        self.assertEqual(pairing.rotation, 2)

    def test_vertex_map_is_symmetric(self):
        t = template('oct')
        for r in range(3):
            pairing = FacePairing.create((0, 0), (1, 4), r)
            forward = pairing.vertex_map(t, pairing.a)
            backward = pairing.vertex_map(t, pairing.b)
            self.assertEqual({w: v for v, w in forward.items()}, backward)

    def test_from_vertex_map(self):
        t = template('oct')
        pairing = FacePairing.from_vertex_map(t, (0, 0), (0, 2), {0: 0, 1: 3, 2: 4})
        self.assertEqual(pairing, FacePairing.create((0, 0), (0, 2), 0))

    def test_orientation_preserving_map_rejected(self):
        t = template('oct')
        with self.assertRaises(ValidationError):
            FacePairing.from_vertex_map(t, (0, 0), (0, 2), {0: 0, 1: 4, 2: 3})

    def test_self_gluing_rejected(self):
        with self.assertRaises(ValidationError):
            FacePairing.create((0, 1), (0, 1), 0)

    def test_face_used_twice_rejected(self):
        with self.assertRaises(ValidationError):
            octahedra(1, (0, 0, 0, 1, 0), (0, 1, 0, 2, 0))


class EdgeClassTests(SimpleTestCase):

    def test_pattern_classes_have_valence_four(self):
        for complex_ in (PATTERN_I, PATTERN_II):
            classes = edge_classes(complex_)
            self.assertEqual([c.size for c in classes], [4] * 6)
            self.assertFalse(any(c.flipped for c in classes))

    def test_classes_partition_embeddings(self):
        for complex_ in (PATTERN_I, PATTERN_II, FOLDED, ONE_FACE_BETWEEN):
            t = complex_.template
            members = Counter(
                (m.polyhedron, m.edge) for c in edge_classes(complex_) for m in c.members
            )
            self.assertEqual(len(members), complex_.count * t.edge_count)
            self.assertEqual(set(members.values()), {1})

    def test_mismatched_gluing_breaks_valence(self):
        report = validate(ONE_FACE_BETWEEN)
        self.assertFalse(report.edge_valences_ok)
        self.assertFalse(report.accepted)

    def test_folded_edge_rejected(self):
        sizes = sorted(c.size for c in edge_classes(FOLDED))
        self.assertEqual(sizes[0], 1)
        self.assertFalse(validate(FOLDED).accepted)

    def test_cycles_cross_each_glued_edge_once(self):
        cycles = edge_cycles(PATTERN_I)
        self.assertEqual([len(c.steps) for c in cycles], [4] * 6)
        crossings = Counter(step.pairing for c in cycles for step in c.steps)
        self.assertEqual(crossings, Counter({i: 3 for i in range(8)}))

    def test_incomplete_complex_reports_open_classes(self):
        partial = octahedra(1, (0, 0, 0, 7, 0))
        classes = edge_classes(partial)
        self.assertTrue(any(not c.closed for c in classes))
        self.assertFalse(validate(partial).edge_valences_ok)


class VertexLinkTests(SimpleTestCase):

    def test_pattern_i_links_are_tori(self):
        links = vertex_links(PATTERN_I)
        self.assertEqual(len(links), 4)
        for link in links:
            self.assertTrue(link.closed)
            self.assertTrue(link.orientable)
            self.assertEqual(link.euler, 0)

    def test_pattern_ii_distribution(self):
        sizes = sorted(link.corner_count for link in vertex_links(PATTERN_II))
        self.assertEqual(sizes, [2, 2, 4, 4])

    def test_single_octahedron_opposite_faces(self):
        complex_ = octahedra(1, (0, 0, 0, 7, 0), (0, 1, 0, 6, 0), (0, 2, 0, 5, 0), (0, 3, 0, 4, 0))
        links = vertex_links(complex_)
        self.assertTrue(all(link.closed for link in links))
        self.assertEqual(sum(link.corner_count for link in links), 6)
        self.assertEqual(4 * sum(link.link_faces for link in links), 24)

    def test_links_partition_vertices(self):
        for complex_ in (PATTERN_I, PATTERN_II, FOLDED):
            vertices = [v for link in vertex_links(complex_) for v in link.vertices]
            self.assertEqual(len(vertices), len(set(vertices)))
            self.assertEqual(len(vertices), complex_.count * 6)


class ValidateTests(SimpleTestCase):

    def test_patterns_accepted(self):
        for complex_, distribution in ((PATTERN_I, (1, 1, 2, 8)), (PATTERN_II, (2, 2, 4, 4))):
            report = validate(complex_)
            self.assertTrue(report.accepted)
            self.assertEqual(report.cusp_count, 4)
            self.assertEqual(report.cusp_vertex_distribution, distribution)

    def test_distribution_text(self):
        self.assertEqual(validate(PATTERN_I).distribution_text, '1,1,2,8')

    def test_disconnected_complex_rejected(self):
        complex_ = octahedra(
            2,
            (0, 0, 0, 2, 0), (0, 1, 0, 3, 0), (0, 4, 0, 6, 0), (0, 5, 0, 7, 0),
            (1, 0, 1, 2, 0), (1, 1, 1, 3, 0), (1, 4, 1, 6, 0), (1, 5, 1, 7, 0),
        )
        self.assertEqual(len(complex_.components()), 2)
        self.assertFalse(validate(complex_).connected_ok)

    def test_euler_count(self):
        for complex_ in (PATTERN_I, PATTERN_II):
            counts = cell_counts(complex_)
            self.assertEqual(counts.edges, 6)
            self.assertEqual(counts.faces, 8)
            self.assertEqual(counts.euler, validate(complex_).cusp_count)

    def test_report_invariant_under_relabeling(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED)
        for complex_ in (PATTERN_I, PATTERN_II, ONE_FACE_BETWEEN):
            expected = validate(complex_)
            for _ in range(25):
                self.assertEqual(validate(random_relabeling(rng, complex_)), expected)


class FileFormatTests(SimpleTestCase):

    def fixture_path(self, name):
        return Path(settings.PAPER_FIXTURE_DIR) / name

    def test_fixture_files_round_trip(self):
        for name, expected in (('gluing_i.json', PATTERN_I), ('gluing_ii.json', PATTERN_II)):
            path = self.fixture_path(name)
            [complex_] = read_gluings(path)
            self.assertEqual(complex_, expected)
            self.assertEqual(dump_gluing(complex_), path.read_text(encoding='utf-8'))

    def test_incomplete_document_rejected(self):
        with self.assertRaises(ValidationError):
            loads('{"kind": "oct", "count": 1, "pairings": [{"a": [0, 0], "b": [0, 7], "rot": 0}]}')

    def test_malformed_documents_rejected(self):
        for text in ('[1, 2]', '{"kind": "cube", "count": 1, "pairings": []}', '{"kind": "oct"', '{}'):
            with self.assertRaises(ValidationError):
                loads(text)

    def test_missing_file_names_path(self):
        with self.assertRaisesMessage(ValidationError, 'no_such.json'):
            read_gluings(self.fixture_path('no_such.json'))
