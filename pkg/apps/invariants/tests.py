import itertools
import math
import random
from functools import reduce
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from apps.census.services import CensusQuery, enumerate_census
from apps.gluing.complex import FacePairing, FaceRef, GluingComplex, relabel
from apps.gluing.fileformat import read_gluings

from .services import (
    HomologyGroup,
    adams_lower_bound,
    compute_records,
    cusp_count_upper_bound,
    first_homology,
    format_homology,
    guts_volume_bound,
    miyamoto_volume_bound,
    volume,
)
from .smith import multiply, smith_normal_form

V3 = 1.0149416064096536
V8 = 3.663862376708876


def fixture(name):
    return read_gluings(Path(settings.PAPER_FIXTURE_DIR) / name)[0]


def sympy_factors(rows):
    if not rows or not rows[0]:
        return ()
    return tuple(abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ) if f != 0)


def minors_gcd(rows, k):
    gcd = 0
    for r in itertools.combinations(range(len(rows)), k):
        for c in itertools.combinations(range(len(rows[0])), k):
            gcd = math.gcd(gcd, int(Matrix([[rows[i][j] for j in c] for i in r]).det()))
    return gcd


def wedge_walks(complex_):
    """
    Pairings crossed going once around each edge class, as (pairing, sign)
    lists, found by following face vertex maps from wedge to wedge.
    """
    t = complex_.template
    side_of = {}
    for j, pairing in enumerate(complex_.pairings):
        side_of[pairing.a] = side_of[pairing.b] = j
    seen, walks = set(), []
    for start in itertools.product(range(complex_.count), range(t.edge_count)):
        if start in seen:
            continue
        crossed = []
        (p, e), face = start, t.edge_faces[start[1]][0]
        while (p, e) not in seen:
            seen.add((p, e))
            ref = FaceRef(p, face)
            j = side_of[ref]
            pairing = complex_.pairings[j]
            crossed.append((j, 1 if ref == pairing.a else -1))
            image = pairing.vertex_map(t, ref)
            u, v = t.edges[e]
            arrival = pairing.other(ref)
            p, e = arrival.polyhedron, t.edge_index(image[u], image[v])
            f0, f1 = t.edge_faces[e]
            face = f1 if f0 == arrival.face else f0
        walks.append(crossed)
    return walks


def chain_complex_homology(complex_):
    """H1 of the dual cell complex: polyhedra, pairings and edge classes."""
    n = len(complex_.pairings)
    boundary_1 = Matrix.zeros(complex_.count, n)
    for j, pairing in enumerate(complex_.pairings):
        boundary_1[pairing.b.polyhedron, j] += 1
        boundary_1[pairing.a.polyhedron, j] -= 1
    walks = wedge_walks(complex_)
    boundary_2 = Matrix.zeros(n, len(walks))
    for k, crossed in enumerate(walks):
        for j, sign in crossed:
            boundary_2[j, k] += sign
    assert boundary_1 * boundary_2 == Matrix.zeros(complex_.count, len(walks))
    torsion = tuple(
        abs(int(f)) for f in invariant_factors(boundary_2, domain=ZZ) if abs(int(f)) > 1
    )
    return HomologyGroup(n - boundary_1.rank() - boundary_2.rank(), torsion)


class SmithNormalFormTests(SimpleTestCase):

    def test_identity(self):
        form = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(form.factors, (1, 1, 1))
        self.assertEqual(form.rank, 3)

    def test_diagonal_two_three(self):
        self.assertEqual(smith_normal_form([[2, 0], [0, 3]]).factors, (1, 6))

    def test_zero_matrix(self):
        form = smith_normal_form([[0, 0, 0], [0, 0, 0]])
        self.assertEqual(form.factors, ())
        self.assertEqual(form.rank, 0)

    def test_known_example(self):
        form = smith_normal_form([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
        self.assertEqual(form.factors, (1, 10, 30))

    def test_random_matrices(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED)
        for _ in range(60):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            matrix = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            form = smith_normal_form(matrix)
            self.assertEqual(multiply(multiply(form.left, matrix), form.right),
                             [list(row) for row in form.diagonal])
            self.assertEqual(abs(Matrix(form.left).det()), 1)
            self.assertEqual(abs(Matrix(form.right).det()), 1)
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        self.assertEqual(form.diagonal[i][j], 0)
            factors = form.factors
            for small, large in zip(factors, factors[1:]):
                self.assertEqual(large % small, 0)
            self.assertEqual(factors, sympy_factors(matrix))

    def test_factor_products_match_minor_gcds(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED + 1)
        for _ in range(15):
            size = rng.randint(2, 4)
            matrix = [[rng.randint(-6, 6) for _ in range(size)] for _ in range(size)]
            factors = smith_normal_form(matrix, track=False).factors
            for k in range(1, len(factors) + 1):
                self.assertEqual(reduce(lambda x, y: x * y, factors[:k]), minors_gcd(matrix, k))

    def test_large_entries_stay_exact(self):
        big = 10 ** 30
        form = smith_normal_form([[big, big + 1], [big - 1, big]])
        self.assertEqual(form.factors, (1, 1))


class HomologyTests(SimpleTestCase):

    def test_pattern_i(self):
        complex_ = fixture('gluing_i.json')
        self.assertEqual(first_homology(complex_), HomologyGroup(4))
        self.assertEqual(chain_complex_homology(complex_), HomologyGroup(4))

    def test_pattern_ii(self):
        complex_ = fixture('gluing_ii.json')
        self.assertEqual(first_homology(complex_), HomologyGroup(4))
        self.assertEqual(chain_complex_homology(complex_), HomologyGroup(4))

    def test_invariant_under_relabeling(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED)
        complex_ = fixture('gluing_i.json')
        rotations = complex_.template.rotations
        for _ in range(10):
            permutation = [0, 1]
            rng.shuffle(permutation)
            copy = relabel(complex_, permutation, [rng.choice(rotations) for _ in range(2)])
            self.assertEqual(first_homology(copy), HomologyGroup(4))

    def test_two_tetrahedra_census_agrees_with_chain_complex(self):
        classes = enumerate_census(CensusQuery('tet', 2))
        self.assertTrue(classes)
        ranks = set()
        for census_class in classes:
            group = first_homology(census_class.complex)
            self.assertEqual(group, chain_complex_homology(census_class.complex))
            ranks.add(group.rank)
        self.assertIn(1, ranks)

    def test_wedge_walks_close_at_valence(self):
        for census_class in enumerate_census(CensusQuery('oct', 2, 4)):
            complex_ = census_class.complex
            walks = wedge_walks(complex_)
            self.assertEqual(len(walks), 6)
            for crossed in walks:
                self.assertEqual(len(crossed), 4)
            self.assertEqual(chain_complex_homology(complex_), HomologyGroup(4))

    def test_rejected_complex(self):
        folded = GluingComplex('oct', 1, tuple(
            FacePairing.create((0, f), (0, f + 1), 0) for f in (0, 2, 4, 6)
        ))
        with self.assertRaises(ValidationError):
            first_homology(folded)
        with self.assertRaises(ValidationError):
            volume(folded)

    def test_format(self):
        self.assertEqual(format_homology(HomologyGroup(4)), 'Z^4')
        self.assertEqual(format_homology(HomologyGroup(1)), 'Z')
        self.assertEqual(format_homology(HomologyGroup(1, (5,))), 'Z + Z/5')
        self.assertEqual(format_homology(HomologyGroup(0)), '0')
        self.assertEqual(format_homology(HomologyGroup(0, (2, 4))), 'Z/2 + Z/4')

    def test_torsion_must_divide(self):
        with self.assertRaises(ValidationError):
            HomologyGroup(0, (2, 3))


class VolumeTests(SimpleTestCase):

    def test_two_octahedra(self):
        self.assertAlmostEqual(volume(fixture('gluing_i.json')), 2 * V8, places=12)
        self.assertTrue(f'{volume(fixture("gluing_ii.json")):.12f}'.startswith('7.32'))

    def test_two_tetrahedra(self):
        complex_ = enumerate_census(CensusQuery('tet', 2))[0].complex
        self.assertAlmostEqual(volume(complex_), 2 * V3, places=12)
        self.assertTrue(f'{volume(complex_):.12f}'.startswith('2.02'))

    def test_adams_bound(self):
        self.assertAlmostEqual(adams_lower_bound(4), 4.059766425638614, places=12)
        self.assertAlmostEqual(adams_lower_bound(1), V3, places=12)
        self.assertLess(adams_lower_bound(2), V8)
        with self.assertRaises(ValidationError):
            adams_lower_bound(0)

    def test_guts_bound(self):
        self.assertAlmostEqual(guts_volume_bound(-4), 2 * V8, places=12)
        self.assertEqual(guts_volume_bound(0), 0)
        self.assertAlmostEqual(guts_volume_bound(-2), V8, places=12)
        self.assertAlmostEqual(miyamoto_volume_bound(-2), V8, places=12)
        with self.assertRaises(ValidationError):
            guts_volume_bound(1)

    def test_cusp_count_upper_bound(self):
        self.assertEqual(cusp_count_upper_bound(2 * V8), 7)
        self.assertEqual(cusp_count_upper_bound(2 * V3), 2)


class RecordTests(SimpleTestCase):

    def test_records_follow_input_order(self):
        complexes = [fixture('gluing_ii.json'), fixture('gluing_i.json')]
        records = compute_records(complexes)
        self.assertEqual([r.distribution_text for r in records], ['2,2,4,4', '1,1,2,8'])
        for record in records:
            self.assertEqual(record.cusp_count, 4)
            self.assertEqual(str(record.h1), 'Z^4')
            self.assertTrue(record.orientable)
            self.assertGreaterEqual(record.volume, adams_lower_bound(record.cusp_count))
