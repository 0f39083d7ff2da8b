import random
from functools import cache
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, TestCase, override_settings

from apps.gluing.complex import relabel
from apps.gluing.fileformat import read_gluings
from apps.gluing.services import validate
from apps.invariants.services import adams_lower_bound, compute_records, records_by_signature, volume
from apps.polyhedra.services import template

from .models import CensusEntry
from .search import SearchState, root_pairings
from .services import (
    CensusQuery,
    ResourceLimitError,
    enumerate_census,
    enumerate_naive,
    run_census,
    store_entries,
    summarize_distributions,
)
from .signature import canonical_form, canonical_signature


@cache
def census(kind, count, cusps=None, jobs=1):
    return tuple(enumerate_census(CensusQuery(kind, count, cusps), jobs))


def fixture(name):
    return read_gluings(Path(settings.PAPER_FIXTURE_DIR) / name)[0]


class QueryTests(SimpleTestCase):

    def test_bad_values(self):
        for kwargs in ({'kind': 'oct', 'count': 0}, {'kind': 'oct', 'count': 1, 'cusp_filter': 0},
                       {'kind': 'oct', 'count': 1, 'orientable_only': False}):
            with self.assertRaises(ValidationError):
                CensusQuery(**kwargs)

    def test_resource_limit(self):
        with self.assertRaises(ResourceLimitError) as caught:
            enumerate_census(CensusQuery('oct', 4))
        self.assertEqual(caught.exception.limit, 3)
        self.assertEqual(caught.exception.count, 4)

    @override_settings(CENSUS_MAX_COUNT={'oct': 1, 'tet': 8})
    def test_limit_read_from_settings(self):
        with self.assertRaises(ResourceLimitError):
            enumerate_census(CensusQuery('oct', 2))

    def test_naive_refuses_large_instances(self):
        with self.assertRaises(ResourceLimitError):
            enumerate_naive(CensusQuery('oct', 2))


class OracleTests(SimpleTestCase):

    def assertMatchesNaive(self, kind, count):
        pruned = [c.signature for c in census(kind, count)]
        self.assertEqual(pruned, enumerate_naive(CensusQuery(kind, count)))

    def test_one_tetrahedron(self):
        self.assertMatchesNaive('tet', 1)
        self.assertEqual(census('tet', 1), ())

    def test_two_tetrahedra(self):
        self.assertMatchesNaive('tet', 2)

    def test_one_octahedron(self):
        self.assertMatchesNaive('oct', 1)

    def test_filtered_matches_naive(self):
        self.assertEqual(
            [c.signature for c in census('tet', 2, 1)],
            enumerate_naive(CensusQuery('tet', 2, 1)),
        )


class TwoOctahedraTests(SimpleTestCase):

    def test_four_cusps(self):
        classes = census('oct', 2, 4)
        self.assertEqual(len(classes), 2)
        self.assertEqual(
            sorted(c.report.cusp_vertex_distribution for c in classes),
            [(1, 1, 2, 8), (2, 2, 4, 4)],
        )

    def test_fixtures_in_census(self):
        signatures = {c.signature for c in census('oct', 2, 4)}
        self.assertIn(canonical_signature(fixture('gluing_i.json')), signatures)
        self.assertIn(canonical_signature(fixture('gluing_ii.json')), signatures)

    def test_no_three_cusp_classes(self):
        self.assertEqual(census('oct', 2, 3), ())

    def test_no_three_vertex_cusp_with_four_cusps(self):
        for census_class in census('oct', 2, 4):
            self.assertNotIn(3, census_class.report.cusp_vertex_distribution)

    def test_filter_is_a_subset(self):
        everything = census('oct', 2)
        self.assertEqual(
            [c for c in everything if c.report.cusp_count == 4],
            list(census('oct', 2, 4)),
        )

    def test_summarize_distributions(self):
        summary = summarize_distributions(census('oct', 2))
        self.assertEqual(summary[4], [(1, 1, 2, 8), (2, 2, 4, 4)])
        self.assertNotIn(3, summary)


class SignatureTests(SimpleTestCase):

    def test_identity(self):
        complex_ = fixture('gluing_i.json')
        self.assertEqual(
            canonical_signature(complex_),
            canonical_signature(relabel(complex_, [0, 1], [template('oct').rotations[0]] * 2)),
        )

    def test_fixtures_differ(self):
        self.assertNotEqual(
            canonical_signature(fixture('gluing_i.json')),
            canonical_signature(fixture('gluing_ii.json')),
        )

    def test_random_relabelings(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED)
        for name in ('gluing_i.json', 'gluing_ii.json'):
            complex_ = fixture(name)
            expected = canonical_signature(complex_)
            rotations = complex_.template.rotations
            for _ in range(1000):
                permutation = [0, 1]
                rng.shuffle(permutation)
                moved = relabel(complex_, permutation, [rng.choice(rotations), rng.choice(rotations)])
                self.assertEqual(canonical_signature(moved), expected)

    def test_canonical_complex_has_same_signature(self):
        signature, canonical = canonical_form(fixture('gluing_ii.json'))
        self.assertEqual(canonical_signature(canonical), signature)
        self.assertTrue(signature.text.startswith('oct2:'))


class SearchTests(SimpleTestCase):

    def test_census_is_sound(self):
        for kind, count in (('tet', 2), ('tet', 3), ('oct', 1), ('oct', 2)):
            for census_class in census(kind, count):
                report = validate(census_class.complex)
                self.assertTrue(report.accepted, census_class.signature.text)
                self.assertEqual(report, census_class.report)

    def test_root_pairings_start_at_first_face(self):
        for pairing in root_pairings('oct', 2):
            self.assertEqual(tuple(pairing.a), (0, 0))

    def test_worker_count_does_not_change_output(self):
        serial = census('oct', 2, 4, 1)
        for jobs in (2, 8):
            self.assertEqual(census('oct', 2, 4, jobs), serial)
        tet_serial = census('tet', 2, None, 1)
        self.assertTrue(tet_serial)
        self.assertEqual(census('tet', 2, None, 2), tet_serial)

    def test_stats(self):
        classes, stats = run_census(CensusQuery('oct', 2, 4))
        self.assertEqual(stats.accepted, len(classes))
        self.assertGreaterEqual(stats.leaves, stats.accepted)
        self.assertGreater(stats.nodes, 0)
        self.assertEqual(stats.roots, len(root_pairings('oct', 2)))

    def test_adams_inequality(self):
        for kind, count in (('tet', 1), ('tet', 2), ('tet', 3), ('tet', 4), ('oct', 1), ('oct', 2)):
            for census_class in census(kind, count):
                cusps = census_class.report.cusp_count
                self.assertGreaterEqual(volume(census_class.complex), adams_lower_bound(cusps))

    def test_figure_eight_class(self):
        classes = census('tet', 2, 1)
        self.assertTrue(classes)
        ranks = {r.h1.rank for r in compute_records([c.complex for c in classes])}
        self.assertIn(1, ranks)

    def test_lower_bound_cuts_two_octahedra_search(self):
        _, stats = run_census(CensusQuery('oct', 2))
        self.assertEqual(stats.accepted, 34)
        self.assertLess(stats.nodes, 218400)


class SearchStateTests(SimpleTestCase):

    def snapshot(self, state):
        return (list(state.partner), list(state.twin), list(state.length),
                list(state.flip), list(state.open_chains))

    def test_unglue_restores_chains(self):
        state = SearchState(template('oct'), 2)
        fresh = self.snapshot(state)
        state.glue(0, 8, 0)
        state.glue(1, 9, 2)
        self.assertNotEqual(self.snapshot(state), fresh)
        state.unglue()
        state.unglue()
        self.assertEqual(self.snapshot(state), fresh)

    def test_gluing_merges_three_chains(self):
        state = SearchState(template('oct'), 2)
        self.assertTrue(state.glue(0, 8, 0))
        self.assertEqual(state.open_chains, [0, 18, 3, 0, 0])
        self.assertEqual(state.partner[0], 8)
        self.assertEqual(state.partner[8], 0)

    def test_short_chain_needs_other_chains_summing_to_the_gap(self):
        state = SearchState(template('oct'), 1)
        state.length[0] = state.length[1] = 3
        state.open_chains = [0, 0, 0, 1, 0]
        self.assertFalse(state._completable(0))
        state.open_chains = [0, 1, 0, 1, 0]
        self.assertTrue(state._completable(0))

        state.length[0] = state.length[1] = 2
        for counts, expected in (([0, 0, 1, 0, 0], False), ([0, 1, 1, 0, 0], False),
                                 ([0, 2, 1, 0, 0], True), ([0, 0, 2, 0, 0], True)):
            state.open_chains = counts
            self.assertEqual(state._completable(0), expected, counts)

    def test_full_chain_must_end_on_two_faces(self):
        state = SearchState(template('oct'), 1)
        state.length[0] = state.length[1] = 4
        self.assertTrue(state._completable(0))
        same_face = next(
            end for end in range(2, len(state.twin)) if state.end_slot[end] == state.end_slot[0]
        )
        state.twin[0], state.twin[same_face] = same_face, 0
        state.length[same_face] = 4
        self.assertFalse(state._completable(0))


class StoreEntriesTests(TestCase):

    def test_store_is_idempotent(self):
        classes = census('oct', 2, 4)
        records = records_by_signature(compute_records([c.complex for c in classes]))
        self.assertEqual(store_entries(classes, records), 2)
        self.assertEqual(store_entries(classes, records), 0)
        self.assertEqual(CensusEntry.objects.count(), 2)
        entry = CensusEntry.objects.get(distribution='1,1,2,8')
        self.assertEqual(entry.homology, 'Z^4')
        self.assertEqual(entry.cusp_count, 4)
        self.assertTrue(f'{entry.volume:.12f}'.startswith('7.32'))
        self.assertEqual(entry.gluing['kind'], 'oct')

    def test_store_without_records(self):
        store_entries(census('tet', 2, 1))
        self.assertFalse(CensusEntry.objects.exclude(homology='').exists())
