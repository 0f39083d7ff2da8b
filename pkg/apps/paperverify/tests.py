from functools import cache
from unittest import mock

from django.test import SimpleTestCase

from apps.gluing.complex import FacePairing, GluingComplex
from apps.gluing.services import ValidityReport
from apps.registry.base_check import CheckStatus
from apps.registry.check_registry import registry

from .services import (
    PaperReport,
    VerificationContext,
    build_report,
    render_json,
    render_text,
    verify_claim_gluing_patterns,
    verify_claim_no_three_vertex_cusp,
    verify_main_theorem_data,
)


@cache
def context(jobs=1):
    return VerificationContext(jobs=jobs)


def octahedra(count, *pairs):
    return GluingComplex('oct', count, tuple(
        FacePairing.create((p, f), (q, g), r) for p, f, q, g, r in pairs
    ))


class GluingPatternTests(SimpleTestCase):

    def test_census_passes(self):
        result = verify_claim_gluing_patterns(c.complex for c in context().four_cusp_classes)
        self.assertEqual(result.status, CheckStatus.PASS)
        self.assertEqual(result.witness['violations'], [])
        self.assertEqual(result.witness['classes'], 2)

    def test_one_vertex_cusp_witnessed_with_face_pairs(self):
        result = verify_claim_gluing_patterns([context().fixtures['i']])
        self.assertEqual(result.status, CheckStatus.PASS)
        one_vertex = [w for w in result.witness['witnessed'] if len(w['cusp']) == 1]
        self.assertEqual(len(one_vertex), 2)
        for witness in one_vertex:
            self.assertEqual(len(witness['face_pairs']), 4)
            for face, opposite in witness['face_pairs']:
                self.assertNotEqual(face, opposite)

    def test_two_vertex_cusps_of_second_pattern(self):
        result = verify_claim_gluing_patterns([context().fixtures['ii']])
        self.assertEqual(result.status, CheckStatus.PASS)
        two_vertex = [w for w in result.witness['witnessed'] if len(w['cusp']) == 2]
        self.assertEqual(len(two_vertex), 2)
        for witness in two_vertex:
            (p, _), (q, _) = witness['cusp']
            self.assertNotEqual(p, q)

    def test_invalid_complex_not_applicable(self):
        folded = octahedra(1, (0, 0, 0, 1, 0), (0, 2, 0, 3, 0), (0, 4, 0, 5, 0), (0, 6, 0, 7, 0))
        result = verify_claim_gluing_patterns([folded])
        self.assertEqual(result.status, CheckStatus.NOT_APPLICABLE)
        self.assertEqual(result.witness['reason'], 'invalid complex')
        self.assertFalse(result.passed)


class ThreeVertexCuspTests(SimpleTestCase):

    def test_census_passes(self):
        result = verify_claim_no_three_vertex_cusp(c.report for c in context().census)
        self.assertEqual(result.status, CheckStatus.PASS)
        self.assertEqual(result.witness['checked'], 2)

    def test_synthetic_report_fails(self):
        report = ValidityReport(True, True, True, True, True, 4, (3, 3, 3, 3))
        result = verify_claim_no_three_vertex_cusp([report])
        self.assertEqual(result.status, CheckStatus.FAIL)
        self.assertEqual(result.witness['distributions'], [[3, 3, 3, 3]])


class MainDataTests(SimpleTestCase):

    def test_passes(self):
        ctx = context()
        result = verify_main_theorem_data(ctx.four_cusp_classes, ctx.records, ctx.fixtures)
        self.assertEqual(result.status, CheckStatus.PASS, result.witness)
        self.assertEqual(sorted(c['distribution'] for c in result.witness['classes']),
                         ['1,1,2,8', '2,2,4,4'])
        for summary in result.witness['classes']:
            self.assertEqual(summary['h1'], 'Z^4')
            self.assertTrue(f"{summary['volume']:.12f}".startswith('7.32'))

    def test_missing_class_fails(self):
        ctx = context()
        result = verify_main_theorem_data(ctx.four_cusp_classes[:1], ctx.records, ctx.fixtures)
        self.assertEqual(result.status, CheckStatus.FAIL)
        self.assertTrue(result.witness['problems'])


class ReportTests(SimpleTestCase):

    def test_all_checks_registered(self):
        claim_ids = [check.config.claim_id for check in registry.get_enabled_checks()]
        self.assertEqual(claim_ids, [
            'constant-prefixes', 'series-agreement', 'gluing-patterns', 'no-three-vertex-cusp',
            'distribution-survey', 'four-cusp-classes', 'homeomorphic-gluings', 'adams-inequality',
        ])

    def test_overall_pass(self):
        report = build_report(context())
        self.assertTrue(report.overall)
        statuses = {check.claim_id: check.status for check in report.checks}
        self.assertEqual(statuses['homeomorphic-gluings'], CheckStatus.ASSERTED)
        self.assertEqual(statuses['distribution-survey'], CheckStatus.INFO)

    def test_renderings_are_deterministic(self):
        first = build_report(context())
        second = build_report(VerificationContext(jobs=2))
        self.assertEqual(render_json(first), render_json(second))
        self.assertEqual(render_text(first), render_text(second))
        self.assertTrue(render_text(first).endswith('overall: pass\n'))

    def test_failing_check_fails_report(self):
        report = PaperReport((verify_claim_no_three_vertex_cusp([
            ValidityReport(True, True, True, True, True, 4, (3, 3, 3, 3)),
        ]),))
        self.assertFalse(report.overall)
        self.assertIn('"overall": false', render_json(report))


class DistributionSurveyTests(SimpleTestCase):

    def test_survey_reads_shared_census(self):
        ctx = context()
        ctx.census
        check = next(c for c in registry.get_enabled_checks() if c.config.claim_id == 'distribution-survey')
        with mock.patch('apps.census.services.run_census') as search, \
                mock.patch('apps.paperverify.services.enumerate_census') as rerun:
            result = check.run(ctx)
        search.assert_not_called()
        rerun.assert_not_called()
        self.assertEqual(result.status, CheckStatus.INFO)
        self.assertEqual(result.witness['distributions']['4'], [[1, 1, 2, 8], [2, 2, 4, 4]])
        self.assertNotIn('3', result.witness['distributions'])


class AdamsCheckTests(SimpleTestCase):

    def test_cusp_bound_from_volume(self):
        check = next(c for c in registry.get_enabled_checks() if c.config.claim_id == 'adams-inequality')
        result = check.run(context())
        self.assertEqual(result.status, CheckStatus.PASS)
        self.assertEqual(result.witness['violations'], [])
        self.assertEqual(result.witness['cusp_bound'], 7)
        self.assertLessEqual(result.witness['most_cusps'], result.witness['cusp_bound'])
        self.assertEqual(result.witness['checked'], len(context().census))
