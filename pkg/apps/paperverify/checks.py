"""
Checks of the two-octahedron classification, run by ``verify_paper``.
"""
from apps.census.services import summarize_distributions
from apps.invariants.services import compute_records
from apps.registry.base_check import BaseCheck, CheckConfig, CheckStatus

from .services import (
    GLUING_PATTERNS,
    MAIN_DATA,
    NO_THREE_VERTEX_CUSP,
    verify_claim_gluing_patterns,
    verify_claim_no_three_vertex_cusp,
    verify_main_theorem_data,
)


class GluingPatternCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig(*GLUING_PATTERNS, order=10)

    def run(self, context):
        return verify_claim_gluing_patterns(c.complex for c in context.four_cusp_classes)


class NoThreeVertexCuspCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig(*NO_THREE_VERTEX_CUSP, order=20)

    def run(self, context):
        return verify_claim_no_three_vertex_cusp(c.report for c in context.census)


class DistributionSurveyCheck(BaseCheck):
    """Which cusp distributions occur at all, for every cusp count."""

    @property
    def config(self):
        return CheckConfig(
            'distribution-survey',
            'Cusp vertex distributions over all cusp counts of two octahedra',
            order=25,
        )

    def run(self, context):
        summary = summarize_distributions(context.census)
        return self.result(
            CheckStatus.INFO,
            distributions={
                str(cusps): [list(d) for d in found] for cusps, found in summary.items()
            },
        )


class MainDataCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig(*MAIN_DATA, order=30)

    def run(self, context):
        return verify_main_theorem_data(context.four_cusp_classes, context.records, context.fixtures)


class HomeomorphismCheck(BaseCheck):
    """
    The two gluings are stated to give the same manifold. Only the invariants
    are compared here; agreement is reported as asserted, disagreement fails.
    """

    @property
    def config(self):
        return CheckConfig(
            'homeomorphic-gluings',
            'Gluings (i) and (ii) give homeomorphic manifolds',
            order=40,
        )

    def run(self, context):
        names = sorted(context.fixtures)
        records = compute_records([context.fixtures[name] for name in names], context.jobs)
        invariants = {
            name: {
                'cusps': record.cusp_count,
                'h1': str(record.h1),
                'volume': round(record.volume, 9),
            }
            for name, record in zip(names, records)
        }
        consistent = len({tuple(sorted(v.items())) for v in invariants.values()}) == 1
        status = CheckStatus.ASSERTED if consistent else CheckStatus.FAIL
        return self.result(status, invariants=invariants)
