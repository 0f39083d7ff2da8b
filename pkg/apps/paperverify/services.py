"""
Classification of two-octahedron, four-cusp gluings checked against census
data: the local gluing patterns at one- and two-vertex cusps, the absence
of three-vertex cusps, and the invariants of the two surviving classes.
"""
import json
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from django.conf import settings

from apps.census.services import CensusClass, CensusQuery, enumerate_census
from apps.census.signature import CanonicalSignature, canonical_signature
from apps.gluing.complex import FaceRef, GluingComplex
from apps.gluing.fileformat import read_gluings
from apps.gluing.services import ValidityReport, edge_classes, validate, vertex_links
from apps.hypervol.services import ConstantName, constant
from apps.invariants.services import HomologyGroup, InvariantRecord, compute_records
from apps.polyhedra.models import PolyhedronKind
from apps.polyhedra.services import opposite_around
from apps.registry.base_check import CheckResult, CheckStatus
from apps.registry.check_registry import registry

logger = logging.getLogger(__name__)

FOUR_CUSPS = 4
EXPECTED_DISTRIBUTIONS = ((1, 1, 2, 8), (2, 2, 4, 4))
FIXTURE_FILES = {'i': 'gluing_i.json', 'ii': 'gluing_ii.json'}
VOLUME_TOLERANCE = 1e-9

GLUING_PATTERNS = ('gluing-patterns', 'Faces around one- and two-vertex cusps are glued in the forced patterns')
NO_THREE_VERTEX_CUSP = ('no-three-vertex-cusp', 'No cusp consists of exactly 3 vertices')
MAIN_DATA = ('four-cusp-classes', 'Exactly two 4-cusp classes, distributions 1,1,2,8 and 2,2,4,4, H1 = Z^4, volume 2V8')


def _one_vertex_violations(complex_: GluingComplex, p: int, x: int) -> List[Dict[str, Any]]:
    """Each face around x must be glued to the opposite face around x."""
    t = complex_.template
    found = []
    for f in t.faces_at(x):
        partner = complex_.partner((p, f))[0]
        expected = FaceRef(p, opposite_around(complex_.kind, x, f))
        if partner != expected:
            found.append({'vertex': [p, x], 'face': f, 'glued_to': list(partner), 'expected': list(expected)})
    return found


def _two_vertex_violations(
    complex_: GluingComplex, first, second, class_of: Dict[tuple, int]
) -> List[Dict[str, Any]]:
    """
    The two vertices lie in different octahedra and every edge class through
    them holds one opposite pair of edges around each vertex.
    """
    t = complex_.template
    if first[0] == second[0]:
        return [{'cusp': [list(first), list(second)], 'problem': 'both vertices in one octahedron'}]
    found = []
    edges_by_class: Dict[int, Dict[tuple, List[int]]] = {}
    for p, v in (first, second):
        ring = t.neighbors_around(v)
        for position, n in enumerate(ring):
            k = class_of[(p, t.edge_index(v, n))]
            edges_by_class.setdefault(k, {}).setdefault((p, v), []).append(position)
    for k, at_vertex in sorted(edges_by_class.items()):
        positions = [at_vertex.get(first, []), at_vertex.get(second, [])]
        opposite = all(len(pos) == 2 and (pos[1] - pos[0]) == 2 for pos in positions)
        if not opposite:
            found.append({
                'cusp': [list(first), list(second)],
                'edge_class': k,
                'positions': positions,
            })
    return found


def verify_claim_gluing_patterns(complexes: Iterable[GluingComplex]) -> CheckResult:
    claim_id, description = GLUING_PATTERNS
    complexes = list(complexes)
    witnessed, violations = [], []
    for complex_ in complexes:
        report = validate(complex_)
        if not report.accepted:
            return CheckResult(claim_id, description, CheckStatus.NOT_APPLICABLE, {
                'reason': 'invalid complex',
                'signature': _safe_signature(complex_),
            })
        if complex_.kind != PolyhedronKind.OCTAHEDRON:
            return CheckResult(claim_id, description, CheckStatus.NOT_APPLICABLE, {
                'reason': f'{complex_.kind.label.lower()} complex',
            })
        class_of = {
            (m.polyhedron, m.edge): k
            for k, edge_class in enumerate(edge_classes(complex_))
            for m in edge_class.members
        }
        signature = canonical_signature(complex_).text
        for link in vertex_links(complex_):
            if link.corner_count == 1:
                (p, x), = link.vertices
                found = _one_vertex_violations(complex_, p, x)
                if not found:
                    witnessed.append({
                        'signature': signature,
                        'cusp': [[p, x]],
                        'face_pairs': [[f, opposite_around(complex_.kind, x, f)] for f in complex_.template.faces_at(x)],
                    })
            elif link.corner_count == 2:
                found = _two_vertex_violations(complex_, *link.vertices, class_of)
                if not found:
                    witnessed.append({'signature': signature, 'cusp': [list(v) for v in link.vertices]})
            else:
                continue
            violations.extend(dict(item, signature=signature) for item in found)
    status = CheckStatus.FAIL if violations else CheckStatus.PASS
    return CheckResult(claim_id, description, status, {
        'classes': len(complexes),
        'violations': violations,
        'witnessed': witnessed,
    })


def _safe_signature(complex_: GluingComplex) -> Optional[str]:
    if not complex_.is_complete:
        return None
    return canonical_signature(complex_).text


def verify_claim_no_three_vertex_cusp(reports: Iterable[ValidityReport]) -> CheckResult:
    claim_id, description = NO_THREE_VERTEX_CUSP
    checked, witnesses = 0, []
    for report in reports:
        if not report.accepted or report.cusp_count != FOUR_CUSPS:
            continue
        checked += 1
        if 3 in report.cusp_vertex_distribution:
            witnesses.append(list(report.cusp_vertex_distribution))
    status = CheckStatus.FAIL if witnesses else CheckStatus.PASS
    return CheckResult(claim_id, description, status, {'checked': checked, 'distributions': witnesses})


def verify_main_theorem_data(
    classes: Sequence[CensusClass],
    records: Dict[CanonicalSignature, InvariantRecord],
    fixtures: Dict[str, GluingComplex],
) -> CheckResult:
    claim_id, description = MAIN_DATA
    four_cusp = [c for c in classes if c.report.cusp_count == FOUR_CUSPS]
    target_volume = 2 * constant(ConstantName.V8).value
    problems = []

    distributions = sorted(c.report.cusp_vertex_distribution for c in four_cusp)
    if tuple(distributions) != EXPECTED_DISTRIBUTIONS:
        problems.append({'distributions': [list(d) for d in distributions]})

    summary = []
    for census_class in four_cusp:
        record = records.get(census_class.signature)
        if record is None:
            problems.append({'signature': census_class.signature.text, 'problem': 'no invariants'})
            continue
        summary.append({
            'signature': record.signature.text,
            'distribution': record.distribution_text,
            'h1': str(record.h1),
            'volume': round(record.volume, settings.VOLUME_DECIMALS),
        })
        if record.h1 != HomologyGroup(4):
            problems.append({'signature': record.signature.text, 'h1': str(record.h1)})
        if abs(record.volume - target_volume) > VOLUME_TOLERANCE:
            problems.append({'signature': record.signature.text, 'volume': record.volume})

    known = {c.signature for c in four_cusp}
    fixture_signatures = {}
    for name, complex_ in sorted(fixtures.items()):
        signature = canonical_signature(complex_)
        fixture_signatures[name] = signature.text
        if signature not in known:
            problems.append({'fixture': name, 'signature': signature.text, 'problem': 'not in census'})

    status = CheckStatus.FAIL if problems else CheckStatus.PASS
    return CheckResult(claim_id, description, status, {
        'classes': summary,
        'fixtures': fixture_signatures,
        'problems': problems,
    })


class VerificationContext:
    """Census data shared by all checks of one run, computed on first use."""

    def __init__(self, jobs: Optional[int] = None, fixture_dir=None):
        self.jobs = jobs or settings.CENSUS_DEFAULT_JOBS
        self.fixture_dir = Path(fixture_dir or settings.PAPER_FIXTURE_DIR)

    @cached_property
    def census(self) -> List[CensusClass]:
        """All accepted classes of two octahedra, every cusp count."""
        return enumerate_census(CensusQuery(PolyhedronKind.OCTAHEDRON, 2), self.jobs)

    @cached_property
    def four_cusp_classes(self) -> List[CensusClass]:
        return [c for c in self.census if c.report.cusp_count == FOUR_CUSPS]

    @cached_property
    def records(self) -> Dict[CanonicalSignature, InvariantRecord]:
        complexes = [c.complex for c in self.census]
        return {r.signature: r for r in compute_records(complexes, self.jobs)}

    @cached_property
    def fixtures(self) -> Dict[str, GluingComplex]:
        return {
            name: read_gluings(self.fixture_dir / filename)[0]
            for name, filename in FIXTURE_FILES.items()
        }


@dataclass(frozen=True)
class PaperReport:
    checks: tuple

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_dict(self) -> Dict[str, Any]:
        return {
            'checks': [check.as_dict() for check in self.checks],
            'overall': self.overall,
        }


def build_report(context: Optional[VerificationContext] = None) -> PaperReport:
    context = context or VerificationContext()
    results = []
    for check in registry.get_enabled_checks():
        result = check.run(context)
        if result.passed:
            logger.info(f'Check {result.claim_id}: {result.status.value}')
        else:
            logger.warning(f'Check {result.claim_id}: {result.status.value} {result.witness}')
        results.append(result)
    return PaperReport(tuple(results))


def render_text(report: PaperReport) -> str:
    lines = []
    for check in report.checks:
        lines.append(f'[{check.status.value}] {check.claim_id}: {check.description}')
        for key, value in sorted(check.witness.items()):
            lines.append(f'    {key}: {json.dumps(value, sort_keys=True)}')
    lines.append(f'overall: {"pass" if report.overall else "fail"}')
    return '\n'.join(lines) + '\n'


def render_json(report: PaperReport) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2) + '\n'
