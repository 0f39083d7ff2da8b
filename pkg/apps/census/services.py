"""
Census of accepted gluings.
Enumeration fans independent search roots out to joblib workers and merges
their leaves in the parent, so the result never depends on scheduling.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import transaction
from joblib import Parallel, delayed

from apps.gluing.complex import GluingComplex
from apps.gluing.fileformat import to_document
from apps.gluing.services import ValidityReport, validate
from apps.polyhedra.models import PolyhedronKind
from apps.polyhedra.services import template

from .models import CensusEntry
from .search import all_gluings, leaf_complex, root_pairings, root_slots, search_root
from .signature import CanonicalSignature, canonical_form

logger = logging.getLogger(__name__)


class ResourceLimitError(ValidationError):
    """A census request beyond the configured size bounds."""

    def __init__(self, kind, count: int, limit: int, what: str = 'Census'):
        self.kind = PolyhedronKind(kind)
        self.count = count
        self.limit = limit
        super().__init__(
            f'{what} of {count} {self.kind.label.lower()}s exceeds the limit of {limit}'
        )


@dataclass(frozen=True)
class CensusQuery:
    kind: PolyhedronKind
    count: int
    cusp_filter: Optional[int] = None
    orientable_only: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'kind', PolyhedronKind(self.kind))
        if self.count < 1:
            raise ValidationError(f'count must be at least 1, got {self.count}')
        if (self.count * template(self.kind).face_count) % 2:
            raise ValidationError(
                f'{self.count} {self.kind.label.lower()}s have an odd number of faces'
            )
        if self.cusp_filter is not None and self.cusp_filter < 1:
            raise ValidationError(f'cusps must be at least 1, got {self.cusp_filter}')
        if not self.orientable_only:
            raise ValidationError('Only orientable gluings are enumerated')


@dataclass(frozen=True)
class CensusClass:
    signature: CanonicalSignature
    complex: GluingComplex
    report: ValidityReport


@dataclass(frozen=True)
class CensusStats:
    roots: int
    nodes: int
    leaves: int
    accepted: int


def _check_limit(query: CensusQuery) -> None:
    limit = settings.CENSUS_MAX_COUNT[query.kind.value]
    if query.count > limit:
        raise ResourceLimitError(query.kind, query.count, limit)


def _classify(complexes: Iterable[GluingComplex], cusp_filter: Optional[int]) -> List[CensusClass]:
    """Validate, filter by cusp count and keep one complex per signature."""
    classes: Dict[CanonicalSignature, CensusClass] = {}
    for complex_ in complexes:
        report = validate(complex_)
        if not report.accepted:
            continue
        if cusp_filter is not None and report.cusp_count != cusp_filter:
            continue
        signature, canonical = canonical_form(complex_)
        if signature not in classes:
            classes[signature] = CensusClass(signature, canonical, report)
    return [classes[s] for s in sorted(classes)]


def run_census(query: CensusQuery, jobs: Optional[int] = None) -> Tuple[List[CensusClass], CensusStats]:
    _check_limit(query)
    jobs = jobs or settings.CENSUS_DEFAULT_JOBS
    t = template(query.kind)
    roots = [root_slots(t, pairing) for pairing in root_pairings(query.kind, query.count)]
    logger.info(f'Census {query.kind.value}{query.count}: {len(roots)} roots on {jobs} worker(s)')

    results = Parallel(n_jobs=jobs)(
        delayed(search_root)(query.kind.value, query.count, root) for root in roots
    )
    leaves = [leaf for root_leaves, _ in results for leaf in root_leaves]
    classes = _classify(
        (leaf_complex(query.kind, query.count, leaf) for leaf in leaves), query.cusp_filter
    )
    stats = CensusStats(
        roots=len(roots),
        nodes=sum(nodes for _, nodes in results),
        leaves=len(leaves),
        accepted=len(classes),
    )
    logger.info(
        f'Census {query.kind.value}{query.count} done: {stats.nodes} nodes, '
        f'{stats.leaves} leaves, {stats.accepted} classes'
    )
    return classes, stats


def enumerate_census(query: CensusQuery, jobs: Optional[int] = None) -> List[CensusClass]:
    """Accepted isomorphism classes meeting the query, sorted by signature."""
    return run_census(query, jobs)[0]


def enumerate_naive(query: CensusQuery) -> List[CanonicalSignature]:
    """Exhaustive oracle: every matching and rotation, canonicalized afterwards."""
    faces = query.count * template(query.kind).face_count
    bound = settings.CENSUS_NAIVE_MAX_FACES
    if faces > bound:
        raise ResourceLimitError(query.kind, query.count, bound // template(query.kind).face_count,
                                 what='Naive enumeration')
    classes = _classify(all_gluings(query.kind, query.count), query.cusp_filter)
    return [c.signature for c in classes]


def summarize_distributions(classes: Iterable[CensusClass]) -> Dict[int, List[Tuple[int, ...]]]:
    """Cusp vertex distributions occurring among ``classes``, by cusp count."""
    summary = defaultdict(set)
    for census_class in classes:
        report = census_class.report
        summary[report.cusp_count].add(report.cusp_vertex_distribution)
    return {cusps: sorted(found) for cusps, found in sorted(summary.items())}


@transaction.atomic
def store_entries(classes: Iterable[CensusClass], records: Optional[Dict] = None) -> int:
    """
    Upsert census classes; ``records`` optionally maps signatures to
    invariant records whose homology and volume are stored alongside.
    Returns the number of newly created entries.
    """
    created = 0
    records = records or {}
    for census_class in classes:
        complex_ = census_class.complex
        record = records.get(census_class.signature)
        _, was_created = CensusEntry.objects.update_or_create(
            kind=complex_.kind.value,
            count=complex_.count,
            signature=census_class.signature.text,
            defaults={
                'cusp_count': census_class.report.cusp_count,
                'distribution': census_class.report.distribution_text,
                'homology': str(record.h1) if record else '',
                'volume': record.volume if record else None,
                'gluing': to_document(complex_),
            },
        )
        created += was_created
    return created
