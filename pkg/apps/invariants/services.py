"""
Invariants of accepted complexes and the closed-form volume bounds.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from django.core.exceptions import ValidationError
from joblib import Parallel, delayed

from apps.census.signature import CanonicalSignature, canonical_signature
from apps.gluing.complex import GluingComplex
from apps.gluing.services import ValidityReport, edge_cycles, validate
from apps.hypervol.services import ConstantName, constant, polyhedron_volume

from .smith import smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        for small, large in zip(self.torsion, self.torsion[1:]):
            if large % small:
                raise ValidationError(f'Torsion {self.torsion} is not a divisibility chain')

    def __str__(self) -> str:
        return format_homology(self)


def format_homology(group: HomologyGroup) -> str:
    """Render as ``Z^4``, ``Z``, ``Z + Z/5`` or ``0``."""
    parts = []
    if group.rank == 1:
        parts.append('Z')
    elif group.rank > 1:
        parts.append(f'Z^{group.rank}')
    parts.extend(f'Z/{d}' for d in group.torsion)
    return ' + '.join(parts) or '0'


@dataclass(frozen=True)
class InvariantRecord:
    signature: CanonicalSignature
    cusp_count: int
    cusp_vertex_distribution: Tuple[int, ...]
    h1: HomologyGroup
    volume: float
    orientable: bool

    @property
    def distribution_text(self) -> str:
        return ','.join(str(n) for n in self.cusp_vertex_distribution)


def _require_accepted(complex_: GluingComplex, report: Optional[ValidityReport] = None) -> ValidityReport:
    report = report or validate(complex_)
    if not report.accepted:
        raise ValidationError(
            f'{complex_.kind.label} complex on {complex_.count} pieces is not a valid cusped manifold'
        )
    return report


def spanning_tree_pairings(complex_: GluingComplex) -> List[int]:
    """Pairings that first reach each polyhedron in a walk from polyhedron 0."""
    reached, tree = {0}, []
    changed = True
    while changed:
        changed = False
        for index, pairing in enumerate(complex_.pairings):
            p, q = pairing.a.polyhedron, pairing.b.polyhedron
            if (p in reached) != (q in reached):
                reached.update((p, q))
                tree.append(index)
                changed = True
    return tree


def presentation_matrix(complex_: GluingComplex) -> List[List[int]]:
    """
    Abelianized relators: one row per edge class (signed pairing counts of
    the loop around it) and one unit row per spanning-tree pairing.
    """
    columns = len(complex_.pairings)
    rows = []
    for cycle in edge_cycles(complex_):
        row = [0] * columns
        for step in cycle.steps:
            row[step.pairing] += step.sign
        rows.append(row)
    for index in spanning_tree_pairings(complex_):
        row = [0] * columns
        row[index] = 1
        rows.append(row)
    return rows


def first_homology(complex_: GluingComplex, report: Optional[ValidityReport] = None) -> HomologyGroup:
    _require_accepted(complex_, report)
    matrix = presentation_matrix(complex_)
    factors = smith_normal_form(matrix, track=False).factors
    return HomologyGroup(
        rank=len(complex_.pairings) - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )


def volume(complex_: GluingComplex, report: Optional[ValidityReport] = None) -> float:
    _require_accepted(complex_, report)
    return complex_.count * polyhedron_volume(complex_.kind)


def adams_lower_bound(n_cusps: int) -> float:
    """An n-cusped hyperbolic 3-manifold has volume at least n * V3."""
    if n_cusps < 1:
        raise ValidationError(f'Cusp count must be positive, got {n_cusps}')
    return n_cusps * constant(ConstantName.V3).value


def guts_volume_bound(chi_boundary: int) -> float:
    """(V8 / 2) |chi| for a guts boundary of Euler characteristic chi <= 0."""
    if chi_boundary > 0:
        raise ValidationError(f'Euler characteristic must be non-positive, got {chi_boundary}')
    return constant(ConstantName.V8).value / 2 * abs(chi_boundary)


def miyamoto_volume_bound(chi_boundary: int) -> float:
    """The same closed form applied to the manifold's own boundary."""
    return guts_volume_bound(chi_boundary)


def cusp_count_upper_bound(volume_: float) -> int:
    """Most cusps a manifold of this volume can have, by the n * V3 bound."""
    ratio = volume_ / constant(ConstantName.V3).value
    return math.floor(ratio + 1e-12)


def _combinatorial_invariants(complex_: GluingComplex):
    report = validate(complex_)
    return canonical_signature(complex_), report, first_homology(complex_, report)


def compute_records(complexes: Iterable[GluingComplex], jobs: int = 1) -> List[InvariantRecord]:
    """Invariant records in input order; homology runs on joblib workers."""
    complexes = list(complexes)
    for complex_ in complexes:
        _require_accepted(complex_)
    results = Parallel(n_jobs=jobs)(delayed(_combinatorial_invariants)(c) for c in complexes)
    records = []
    for complex_, (signature, report, h1) in zip(complexes, results):
        records.append(InvariantRecord(
            signature=signature,
            cusp_count=report.cusp_count,
            cusp_vertex_distribution=report.cusp_vertex_distribution,
            h1=h1,
            volume=volume(complex_, report),
            orientable=report.oriented_ok,
        ))
    logger.info(f'Computed invariants for {len(records)} complexes')
    return records


def records_by_signature(records: Iterable[InvariantRecord]) -> Dict[CanonicalSignature, InvariantRecord]:
    return {record.signature: record for record in records}
