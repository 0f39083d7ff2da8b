"""
Text, CSV and structured renderings of census classes, invariant records and
volume tables. Every rendering is a pure function of its sorted input.
"""
import csv
import io
import json
from typing import Iterable, List, Sequence, Tuple

from django.conf import settings

from apps.census.services import CensusClass
from apps.gluing.fileformat import to_document
from apps.invariants.services import InvariantRecord

from .forms import OutputFormat


def format_volume(value: float) -> str:
    return f'{value:.{settings.VOLUME_DECIMALS}f}'


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _tsv(rows: Iterable[Sequence]) -> str:
    return ''.join('\t'.join(str(cell) for cell in row) + '\n' for row in rows)


def _structured(document) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def render_census(classes: List[CensusClass], fmt=OutputFormat.TEXT) -> str:
    rows = [
        (c.signature.text, c.report.cusp_count, c.report.distribution_text)
        for c in classes
    ]
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.CSV:
        return _csv(('signature', 'cusps', 'distribution'), rows)
    if fmt == OutputFormat.STRUCTURED:
        return _structured({'classes': [
            {
                'signature': c.signature.text,
                'cusps': c.report.cusp_count,
                'distribution': list(c.report.cusp_vertex_distribution),
                'gluing': to_document(c.complex),
            }
            for c in classes
        ]})
    return _tsv(rows)


def render_records(records: List[InvariantRecord], fmt=OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.STRUCTURED:
        return _structured({'records': [
            {
                'signature': r.signature.text,
                'cusps': r.cusp_count,
                'distribution': list(r.cusp_vertex_distribution),
                'h1': str(r.h1),
                'volume': format_volume(r.volume),
                'orientable': r.orientable,
            }
            for r in records
        ]})
    rows = [
        (r.signature.text, r.cusp_count, r.distribution_text, str(r.h1), format_volume(r.volume))
        for r in records
    ]
    if fmt == OutputFormat.CSV:
        return _csv(('signature', 'cusps', 'distribution', 'h1', 'volume'), rows)
    return _tsv(rows)


def render_bounds(rows: List[Tuple[str, float]], fmt=OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.STRUCTURED:
        return _structured({label: format_volume(value) for label, value in rows})
    if fmt == OutputFormat.CSV:
        return _csv(('quantity', 'value'), ((label, format_volume(value)) for label, value in rows))
    width = max(len(label) for label, _ in rows)
    return ''.join(f'{label:<{width}}  {format_volume(value)}\n' for label, value in rows)
