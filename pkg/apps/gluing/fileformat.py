"""
JSON interchange for gluings.

A gluing document is ``{"kind": "oct", "count": 2, "pairings": [{"a": [p, f],
"b": [p, f], "rot": r}, ...]}`` with pairings order-normalized and sorted.
Census exports wrap several gluing documents under ``"classes"``.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from django.core.exceptions import ValidationError

from apps.polyhedra.models import PolyhedronKind

from .complex import FacePairing, GluingComplex

logger = logging.getLogger(__name__)


def to_document(complex_: GluingComplex) -> Dict[str, Any]:
    return {
        'kind': complex_.kind.value,
        'count': complex_.count,
        'pairings': [
            {'a': list(p.a), 'b': list(p.b), 'rot': p.rotation}
            for p in complex_.pairings
        ],
    }


def dumps(document: Any) -> str:
    """Serialize with sorted keys so equal values give identical bytes."""
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def dump_gluing(complex_: GluingComplex) -> str:
    return dumps(to_document(complex_))


def from_document(document: Dict[str, Any]) -> GluingComplex:
    try:
        kind = PolyhedronKind(document['kind'])
        count = int(document['count'])
        pairings = tuple(
            FacePairing.create(tuple(item['a']), tuple(item['b']), int(item['rot']))
            for item in document['pairings']
        )
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f'Malformed gluing document: {exc!r}')
    complex_ = GluingComplex(kind, count, pairings)
    if not complex_.is_complete:
        raise ValidationError(
            f'Gluing pairs {2 * len(pairings)} of {count * complex_.template.face_count} faces'
        )
    return complex_


def loads(text: str) -> List[GluingComplex]:
    """Parse a single gluing document or a census export into complexes."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f'Invalid JSON at line {exc.lineno}: {exc.msg}')
    if not isinstance(document, dict):
        raise ValidationError('A gluing document must be a JSON object')
    if 'classes' in document:
        return [from_document(item['gluing']) for item in document['classes']]
    return [from_document(document)]


def read_gluings(path) -> List[GluingComplex]:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ValidationError(f'Cannot read {path}: {exc.strerror}')
    try:
        return loads(text)
    except ValidationError as exc:
        logger.warning(f'Rejected gluing file {path}: {exc.messages[0]}')
        raise ValidationError(f'{path}: {exc.messages[0]}')
