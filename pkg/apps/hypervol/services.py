"""
Lobachevsky function and the volumes of the ideal regular tetrahedron and
octahedron.

The Lobachevsky function is evaluated as half the Clausen function at twice
the angle, using the Bernoulli power series of the Clausen function on the
reduced range [-pi, pi]. There the terms shrink at least fourfold each step,
so the truncation is controlled by the first omitted term.
"""
import logging
import math
from dataclasses import dataclass
from functools import cache
from typing import List, Tuple

import mpmath
from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import models

from apps.polyhedra.models import PolyhedronKind

logger = logging.getLogger(__name__)


class ConstantName(models.TextChoices):
    V3 = 'V3', 'Regular ideal tetrahedron'
    V8 = 'V8', 'Regular ideal octahedron'


class EvaluationMethod(models.TextChoices):
    LOBACHEVSKY_SERIES = 'lobachevsky', 'Lobachevsky function'
    ALTERNATING_SERIES = 'alternating', 'Alternating series'


@dataclass(frozen=True)
class VolumeConstant:
    name: ConstantName
    value: float
    method: EvaluationMethod


@cache
def _clausen_coefficient(k: int) -> float:
    """|B_2k| / (2k (2k+1)!)"""
    bernoulli = abs(mpmath.bernoulli(2 * k))
    return float(bernoulli / (2 * k * mpmath.factorial(2 * k + 1)))


def _clausen(x: float, tol: float) -> float:
    """Cl2(x) for 0 < x <= pi."""
    terms = [x, -x * math.log(x)]
    k, power, x_squared = 1, x, x * x
    while True:
        power *= x_squared
        term = _clausen_coefficient(k) * power
        terms.append(term)
        # the tail after this term is below a third of it
        if term < tol:
            break
        k += 1
    return math.fsum(terms)


def lobachevsky(theta: float, tol: float = None) -> float:
    """Л(θ) to within ``tol``, for any real θ."""
    if tol is None:
        tol = settings.HYPERVOL_TOLERANCE
    if tol <= 0:
        raise ValidationError(f'Tolerance must be positive, got {tol}')
    if not math.isfinite(theta):
        raise ValidationError(f'Angle must be finite, got {theta}')
    # period pi: reduce to [-pi/2, pi/2)
    reduced = math.remainder(theta, math.pi)
    if reduced == 0:
        return 0.0
    sign = 1.0 if reduced > 0 else -1.0
    return sign * 0.5 * _clausen(2 * abs(reduced), tol)


def v8_alternating_series(terms: int) -> float:
    """Partial sum 4 * sum_{k < terms} (-1)^k / (2k+1)^2."""
    if terms < 1:
        raise ValidationError(f'terms must be at least 1, got {terms}')
    return 4 * math.fsum((-1) ** (k % 2) / (2 * k + 1) ** 2 for k in range(terms))


def v8_series_error_bound(terms: int) -> float:
    return 4 / (2 * terms + 1) ** 2


def terms_for_tolerance(tol: float) -> int:
    """Fewest terms whose alternating-series error bound is within ``tol``."""
    return max(1, math.ceil((math.sqrt(4 / tol) - 1) / 2))


@cache
def _constant(name: str, method: str, tol: float) -> float:
    if name == ConstantName.V3:
        if method != EvaluationMethod.LOBACHEVSKY_SERIES:
            raise ValidationError(f'{name} has no {method} evaluation')
        value = 3 * lobachevsky(math.pi / 3, tol)
    elif method == EvaluationMethod.LOBACHEVSKY_SERIES:
        value = 8 * lobachevsky(math.pi / 4, tol)
    else:
        value = v8_alternating_series(terms_for_tolerance(tol))
    logger.debug(f'{name} by {method}: {value!r}')
    return value


def constant(name, method=EvaluationMethod.LOBACHEVSKY_SERIES) -> VolumeConstant:
    name, method = ConstantName(name), EvaluationMethod(method)
    if method == EvaluationMethod.ALTERNATING_SERIES:
        tol = settings.HYPERVOL_SERIES_TOLERANCE
    else:
        tol = settings.HYPERVOL_TOLERANCE
    return VolumeConstant(name, _constant(name.value, method.value, tol), method)


def polyhedron_volume(kind) -> float:
    if PolyhedronKind(kind) == PolyhedronKind.OCTAHEDRON:
        return constant(ConstantName.V8).value
    return constant(ConstantName.V3).value


def volume_table(cusps=None, chi_values=()) -> List[Tuple[str, float]]:
    """Rows for the bounds report: the constants, n * V3 and (V8/2) * |chi|."""
    v3 = constant(ConstantName.V3).value
    v8 = constant(ConstantName.V8).value
    rows = [
        ('V3', v3),
        ('2V3', 2 * v3),
        ('V8', v8),
        ('2V8', 2 * v8),
    ]
    if cusps is not None:
        if cusps < 1:
            raise ValidationError(f'cusps must be at least 1, got {cusps}')
        rows.append((f'{cusps}V3', cusps * v3))
    for chi in chi_values:
        if chi > 0:
            raise ValidationError(f'Euler characteristic must be non-positive, got {chi}')
        rows.append((f'V8/2*|{chi}|', v8 / 2 * abs(chi)))
    return rows
