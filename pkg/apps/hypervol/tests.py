import math
import random

import mpmath
from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from .services import (
    ConstantName,
    EvaluationMethod,
    constant,
    lobachevsky,
    polyhedron_volume,
    terms_for_tolerance,
    v8_alternating_series,
    v8_series_error_bound,
)


class LobachevskyTests(SimpleTestCase):

    def test_zeros(self):
        self.assertEqual(lobachevsky(0.0), 0.0)
        self.assertAlmostEqual(lobachevsky(math.pi / 2), 0.0, places=14)
        self.assertAlmostEqual(lobachevsky(math.pi), 0.0, places=14)

    def test_octahedron_value(self):
        self.assertAlmostEqual(8 * lobachevsky(math.pi / 4), 3.663862376708876, places=13)

    def test_matches_mpmath_clausen(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED)
        for _ in range(100):
            theta = rng.uniform(-4, 4)
            expected = float(mpmath.clsin(2, 2 * theta)) / 2
            self.assertAlmostEqual(lobachevsky(theta), expected, places=13)

    def test_odd_and_periodic(self):
        rng = random.Random(settings.CENSUS_DEFAULT_SEED + 1)
        for _ in range(100):
            theta = rng.uniform(-10, 10)
            self.assertAlmostEqual(lobachevsky(-theta), -lobachevsky(theta), places=12)
            self.assertAlmostEqual(lobachevsky(theta + math.pi), lobachevsky(theta), places=12)

    def test_tolerance_must_be_positive(self):
        with self.assertRaises(ValidationError):
            lobachevsky(1.0, tol=0)

    def test_angle_must_be_finite(self):
        for theta in (math.nan, math.inf, -math.inf):
            with self.assertRaises(ValidationError):
                lobachevsky(theta)


class AlternatingSeriesTests(SimpleTestCase):

    def test_first_terms(self):
        self.assertEqual(v8_alternating_series(1), 4.0)
        self.assertAlmostEqual(v8_alternating_series(2), 4 * (1 - 1 / 9), places=15)

    def test_partial_sums_bracket_the_limit(self):
        v8 = constant(ConstantName.V8).value
        for terms in range(1, 11):
            partial = v8_alternating_series(terms)
            if terms % 2:
                self.assertGreater(partial, v8)
            else:
                self.assertLess(partial, v8)
            self.assertLessEqual(abs(partial - v8), v8_series_error_bound(terms))

    def test_rejects_zero_terms(self):
        with self.assertRaises(ValidationError):
            v8_alternating_series(0)

    def test_terms_for_tolerance(self):
        terms = terms_for_tolerance(1e-6)
        self.assertLessEqual(v8_series_error_bound(terms), 1e-6)
        self.assertGreater(v8_series_error_bound(terms - 1), 1e-6)


class ConstantTests(SimpleTestCase):

    def test_printed_prefixes(self):
        v3 = constant(ConstantName.V3).value
        v8 = constant(ConstantName.V8).value
        self.assertTrue(f'{2 * v3:.12f}'.startswith('2.02'))
        self.assertTrue(f'{v8:.12f}'.startswith('3.66'))
        self.assertTrue(f'{2 * v8:.12f}'.startswith('7.32'))

    def test_values(self):
        self.assertAlmostEqual(constant('V3').value, 1.0149416064096536, places=14)
        self.assertAlmostEqual(constant('V8').value, 3.663862376708876, places=14)

    def test_methods_agree(self):
        by_function = constant(ConstantName.V8, EvaluationMethod.LOBACHEVSKY_SERIES)
        by_series = constant(ConstantName.V8, EvaluationMethod.ALTERNATING_SERIES)
        self.assertEqual(by_series.method, EvaluationMethod.ALTERNATING_SERIES)
        self.assertLess(abs(by_function.value - by_series.value), 1e-12)

    def test_v3_has_no_alternating_series(self):
        with self.assertRaises(ValidationError):
            constant(ConstantName.V3, EvaluationMethod.ALTERNATING_SERIES)

    def test_polyhedron_volume(self):
        self.assertEqual(polyhedron_volume('oct'), constant('V8').value)
        self.assertEqual(polyhedron_volume('tet'), constant('V3').value)
