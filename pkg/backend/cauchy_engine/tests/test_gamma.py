#!/usr/bin/env python3
"""
Tests for Euler Gamma, reciprocal Gamma, Gamma-form trigonometry and the
Gamma functions of generators.
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st
from scipy.special import gamma as scipy_gamma

# Add parent directories to path for importing
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from cauchy_engine.errors import DivisionByZero, DomainError, NonFinite, PoleError, Unsupported
from cauchy_engine.gamma import (
    Generator, closed_form, cos_via_gamma, euler_gamma, euler_identity_residual,
    gamma_phi, product_identity_residuals, pythagoras_gamma_residual,
    reciprocal_gamma, sin_via_gamma, tan_via_gamma,
)

TRIG_POINTS = [float(z) for z in np.linspace(0.05, 3.1, 50)]


class TestEulerGamma(unittest.TestCase):
    """Test the Lanczos Gamma function and its reciprocal."""

    def test_known_values(self):
        self.assertAlmostEqual(euler_gamma(1.0), 1.0, delta=1e-14)
        self.assertAlmostEqual(euler_gamma(5.0), 24.0, delta=1e-12)
        self.assertAlmostEqual(euler_gamma(0.5), math.sqrt(math.pi), delta=1e-14)

    def test_reflection_formula(self):
        """Gamma(x) Gamma(1-x) sin(pi x) = pi on 17 points of (0,1)."""
        for x in np.linspace(0.05, 0.95, 17):
            x = float(x)
            with self.subTest(x=x):
                value = euler_gamma(x) * euler_gamma(1.0 - x) * math.sin(math.pi * x)
                self.assertLessEqual(abs(value - math.pi), 1e-10)

    def test_against_scipy(self):
        points = [float(x) for x in np.linspace(0.1, 10.0, 30)] + [-2.5, -1.5, -0.5, -0.1]
        for x in points:
            with self.subTest(x=x):
                expected = float(scipy_gamma(x))
                self.assertLessEqual(abs(euler_gamma(x) - expected), 1e-12 * abs(expected))

    def test_poles(self):
        for x in (0.0, -1.0, -2.0, -7.0):
            with self.subTest(x=x), self.assertRaises(PoleError):
                euler_gamma(x)

    def test_overflow(self):
        """Gamma leaves the float range just above x = 171.6."""
        self.assertLess(euler_gamma(171.0), math.inf)
        with self.assertRaises(NonFinite):
            euler_gamma(180.0)
        self.assertEqual(reciprocal_gamma(180.0), 0j)
        self.assertEqual(euler_gamma(-200.5), 0.0)

    def test_reciprocal_values(self):
        self.assertAlmostEqual(abs(reciprocal_gamma(1.0) - 1.0), 0.0, delta=1e-14)
        self.assertEqual(reciprocal_gamma(0.0), 0j)
        self.assertAlmostEqual(reciprocal_gamma(0.5).real, 1.0 / math.sqrt(math.pi), delta=1e-14)

    def test_reciprocal_complex(self):
        for z in (complex(0.5, 1.0), complex(2.0, -0.5), complex(-1.5, 0.7)):
            with self.subTest(z=z):
                expected = 1.0 / complex(scipy_gamma(z))
                self.assertLessEqual(abs(reciprocal_gamma(z) - expected), 1e-12 * abs(expected))

    @given(st.integers(-60, 0))
    def test_reciprocal_vanishes_at_poles(self, n):
        self.assertEqual(reciprocal_gamma(float(n)), 0j)
        self.assertEqual(reciprocal_gamma(complex(n, 0.0)), 0j)

    @settings(max_examples=100)
    @given(st.floats(0.01, 0.99))
    def test_reflection_property(self, x):
        value = euler_gamma(x) * euler_gamma(1.0 - x) * math.sin(math.pi * x)
        self.assertLessEqual(abs(value - math.pi), 1e-10)


class TestGammaTrigonometry(unittest.TestCase):
    """Test sine, cosine and tangent written through Gamma values."""

    def test_exact_points(self):
        self.assertAlmostEqual(sin_via_gamma(math.pi / 2), 1.0, delta=1e-14)
        self.assertAlmostEqual(cos_via_gamma(0.0), 1.0, delta=1e-14)
        self.assertAlmostEqual(tan_via_gamma(math.pi / 4), 1.0, delta=1e-14)

    def test_zeros_from_reciprocal_gamma(self):
        """sin 0 and cos(pi/2) are exact zeros, not rounding noise."""
        self.assertEqual(sin_via_gamma(0.0), 0.0)
        self.assertEqual(cos_via_gamma(math.pi / 2), 0.0)

    def test_against_library_trig(self):
        for z in TRIG_POINTS:
            with self.subTest(z=z):
                self.assertLessEqual(abs(sin_via_gamma(z) - math.sin(z)), 1e-10)
                self.assertLessEqual(abs(cos_via_gamma(z) - math.cos(z)), 1e-10)
                self.assertLessEqual(abs(tan_via_gamma(z) - math.tan(z)), 1e-10)

    def test_tangent_pole(self):
        with self.assertRaises(DivisionByZero):
            tan_via_gamma(math.pi / 2)
        with self.assertRaises(ZeroDivisionError):
            tan_via_gamma(math.pi / 2)

    def test_euler_identity(self):
        self.assertLessEqual(euler_identity_residual(0.0), 1e-12)
        for z in TRIG_POINTS + [1.0, math.pi / 3]:
            with self.subTest(z=z):
                self.assertLessEqual(euler_identity_residual(z), 1e-10)

    def test_pythagoras(self):
        self.assertLessEqual(pythagoras_gamma_residual(math.pi / 2), 1e-12)
        for z in TRIG_POINTS + [0.3, 1.0]:
            with self.subTest(z=z):
                self.assertLessEqual(pythagoras_gamma_residual(z), 1e-10)

    def test_product_identity(self):
        for z in (0.0, 0.2, 1.1, 2.5):
            with self.subTest(z=z):
                real_part, imaginary_part = product_identity_residuals(z)
                self.assertLessEqual(real_part, 1e-9)
                self.assertLessEqual(imaginary_part, 1e-9)
        self.assertEqual(product_identity_residuals(0.0)[1], 0.0)


class TestGenerators(unittest.TestCase):
    """Test Gamma_phi by quadrature against the closed forms."""

    def _assert_agrees(self, gen, xs, delta=1e-7):
        for x in xs:
            x = float(x)
            with self.subTest(generator=gen.describe(), x=x):
                self.assertLessEqual(abs(gamma_phi(gen, x) - closed_form(gen, x)), delta)

    def test_exponential(self):
        self._assert_agrees(Generator.exponential(math.e), np.linspace(0.5, 5.0, 20))

    def test_additive(self):
        self._assert_agrees(Generator.additive(2.0), np.linspace(0.5, 5.0, 20))

    def test_logarithmic(self):
        self._assert_agrees(Generator.logarithmic(-1.0), np.linspace(1.0, 5.0, 20))

    def test_multiplicative(self):
        cases = {0.0: (0.5, 5.0), 1.0: (1.0, 5.0), 2.0: (1.0, 5.0), -0.5: (0.5, 2.5)}
        for p, (lo, hi) in cases.items():
            self._assert_agrees(Generator.multiplicative(p), np.linspace(lo, hi, 20))

    def test_neg_log_is_euler_gamma(self):
        gen = Generator.neg_log()
        for x in np.linspace(1.0, 5.0, 9):
            x = float(x)
            with self.subTest(x=x):
                self.assertLessEqual(abs(gamma_phi(gen, x) - euler_gamma(x)), 1e-6)

    def test_closed_form_examples(self):
        self.assertAlmostEqual(closed_form(Generator.neg_log(), 2.0), 1.0, delta=1e-14)
        self.assertEqual(closed_form(Generator.multiplicative(0.0), 7.3), 1.0)
        self.assertAlmostEqual(closed_form(Generator.exponential(math.e), 2.0), math.e - 1.0, delta=1e-14)
        self.assertEqual(closed_form(Generator.exponential(3.0), 1.0), 1.0)
        self.assertAlmostEqual(closed_form(Generator.additive(2.0), 3.0), 4.0 / 3.0, delta=1e-14)
        self.assertAlmostEqual(closed_form(Generator.multiplicative(1.0), 2.0), 0.5, delta=1e-15)

    def test_parameter_restrictions(self):
        with self.assertRaises(DomainError):
            Generator.additive(-1.0)
        with self.assertRaises(DomainError):
            Generator.logarithmic(1.0)
        with self.assertRaises(DomainError):
            Generator.exponential(0.0)

    def test_divergent_argument(self):
        with self.assertRaises(DomainError):
            gamma_phi(Generator.additive(2.0), -1.0)
        with self.assertRaises(DomainError):
            gamma_phi(Generator.multiplicative(-0.5), 4.0)

    def test_custom_generator(self):
        gen = Generator.custom("t^2")
        self.assertAlmostEqual(gen.phi(0.5), 0.25, delta=1e-15)
        self.assertAlmostEqual(gamma_phi(gen, 2.0), 1.0 / 3.0, delta=1e-9)
        with self.assertRaises(Unsupported):
            closed_form(gen, 2.0)

    def test_custom_generator_with_parameter(self):
        gen = Generator.custom("k*t", {'k': 2.0})
        self.assertAlmostEqual(gamma_phi(gen, 3.0), closed_form(Generator.additive(2.0), 3.0), delta=1e-9)

    def test_custom_generator_must_be_positive(self):
        with self.assertRaises(DomainError):
            Generator.custom("t - 0.5")


def run_tests():
    """Run all tests and return results."""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    test_classes = [
        TestEulerGamma,
        TestGammaTrigonometry,
        TestGenerators,
    ]

    for test_class in test_classes:
        suite.addTests(loader.loadTestsFromTestCase(test_class))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
