import math

import numpy as np
from django.test import SimpleTestCase

from bounds import constants, mathcore
from bounds.exceptions import BracketError, DomainError, FormatError


class SpecialFunctionTests(SimpleTestCase):

    def test_omega(self):
        self.assertAlmostEqual(mathcore.omega(1), 2.0, places=14)
        self.assertAlmostEqual(mathcore.omega(2), 2.0 * math.pi, places=14)
        self.assertAlmostEqual(mathcore.omega(3), 4.0 * math.pi, places=13)

    def test_omega_rejects_zero_dimension(self):
        with self.assertRaises(DomainError):
            mathcore.omega(0)

    def test_beta_matches_gamma_ratio(self):
        self.assertAlmostEqual(mathcore.beta(2.5, 1.5), math.pi / 16, places=14)

    def test_beta_rejects_non_positive(self):
        with self.assertRaises(DomainError):
            mathcore.beta(0.0, 1.0)


class QuadratureTests(SimpleTestCase):

    def test_exponential(self):
        value = mathcore.integrate_halfline(lambda r: math.exp(-r))
        self.assertAlmostEqual(value, 1.0, delta=1e-10)

    def test_gaussian_second_moment(self):
        value = mathcore.integrate_halfline(lambda r: r * r * math.exp(-r * r))
        self.assertAlmostEqual(value, math.sqrt(math.pi) / 4, delta=1e-10)

    def test_exponential_integral_tail(self):
        a = 0.6
        value = mathcore.integrate_halfline(lambda u: math.exp(-u - a) * u / (u + a))
        self.assertAlmostEqual(value, constants.daubechies_tail(a), delta=1e-10)

    def test_gaussian_closure(self):
        for d in range(1, 6):
            value = mathcore.omega(d) * mathcore.integrate_halfline(
                lambda r, d=d: r ** (d - 1) * math.exp(-r * r))
            self.assertAlmostEqual(value / math.pi ** (d / 2), 1.0, delta=1e-10)

    def test_linearity(self):
        def f(r):
            return math.exp(-r)

        def g(r):
            return r * math.exp(-2.0 * r)

        combined = mathcore.integrate_halfline(lambda r: 3.0 * f(r) - 0.5 * g(r))
        separate = 3.0 * mathcore.integrate_halfline(f) - 0.5 * mathcore.integrate_halfline(g)
        self.assertAlmostEqual(combined, separate, delta=1e-10)

    def test_endpoint_weight(self):
        # int_0^1 (1 - x)^0.5 dx = 2/3
        value = mathcore.integrate_interval(lambda x: 1.0, 0.0, 1.0,
                                            endpoint_powers=(0.0, 0.5))
        self.assertAlmostEqual(value, 2.0 / 3.0, delta=1e-12)

    def test_non_finite_integrand(self):
        with self.assertRaises(ArithmeticError):
            mathcore.integrate_interval(lambda x: math.inf, 0.0, 1.0)

    def test_spec_validation(self):
        with self.assertRaises(DomainError):
            mathcore.QuadratureSpec(rel_tol=0.0)
        with self.assertRaises(DomainError):
            mathcore.QuadratureSpec(max_refinements=0)


class MinimizeTests(SimpleTestCase):

    def test_quadratic(self):
        result = mathcore.minimize_scalar(lambda x: (x - 2.0) ** 2, (0.0, 5.0))
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.argmin, 2.0, delta=1e-7)
        self.assertAlmostEqual(result.min_value, 0.0, delta=1e-12)

    def test_cosh(self):
        result = mathcore.minimize_scalar(math.cosh, (-1.0, 0.5))
        self.assertAlmostEqual(result.argmin, 0.0, delta=1e-7)
        self.assertAlmostEqual(result.min_value, 1.0, delta=1e-12)


class RootTests(SimpleTestCase):

    def test_sqrt_two(self):
        self.assertAlmostEqual(mathcore.solve_root(lambda x: x * x - 2.0, (1.0, 2.0)),
                               math.sqrt(2.0), delta=1e-12)

    def test_log_two(self):
        self.assertAlmostEqual(mathcore.solve_root(lambda x: math.exp(-x) - 0.5, (0.0, 2.0)),
                               math.log(2.0), delta=1e-12)

    def test_no_sign_change(self):
        with self.assertRaises(BracketError):
            mathcore.solve_root(lambda x: x * x + 1.0, (-1.0, 1.0))

    def test_bracket_expansion(self):
        lo, hi = mathcore.bracket_root(lambda x: x - 37.0, 0.0)
        self.assertLess(lo, 37.0)
        self.assertGreater(hi, 37.0)


class InterpolationTests(SimpleTestCase):

    def test_exponential_samples(self):
        r = 10.0 * np.linspace(0.0, 1.0, 200) ** 2
        curve = mathcore.MonotoneInterpolant(r, np.exp(-r))
        dense = np.linspace(0.0, 10.0, 5001)
        self.assertLess(np.max(np.abs(curve(dense) - np.exp(-dense))), 5e-4)

    def test_reproduces_nodes(self):
        x = np.array([0.0, 0.5, 1.3, 2.0, 4.0])
        y = np.array([1.0, 0.7, 0.2, 0.1, 0.0])
        curve = mathcore.interpolate_monotone(np.column_stack([x, y]))
        np.testing.assert_allclose(curve(x), y, rtol=1e-12, atol=1e-15)

    def test_two_points_linear(self):
        curve = mathcore.MonotoneInterpolant([0.0, 2.0], [1.0, 3.0])
        self.assertAlmostEqual(curve(0.5), 1.5, places=14)
        self.assertAlmostEqual(curve.derivative(1.0), 1.0, places=14)

    def test_outside_range(self):
        curve = mathcore.MonotoneInterpolant([1.0, 2.0, 3.0], [3.0, 2.0, 1.0],
                                             left=3.0, right=0.0)
        self.assertEqual(curve(0.5), 3.0)
        self.assertEqual(curve(4.0), 0.0)
        self.assertEqual(curve.derivative(4.0), 0.0)

    def test_negative_sample_rejected(self):
        with self.assertRaises(FormatError):
            mathcore.MonotoneInterpolant([0.0, 1.0, 2.0], [1.0, -0.1, 0.0])

    def test_unordered_rejected(self):
        with self.assertRaises(FormatError):
            mathcore.MonotoneInterpolant([0.0, 2.0, 1.0], [1.0, 0.5, 0.2])

    def test_duplicate_rejected(self):
        with self.assertRaises(FormatError):
            mathcore.MonotoneInterpolant([0.0, 1.0, 1.0], [1.0, 0.5, 0.2])
