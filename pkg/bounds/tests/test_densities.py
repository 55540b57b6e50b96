import math

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import trapezoid

from bounds import densities, mathcore
from bounds.constants import SystemConfig
from bounds.exceptions import DomainError, FormatError


def normalisation(density):
    return mathcore.omega(density.d) * mathcore.integrate_halfline(
        lambda r: density.eval(r) * r ** (density.d - 1),
        density.quadrature_spec(), points=density.breakpoints)


class ModelTests(SimpleTestCase):

    def test_gaussians_are_normalised(self):
        for d in range(1, 6):
            pair = densities.gaussian_pair(d, 0.7, 3.0)
            with self.subTest(d=d):
                self.assertAlmostEqual(normalisation(pair.position), 3.0, delta=1e-9)
                self.assertAlmostEqual(normalisation(pair.momentum), 3.0, delta=1e-9)

    def test_hydrogenic_is_normalised(self):
        for Z in (1.0, 2.0, 8.0):
            pair = densities.hydrogenic3d(Z)
            with self.subTest(Z=Z):
                self.assertAlmostEqual(normalisation(pair.position), 1.0, delta=1e-9)
                self.assertAlmostEqual(normalisation(pair.momentum), 1.0, delta=1e-9)

    def test_exponential_is_normalised(self):
        density = densities.exponential_radial(2, lam=1.5, N=2.0)
        self.assertAlmostEqual(normalisation(density), 2.0, delta=1e-9)

    def test_hydrogenic_closed_forms(self):
        pair = densities.hydrogenic3d(1.0)
        self.assertAlmostEqual(pair.position.analytic_moment(1), 1.5, places=14)
        self.assertAlmostEqual(pair.position.analytic_moment(2), 3.0, places=14)
        self.assertAlmostEqual(pair.momentum.analytic_moment(2), 1.0, places=12)
        self.assertAlmostEqual(pair.momentum.analytic_moment(-1), 16 / (3 * math.pi), places=12)
        self.assertIsNone(pair.momentum.analytic_moment(5))

    def test_gaussian_variances(self):
        pair = densities.gaussian_pair(1, 0.5)
        self.assertAlmostEqual(pair.position.analytic_moment(2), 0.25, places=14)
        self.assertAlmostEqual(pair.momentum.analytic_moment(2), 1.0, places=14)

    def test_gaussian_rejects_bad_width(self):
        with self.assertRaises(DomainError):
            densities.gaussian_pair(3, 0.0)

    def test_mismatched_pair(self):
        with self.assertRaises(DomainError):
            densities.DensityPair(position=densities.gaussian_pair(3, 1.0, 1.0).position,
                                  momentum=densities.gaussian_pair(3, 1.0, 2.0).momentum)
        with self.assertRaises(DomainError):
            densities.DensityPair(position=densities.gaussian_pair(3, 1.0).position,
                                  momentum=densities.gaussian_pair(2, 1.0).momentum)


class HarmonicOscillatorTests(SimpleTestCase):

    def test_occupations(self):
        self.assertEqual(densities.oscillator_occupations(5, 2), [2, 2, 1])
        self.assertEqual(densities.oscillator_occupations(3, 1), [1, 1, 1])
        with self.assertRaises(DomainError):
            densities.oscillator_occupations(2.5, 2)
        with self.assertRaises(DomainError):
            densities.oscillator_occupations(2, 3)

    def test_hermite_functions_are_orthonormal(self):
        x = np.linspace(-12.0, 12.0, 6001)
        phi, _ = densities.hermite_functions(6, x)
        gram = trapezoid(phi[:, None, :] * phi[None, :, :], x, axis=-1)
        np.testing.assert_allclose(gram, np.eye(7), atol=1e-8)

    def test_hermite_derivatives(self):
        x = np.linspace(-4.0, 4.0, 81)
        h = 1e-5
        _, dphi = densities.hermite_functions(4, x)
        plus, _ = densities.hermite_functions(4, x + h)
        minus, _ = densities.hermite_functions(4, x - h)
        np.testing.assert_allclose(dphi, (plus - minus) / (2 * h), atol=1e-8)

    def test_density_integrates_to_N(self):
        for N, q in ((1, 1), (4, 1), (7, 2), (10, 2)):
            pair = densities.harmonic_fermions_1d(N, q)
            with self.subTest(N=N, q=q):
                self.assertAlmostEqual(normalisation(pair.position), N, delta=1e-8)
                self.assertEqual(pair.q, q)

    def test_second_moment_law(self):
        pair = densities.harmonic_fermions_1d(4, 1)
        self.assertAlmostEqual(pair.position.analytic_moment(2), 8.0, places=12)
        self.assertAlmostEqual(pair.position.analytic_moment(4),
                               0.75 * (1 + 5 + 13 + 25), places=12)
        self.assertIsNone(pair.position.analytic_moment(1))


class ScalingTests(SimpleTestCase):

    def test_scaled_pair_keeps_N(self):
        pair = densities.hydrogenic3d(1.0).scaled(2.0)
        self.assertAlmostEqual(normalisation(pair.position), 1.0, delta=1e-9)
        self.assertAlmostEqual(pair.position.analytic_moment(1), 0.75, places=14)
        self.assertAlmostEqual(pair.momentum.analytic_moment(2), 4.0, places=12)
        self.assertAlmostEqual(pair.position.fisher_value, 16.0, places=12)

    def test_rejects_non_positive_factor(self):
        with self.assertRaises(DomainError):
            densities.gaussian_pair(3, 1.0).position.scaled(-1.0)


class TabulatedTests(SimpleTestCase):

    def test_round_trip_of_hydrogen(self):
        source = densities.hydrogenic3d(1.0).position
        samples = densities.sample_grid(source, n=400, r_max=30.0)
        density = densities.load_tabulated(SystemConfig(d=3), samples)
        self.assertTrue(density.tabulated)
        self.assertEqual(density.r_max, 30.0)
        self.assertAlmostEqual(density.N, 1.0, delta=1e-3)
        self.assertAlmostEqual(density.eval(0.5), source.eval(0.5), delta=1e-3 * source.eval(0.0))
        self.assertEqual(density.eval(31.0), 0.0)

    def test_too_few_samples(self):
        samples = [(0.0, 1.0), (1.0, 0.5), (2.0, 0.0)]
        with self.assertRaises(FormatError):
            densities.load_tabulated(SystemConfig(d=1), samples)

    def test_negative_radius(self):
        r = np.linspace(-1.0, 5.0, 20)
        with self.assertRaises(FormatError):
            densities.load_tabulated(SystemConfig(d=1), np.column_stack([r, np.exp(-r * r)]))

    def test_zero_density(self):
        r = np.linspace(0.0, 5.0, 20)
        with self.assertRaises(DomainError):
            densities.load_tabulated(SystemConfig(d=1), np.column_stack([r, np.zeros_like(r)]))

    def test_normalisation_warning(self):
        r = np.linspace(0.0, 10.0, 200)
        rho = 0.5 * np.exp(-r)
        with self.assertLogs('bounds.densities', level='WARNING') as logs:
            density = densities.load_tabulated(SystemConfig(d=1, N=2.0), np.column_stack([r, rho]))
        self.assertAlmostEqual(density.N, 1.0 - math.exp(-10.0), delta=1e-3)
        self.assertIn('integrates to', logs.output[0])

    def test_grid_spacing(self):
        density = densities.gaussian_pair(1, 1.0).position
        linear = densities.sample_grid(density, n=11, r_max=10.0, spacing='linear')
        quadratic = densities.sample_grid(density, n=11, r_max=10.0)
        self.assertAlmostEqual(linear[1, 0], 1.0, places=14)
        self.assertAlmostEqual(quadratic[1, 0], 0.1, places=14)
        with self.assertRaises(FormatError):
            densities.sample_grid(density, spacing='log')


class FleetTests(SimpleTestCase):

    def test_composition(self):
        fleet = densities.default_fleet()
        self.assertEqual(len(fleet), 5 + 3 + 1 + 40)
        self.assertEqual(sum(1 for pair in fleet if pair.momentum is None), 1)
        self.assertEqual({pair.config().q for pair in fleet if pair.q}, {1, 2})
