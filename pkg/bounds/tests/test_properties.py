import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from bounds import constants, densities, functionals, inequalities, mathcore

scales = st.floats(min_value=0.3, max_value=3.0)
orders = st.floats(min_value=0.5, max_value=4.0)


class ScalingProperties(SimpleTestCase):

    @settings(max_examples=20, deadline=None)
    @given(lam=scales, alpha=orders, d=st.integers(min_value=1, max_value=4))
    def test_moment_scaling(self, lam, alpha, d):
        density = densities.exponential_radial(d, 1.0, 1.0)
        base = functionals.radial_moment(density, alpha, use_analytic=False).value
        scaled = functionals.radial_moment(density.scaled(lam), alpha, use_analytic=False).value
        self.assertAlmostEqual(scaled / (lam ** -alpha * base), 1.0, delta=1e-8)

    @settings(max_examples=20, deadline=None)
    @given(lam=scales, m=st.floats(min_value=0.6, max_value=3.0))
    def test_entropic_scaling(self, lam, m):
        density = densities.hydrogenic3d(1.0).position
        base = functionals.entropic_moment(density, m, use_analytic=False).value
        scaled = functionals.entropic_moment(density.scaled(lam), m, use_analytic=False).value
        self.assertAlmostEqual(scaled / (lam ** (3 * (m - 1)) * base), 1.0, delta=1e-8)

    @settings(max_examples=25, deadline=None)
    @given(lam=scales, alpha=st.sampled_from([1, 2, 3, 4]), k=st.sampled_from([1, 2, 3, 4]))
    def test_uncertainty_product_is_scale_free(self, lam, alpha, k):
        pair = densities.hydrogenic3d(1.0)
        cfg = pair.config()
        base = inequalities.check('heisenberg_general', pair, cfg, alpha=alpha, k=k)
        scaled = inequalities.check('heisenberg_general', pair.scaled(lam), cfg,
                                    alpha=alpha, k=k)
        self.assertAlmostEqual(scaled.lhs / base.lhs, 1.0, delta=1e-10)
        self.assertEqual(scaled.rhs, base.rhs)


class ConstantProperties(SimpleTestCase):

    @settings(max_examples=15, deadline=None)
    @given(d=st.integers(min_value=1, max_value=4), k=st.integers(min_value=1, max_value=4),
           c=st.integers(min_value=2, max_value=3))
    def test_B_depends_on_ratio_only(self, d, k, c):
        self.assertAlmostEqual(constants.B_daubechies(d, k),
                               constants.B_daubechies(c * d, c * k),
                               delta=1e-9)

    @given(d=st.integers(min_value=1, max_value=6), alpha=st.integers(min_value=1, max_value=6),
           k=st.integers(min_value=1, max_value=6))
    def test_exponent_fraction(self, d, alpha, k):
        self.assertAlmostEqual(float(constants.heisenberg_exponent_fraction(d, alpha, k)),
                               constants.heisenberg_exponent(d, alpha, k), places=12)

    @given(d=st.integers(min_value=1, max_value=5), N=st.floats(min_value=1.0, max_value=1e3),
           q=st.sampled_from([1, 2]))
    def test_general_fisher_bound_below_large_N_form(self, d, N, q):
        cfg = constants.SystemConfig(d=d, N=N, q=q)
        self.assertLess(constants.fisher_rhs('general', cfg),
                        constants.fisher_rhs('large_N_fermion', cfg))


class InterpolationProperties(SimpleTestCase):

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.floats(min_value=0.0, max_value=10.0), min_size=3, max_size=30))
    def test_monotone_data_stays_in_range(self, values):
        y = np.sort(np.asarray(values))[::-1]
        x = np.arange(len(y), dtype=float)
        curve = mathcore.MonotoneInterpolant(x, y)
        dense = curve(np.linspace(0.0, x[-1], 301))
        self.assertTrue(np.all(dense <= y[0] + 1e-12))
        self.assertTrue(np.all(dense >= y[-1] - 1e-12))
        self.assertTrue(np.all(np.diff(dense) <= 1e-12))


class VerdictScaleInvariance(SimpleTestCase):

    @settings(max_examples=15, deadline=None)
    @given(lam=scales, variant=st.sampled_from(['general', 'heisenberg', 'real_4d2']))
    def test_fisher_product(self, lam, variant):
        pair = densities.hydrogenic3d(1.0)
        cfg = pair.config()
        base = inequalities.check_fisher_product(pair, cfg, variant)
        scaled = inequalities.check_fisher_product(pair.scaled(lam), cfg, variant)
        self.assertAlmostEqual(scaled.lhs / base.lhs, 1.0, delta=1e-9)
        self.assertAlmostEqual(scaled.rhs / base.rhs, 1.0, delta=1e-9)

    @settings(max_examples=15, deadline=None)
    @given(lam=scales, k=st.sampled_from([-1, 1, 2]))
    def test_semiclassical_ratio(self, lam, k):
        pair = densities.gaussian_pair(3, 1.0)
        cfg = pair.config()
        base = inequalities.check_semiclassical(pair, cfg, k)
        scaled = inequalities.check_semiclassical(pair.scaled(lam), cfg, k)
        self.assertAlmostEqual(scaled.ratio / base.ratio, 1.0, delta=1e-9)
        self.assertEqual(scaled.satisfied, base.satisfied)
