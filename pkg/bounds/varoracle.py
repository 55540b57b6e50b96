"""Numerical reconstruction of the extremal densities of W_m under fixed N and <r^alpha>.

For k > 0 (m = 1 + k/d > 1) the minimiser of W_m is
C (a^alpha - r^alpha)^(d/k) on [0, a]. For k < 0 (0 < m < 1) the same
stationary family with a^alpha = -b^alpha, C (b^alpha + r^alpha)^(d/k) on
the whole half-line, is the maximiser; it is normalisable with finite
<r^alpha> and W_m exactly when alpha > -k d / (d + k).

The scale parameter is found by root finding on quadrature moments, not
from the Beta-function reduction, so the results are an independent check
of the closed forms in :mod:`bounds.constants`.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import constants, functionals, mathcore
from .densities import RadialDensity
from .exceptions import DomainError, InfeasibleError, UncrelError

logger = logging.getLogger(__name__)

MINIMIZER = 'F'
MAXIMIZER = 'G'


@dataclass(frozen=True)
class ExtremalConstant:
    d: int
    alpha: float
    k: float
    numeric_value: float
    closed_form_value: float = None
    discrepancy: float = None
    kind: str = MINIMIZER
    valid: bool = True
    note: str = ''

    @property
    def comparable(self):
        return self.discrepancy is not None


@dataclass(frozen=True)
class ExtremalShape:
    """C (a^alpha - sign r^alpha)^p, with sign = +1 on [0, a] and -1 on [0, inf)."""
    d: int
    alpha: float
    k: float
    C: float
    a: float

    @property
    def p(self):
        return self.d / self.k

    @property
    def compact(self):
        return self.k > 0

    @property
    def m(self):
        return 1.0 + self.k / self.d

    def base(self, r):
        a_pow = self.a ** self.alpha
        if self.compact:
            return max(a_pow - r ** self.alpha, 0.0)
        return a_pow + r ** self.alpha

    def eval(self, r):
        if self.compact and r >= self.a:
            return 0.0
        return self.C * self.base(r) ** self.p

    def deriv(self, r):
        if self.compact and r >= self.a:
            return 0.0
        slope = self.alpha * r ** (self.alpha - 1.0)
        if self.compact:
            slope = -slope
        return self.C * self.p * self.base(r) ** (self.p - 1.0) * slope

    def as_density(self, N):
        kind = 'minimiser' if self.compact else 'maximiser'
        return RadialDensity(
            self.d, N, _vectorized(self.eval), _vectorized(self.deriv),
            scale=self.a,
            label=f'{kind}(d={self.d},alpha={self.alpha:g},k={self.k:g})',
            r_max=self.a if self.compact else None,
            breakpoints=[] if self.compact else [self.a, 4.0 * self.a],
            peak=self.C * self.a ** (self.alpha * self.p))


def _vectorized(func):
    vector = np.vectorize(func, otypes=[float])

    def call(r):
        if np.ndim(r) == 0:
            return func(float(r))
        return vector(r)
    return call


def chord_slope(r, a, alpha):
    """(a^alpha - r^alpha) / (a - r) on [0, a], alpha a^(alpha-1) at r = a."""
    a_pow = a ** alpha
    u = r / a
    if u <= 0:
        return a_pow / a
    if u >= 1:
        return alpha * a_pow / a
    return a_pow / a * -math.expm1(alpha * math.log(u)) / (1.0 - u)


def _unit_moments(d, alpha, k, a):
    """(M_0, M_alpha) of (a^alpha -/+ r^alpha)^(d/k) with C = 1."""
    shape = ExtremalShape(d=d, alpha=alpha, k=k, C=1.0, a=a)
    spec = mathcore.QuadratureSpec.from_settings(scale=a)
    if shape.compact:
        def smooth(r, power):
            # (a^alpha - r^alpha)^p = [(a^alpha - r^alpha)/(a - r)]^p (a - r)^p
            return chord_slope(r, a, alpha) ** shape.p * r ** (power + d - 1.0)

        return tuple(
            mathcore.integrate_interval(lambda r, s=power: smooth(r, s), 0.0, a, spec,
                                        endpoint_powers=(0.0, shape.p))
            for power in (0.0, alpha))
    return tuple(
        mathcore.integrate_halfline(
            lambda r, s=power: shape.base(r) ** shape.p * r ** (s + d - 1.0),
            spec, points=[a, 4.0 * a])
        for power in (0.0, alpha))


def check_maximizer_window(d, alpha, k):
    if not (-d < k < 0):
        raise DomainError(f'maximiser needs -d < k < 0, got k={k}', d=d, k=k)
    low = constants.negative_order_window(d, k)
    if not alpha > low:
        raise InfeasibleError(
            f'C(b^alpha + r^alpha)^(d/k) is not normalisable with finite '
            f'<r^alpha> and W_m for alpha={alpha} <= {low:.6g} (d={d}, k={k})',
            d=d, alpha=alpha, k=k)


def extremal_shape(d, alpha, k, N=1.0, r_alpha=1.0):
    """Solve the two constraints for (C, a) of the extremal family."""
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    if not alpha > 0:
        raise DomainError(f'alpha must be positive, got {alpha}', alpha=alpha)
    if not (N > 0 and r_alpha > 0):
        raise InfeasibleError(
            f'constraints need positive N and <r^alpha>, got N={N}, r_alpha={r_alpha}')
    if k == 0:
        raise DomainError('k must be non-zero')
    if k < 0:
        check_maximizer_window(d, alpha, k)
    ratio = r_alpha / N

    def residual(t):
        m0, m_alpha = _unit_moments(d, alpha, k, math.exp(t))
        return math.log(m_alpha / m0) - math.log(ratio)

    t0 = math.log(ratio) / alpha
    bracket = mathcore.bracket_root(residual, t0, step=0.5)
    a = math.exp(mathcore.solve_root(residual, bracket, xtol=1e-13))
    m0, _ = _unit_moments(d, alpha, k, a)
    C = N / (mathcore.omega(d) * m0)
    logger.debug('extremal shape d=%s alpha=%s k=%s: C=%.12g a=%.12g',
                 d, alpha, k, C, a)
    return ExtremalShape(d=d, alpha=alpha, k=k, C=C, a=a)


def minimizer_density(d, alpha, k, N=1.0, r_alpha=1.0):
    """Minimiser of W_{1+k/d} at fixed N and <r^alpha>, supported on [0, a]."""
    if not k > 0:
        raise DomainError(f'minimiser needs k > 0, got {k}', k=k)
    return extremal_shape(d, alpha, k, N, r_alpha).as_density(N)


def maximizer_density(d, alpha, k, N=1.0, r_alpha=1.0):
    """Maximiser of W_{1+k/d} for -d < k < 0, supported on [0, inf)."""
    if not k < 0:
        raise DomainError(f'maximiser needs k < 0, got {k}', k=k)
    return extremal_shape(d, alpha, k, N, r_alpha).as_density(N)


def _relative(numeric, closed):
    return abs(numeric - closed) / abs(closed)


def extremal_F(d, alpha, k):
    """Numeric F(d, alpha, k): W_{1+k/d} of the minimiser at N = <r^alpha> = 1."""
    density = minimizer_density(d, alpha, k)
    numeric = functionals.entropic_moment(density, 1.0 + k / d, use_analytic=False).value
    closed = constants.F_const(d, alpha, k)
    return ExtremalConstant(d=d, alpha=alpha, k=k, numeric_value=numeric,
                            closed_form_value=closed,
                            discrepancy=_relative(numeric, closed), kind=MINIMIZER)


def extremal_G(d, alpha, k):
    """Numeric G_d(alpha, k): W_{1+k/d} of the maximiser at N = <r^alpha> = 1."""
    density = maximizer_density(d, alpha, k)
    numeric = functionals.entropic_moment(density, 1.0 + k / d, use_analytic=False).value
    # inside the admissibility window the closed form is always real
    closed = constants.G_closed_form(d, alpha, k).unwrap()
    return ExtremalConstant(d=d, alpha=alpha, k=k, numeric_value=numeric,
                            closed_form_value=closed,
                            discrepancy=_relative(numeric, closed), kind=MAXIMIZER)


def _bump(centre, width):
    def bump(r):
        x = (r - centre) / width
        return (1.0 - x * x) ** 2 if abs(x) < 1.0 else 0.0
    return bump


def perturbation_gain(shape, centres=(0.25, 0.5, 0.75), amplitude=1e-3):
    """W_m[f + eps h] - W_m[f] for a bump h that keeps N and <r^alpha> fixed.

    ``centres`` are fractions of the scale parameter; h is a combination of
    three compact bumps with the first coefficient fixed to one, scaled by
    the value of f at the origin.
    """
    if len(centres) != 3:
        raise DomainError('three bump centres are needed')
    d, alpha, m = shape.d, shape.alpha, shape.m
    a = shape.a
    width = 0.2 * a
    bumps = [_bump(c * a, width) for c in centres]
    spec = mathcore.QuadratureSpec.from_settings(scale=a)
    edges = sorted({max(c * a - width, 0.0) for c in centres}
                   | {c * a + width for c in centres})
    lo, hi = edges[0], edges[-1]
    if shape.compact and hi >= a:
        raise DomainError('bumps must lie inside the support')

    def moment(func, power):
        return mathcore.integrate_interval(
            lambda r: func(r) * r ** (power + d - 1.0), lo, hi, spec, points=edges)

    system = np.array([[moment(b, 0.0) for b in bumps[1:]],
                       [moment(b, alpha) for b in bumps[1:]]])
    rhs = -np.array([moment(bumps[0], 0.0), moment(bumps[0], alpha)])
    c1, c2 = np.linalg.solve(system, rhs)
    height = shape.eval(0.0)
    coefficients = (height, height * float(c1), height * float(c2))

    def h(r):
        return sum(c * b(r) for c, b in zip(coefficients, bumps))

    def gain(r):
        f = shape.eval(r)
        g = f + amplitude * h(r)
        if g < 0:
            raise InfeasibleError(f'perturbed density negative at r={r}')
        return (g ** m - f ** m) * r ** (d - 1.0)

    return mathcore.omega(d) * mathcore.integrate_interval(gain, lo, hi, spec, points=edges)


def oracle_grid(dims=(1, 2, 3, 4), alphas=(1, 2, 3, 4), ks=(1, 2, 3, 4)):
    """extremal_F over a grid; failures become invalid rows."""
    rows = []
    for d in dims:
        for alpha in alphas:
            for k in ks:
                try:
                    rows.append(extremal_F(d, alpha, k))
                except UncrelError as exc:
                    logger.info('oracle grid hole at d=%s alpha=%s k=%s: %s',
                                d, alpha, k, exc)
                    rows.append(ExtremalConstant(
                        d=d, alpha=alpha, k=k, numeric_value=math.nan,
                        valid=False, note=exc.message))
    return rows
