"""Shared numerical substrate.

Special functions, improper-integral quadrature, one-dimensional
minimisation, root finding and monotone interpolation. Everything here is a
thin, validated layer over scipy; callers never touch scipy directly for
these concerns.
"""
import dataclasses
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, interpolate, optimize, special

from . import conf
from .exceptions import (BracketError, ConvergenceError, DomainError,
                         FormatError, NonFiniteIntegrandError)

logger = logging.getLogger(__name__)

# QUADPACK warnings (roundoff, slow convergence) are tolerated while the
# reported error estimate stays within this multiple of the requested one.
ACCEPT_FACTOR = 1.0e4


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_refinements: int = 200
    tail_cut: float = 40.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f'rel_tol must be positive, got {self.rel_tol}')
        if not self.abs_tol >= 0:
            raise DomainError(f'abs_tol must be non-negative, got {self.abs_tol}')
        if int(self.max_refinements) < 1:
            raise DomainError(
                f'max_refinements must be at least 1, got {self.max_refinements}')
        if not self.tail_cut > 0:
            raise DomainError(f'tail_cut must be positive, got {self.tail_cut}')

    @classmethod
    def from_settings(cls, scale=1.0):
        """Build from ``UNCREL['QUADRATURE']``; ``scale`` is the decay length."""
        quad = conf.get('QUADRATURE')
        return cls(
            rel_tol=float(quad['REL_TOL']),
            abs_tol=float(quad['ABS_TOL']),
            max_refinements=int(quad['MAX_REFINEMENTS']),
            tail_cut=float(quad['TAIL_CUT_SCALES']) * scale,
        )

    def with_tail_cut(self, tail_cut):
        return dataclasses.replace(self, tail_cut=tail_cut)

    def tolerance(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class MinimizeResult:
    argmin: float
    min_value: float
    iterations: int
    converged: bool


# Special functions

def omega(d):
    """Surface area of the unit sphere in ``d`` dimensions, 2 pi^(d/2) / Gamma(d/2)."""
    if d < 1:
        raise DomainError(f'dimension must be at least 1, got {d}', d=d)
    return 2.0 * math.pi ** (d / 2.0) / math.gamma(d / 2.0)


def log_gamma(x):
    if not x > 0:
        raise DomainError(f'log_gamma needs a positive argument, got {x}', x=x)
    return float(special.gammaln(x))


def beta(a, b):
    if not (a > 0 and b > 0):
        raise DomainError(
            f'beta needs positive arguments, got ({a}, {b})', a=a, b=b)
    return math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


def exp1(x):
    """Exponential integral E1(x) for x > 0."""
    if not x > 0:
        raise DomainError(f'E1 needs a positive argument, got {x}', x=x)
    return float(special.exp1(x))


# Quadrature

def _checked(f):
    def integrand(x):
        value = f(x)
        if not math.isfinite(value):
            raise NonFiniteIntegrandError(
                f'integrand is not finite at r={x!r}', r=x, value=value)
        return value
    return integrand


def _quad(f, lo, hi, spec, **kwargs):
    points = kwargs.pop('points', None)
    limit = int(spec.max_refinements)
    if points is not None:
        points = [p for p in points if lo < p < hi]
        if points:
            kwargs['points'] = points
            limit = max(limit, 2 * len(points) + 10)
    try:
        out = integrate.quad(f, lo, hi, epsabs=spec.abs_tol,
                             epsrel=spec.rel_tol, limit=limit,
                             full_output=1, **kwargs)
    except ValueError as exc:
        raise ConvergenceError(f'quadrature rejected the problem: {exc}') from exc
    value, error = float(out[0]), float(out[1])
    if not math.isfinite(value):
        raise NonFiniteIntegrandError(
            f'quadrature over [{lo}, {hi}] returned {value}')
    if len(out) > 3 and error > ACCEPT_FACTOR * spec.tolerance(value):
        raise ConvergenceError(
            f'quadrature over [{lo}, {hi}] did not converge: {out[3]}',
            value=value, error=error)
    return value, error


def integrate_halfline(f, spec=None, *, points=None, full_output=False):
    """Integral of ``f`` over [0, inf).

    [0, tail_cut] is handled by adaptive Gauss-Kronrod subdivision, the tail
    by QUADPACK's mapping of [tail_cut, inf) onto a finite interval.
    """
    spec = spec or QuadratureSpec.from_settings()
    integrand = _checked(f)
    head, head_error = _quad(integrand, 0.0, spec.tail_cut, spec, points=points)
    tail, tail_error = _quad(integrand, spec.tail_cut, np.inf, spec)
    value = head + tail
    error = head_error + tail_error
    if full_output:
        return value, error
    return value


def integrate_interval(f, lo, hi, spec=None, *, points=None,
                       endpoint_powers=None, full_output=False):
    """Integral of ``f`` over the finite interval [lo, hi].

    With ``endpoint_powers=(p, q)`` the integral is of
    ``f(x) * (x - lo)**p * (hi - x)**q``, the weights being handled exactly.
    """
    spec = spec or QuadratureSpec.from_settings()
    if not hi > lo:
        raise DomainError(f'empty interval [{lo}, {hi}]')
    integrand = _checked(f)
    if endpoint_powers is None:
        value, error = _quad(integrand, lo, hi, spec, points=points)
    else:
        value, error = _quad(integrand, lo, hi, spec, weight='alg',
                             wvar=tuple(endpoint_powers))
    if full_output:
        return value, error
    return value


def integrate_samples(y, x):
    """Trapezoidal integral of sampled values; used for error estimates only."""
    return float(integrate.trapezoid(np.asarray(y, dtype=float),
                                     np.asarray(x, dtype=float)))


# Minimisation and roots

def minimize_scalar(f, bracket, tol=1e-12, maxiter=500):
    """Minimise a unimodal ``f``.

    The initial interval is expanded geometrically until it brackets a
    minimum, then Brent's golden-section/parabolic method refines it.
    """
    lo, hi = (float(v) for v in bracket)
    if not hi > lo:
        raise BracketError(f'bracket must satisfy lo < hi, got ({lo}, {hi})')
    try:
        xa, xb, xc = optimize.bracket(f, xa=lo, xb=hi, maxiter=maxiter)[:3]
        res = optimize.minimize_scalar(
            f, bracket=(xa, xb, xc), method='brent', tol=tol,
            options={'maxiter': maxiter})
    except (RuntimeError, ValueError) as exc:
        raise BracketError(
            f'no interior minimum found from ({lo}, {hi}): {exc}') from exc
    if not res.success:
        raise ConvergenceError(
            f'minimiser did not converge: {res.message}', argmin=res.x)
    return MinimizeResult(argmin=float(res.x), min_value=float(res.fun),
                          iterations=int(res.nit), converged=bool(res.success))


def bracket_root(f, x0, step=1.0, grow=2.0, maxiter=60):
    """Expand outward from ``x0`` until ``f`` changes sign."""
    lo, hi = x0 - step, x0 + step
    flo, fhi = f(lo), f(hi)
    for _ in range(maxiter):
        if np.sign(flo) != np.sign(fhi):
            return lo, hi
        step *= grow
        if abs(flo) < abs(fhi):
            lo -= step
            flo = f(lo)
        else:
            hi += step
            fhi = f(hi)
    raise BracketError(f'no sign change found around {x0}')


def solve_root(f, bracket, xtol=1e-14, maxiter=200):
    lo, hi = (float(v) for v in bracket)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise BracketError(
            f'no sign change over [{lo}, {hi}]: f={flo:.3g}, {fhi:.3g}')
    root, info = optimize.brentq(f, lo, hi, xtol=xtol, maxiter=maxiter,
                                 full_output=True)
    if not info.converged:
        raise ConvergenceError(f'root finder stopped: {info.flag}')
    return float(root)


# Interpolation

class MonotoneInterpolant:
    """Shape-preserving C1 cubic through tabulated samples.

    Outside the sample range the interpolant takes the constant ``left`` and
    ``right`` values with zero slope.
    """

    def __init__(self, x, y, left=None, right=None):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise FormatError('samples must be two equal-length columns')
        if x.size < 2:
            raise FormatError('at least two samples are needed')
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise FormatError('samples must be finite')
        if np.any(np.diff(x) <= 0):
            raise FormatError('abscissae must be strictly increasing')
        if np.any(y < 0):
            raise FormatError('samples must be non-negative')
        self.x = x
        self.y = y
        self.left = float(y[0] if left is None else left)
        self.right = float(y[-1] if right is None else right)
        self._curve = interpolate.PchipInterpolator(x, y, extrapolate=False)
        self._slope = self._curve.derivative()

    def _fill(self, curve, r, left, right):
        r_arr = np.asarray(r, dtype=float)
        out = np.where(r_arr < self.x[0], left,
                       np.where(r_arr > self.x[-1], right, 0.0))
        inside = (r_arr >= self.x[0]) & (r_arr <= self.x[-1])
        if np.any(inside):
            out = np.where(inside, np.nan_to_num(curve(r_arr)), out)
        if np.ndim(r) == 0:
            return float(out)
        return out

    def __call__(self, r):
        return self._fill(self._curve, r, self.left, self.right)

    def derivative(self, r):
        return self._fill(self._slope, r, 0.0, 0.0)


def interpolate_monotone(samples):
    """Build a :class:`MonotoneInterpolant` from an ordered (x, y) table."""
    table = np.asarray(samples, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2:
        raise FormatError('samples must be a sequence of (x, y) pairs')
    return MonotoneInterpolant(table[:, 0], table[:, 1])
