"""Moments, entropic moments, Fisher information and variance of radial densities.

Every functional except :func:`variance` is a total over the density
(normalised to N). Variance is per particle.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import conf, mathcore
from .exceptions import DivergenceError, DomainError

logger = logging.getLogger(__name__)

ANALYTIC = 'analytic'
QUADRATURE = 'quadrature'


@dataclass(frozen=True)
class MomentValue:
    order: float
    value: float
    method: str
    est_error: float = 0.0
    kind: str = 'moment'
    convention: str = 'total'

    def __float__(self):
        return self.value


def _check_tail(density, integrand, what):
    """Reject integrands whose log-log tail slope is not steeper than -1."""
    if density.r_max is not None:
        return
    far = density.quadrature_spec().tail_cut
    near = far / 2.0
    g_far, g_near = abs(integrand(far)), abs(integrand(near))
    if g_far == 0.0 or g_near == 0.0:
        return
    slope = math.log(g_far / g_near) / math.log(far / near)
    if slope >= -1.0:
        raise DivergenceError(
            f'{what} of {density.label or "density"} diverges: integrand tail '
            f'decays like r^{slope:.3g}', slope=slope)


def _integrate(density, integrand):
    spec = density.quadrature_spec()
    if density.r_max is not None:
        value, error = mathcore.integrate_interval(
            integrand, 0.0, density.r_max, spec,
            points=density.breakpoints, full_output=True)
    else:
        value, error = mathcore.integrate_halfline(
            integrand, spec, points=density.breakpoints, full_output=True)
    omega = mathcore.omega(density.d)
    return omega * value, omega * error


def radial_moment(density, alpha, use_analytic=True):
    """<r^alpha> = omega(d) int r^(alpha+d-1) rho(r) dr."""
    d = density.d
    if not alpha + d > 0:
        raise DivergenceError(
            f'<r^{alpha}> diverges at the origin in d={d}', alpha=alpha, d=d)
    if use_analytic:
        value = density.analytic_moment(alpha)
        if value is not None:
            return MomentValue(order=alpha, value=value, method=ANALYTIC)
    power = alpha + d - 1.0

    def integrand(r):
        return r ** power * density.eval(r)

    _check_tail(density, integrand, f'<r^{alpha}>')
    value, error = _integrate(density, integrand)
    return MomentValue(order=alpha, value=value, method=QUADRATURE, est_error=error)


def entropic_moment(density, m, use_analytic=True):
    """W_m = omega(d) int rho(r)^m r^(d-1) dr."""
    if not m > 0:
        raise DomainError(f'entropic moment order must be positive, got {m}', m=m)
    if use_analytic:
        value = density.analytic_entropic(m)
        if value is not None:
            return MomentValue(order=m, value=value, method=ANALYTIC, kind='entropic')
    d = density.d

    def integrand(r):
        rho = density.eval(r)
        if rho < 0:
            raise DomainError(
                f'density {density.label!r} is negative at r={r}', r=r, rho=rho)
        return rho ** m * r ** (d - 1)

    if m < 1:
        _check_tail(density, integrand, f'W_{m:g}')
    value, error = _integrate(density, integrand)
    return MomentValue(order=m, value=value, method=QUADRATURE,
                       est_error=error, kind='entropic')


def fisher_information(density, use_analytic=True):
    """I = omega(d) int rho'(r)^2 / rho(r) r^(d-1) dr.

    Points where rho falls below the relative floor are excluded; for
    tabulated densities the mass so excluded is added to ``est_error``.
    """
    if use_analytic and density.fisher_value is not None:
        return MomentValue(order=2, value=density.fisher_value,
                           method=ANALYTIC, kind='fisher')
    d = density.d
    floor_name = 'TABULATED_FISHER_FLOOR' if density.tabulated else 'FISHER_FLOOR'
    floor = float(conf.get(floor_name)) * density.peak

    def integrand(r):
        rho = density.eval(r)
        if rho <= floor:
            return 0.0
        slope = density.deriv(r)
        return slope * (slope / rho) * r ** (d - 1)

    _check_tail(density, integrand, 'Fisher information')
    value, error = _integrate(density, integrand)
    if density.tabulated and density.breakpoints:
        r = np.asarray((0.0,) + density.breakpoints + (density.r_max,))
        rho = np.asarray(density.eval(r))
        excluded = np.where(rho <= floor, rho * r ** (d - 1), 0.0)
        excluded_mass = mathcore.omega(d) * mathcore.integrate_samples(excluded, r)
        if excluded_mass > 0:
            logger.debug('Fisher floor excluded mass %.3g of %r',
                         excluded_mass, density.label)
        error += excluded_mass
    return MomentValue(order=2, value=value, method=QUADRATURE,
                       est_error=error, kind='fisher')


def variance(density, use_analytic=True):
    """Per-particle variance <r^2>/N; the centroid of a radial density is the origin."""
    second = radial_moment(density, 2, use_analytic=use_analytic)
    return second.value / density.N
