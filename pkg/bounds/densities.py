"""Radial model densities, their conjugate partners and tabulated densities.

All densities are spherically symmetric functions of r on [0, inf),
normalised so that omega(d) * int rho(r) r^(d-1) dr = N. One-dimensional
densities are even functions of x and are treated with r = |x|.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from . import conf, mathcore
from .constants import SystemConfig
from .exceptions import DomainError, FormatError

logger = logging.getLogger(__name__)

POSITION = 'position'
MOMENTUM = 'momentum'
SPACES = (POSITION, MOMENTUM)


def _no_law(*args):
    return None


class RadialDensity:
    """A d-dimensional radial density.

    ``moment_law(alpha)``, ``entropic_law(m)`` and ``fisher_value`` carry
    closed forms where the model has them; ``None`` means quadrature only.
    ``r_max`` is set for densities with compact support.
    """

    def __init__(self, d, N, func, deriv, *, scale=1.0, label='',
                 space=POSITION, moment_law=None, entropic_law=None,
                 fisher_value=None, r_max=None, breakpoints=(),
                 tabulated=False, peak=None):
        if int(d) != d or d < 1:
            raise DomainError(f'dimension must be an integer >= 1, got {d}', d=d)
        if space not in SPACES:
            raise FormatError(f'space must be one of {SPACES}, got {space!r}')
        self.d = int(d)
        self.N = float(N)
        self._func = func
        self._deriv = deriv
        self.scale = float(scale)
        self.label = label
        self.space = space
        self._moment_law = moment_law or _no_law
        self._entropic_law = entropic_law or _no_law
        self.fisher_value = fisher_value
        self.r_max = r_max
        self.breakpoints = tuple(breakpoints)
        self.tabulated = tabulated
        self._peak = peak

    def __repr__(self):
        return f'<RadialDensity {self.label or "unnamed"} d={self.d} N={self.N:g} {self.space}>'

    def eval(self, r):
        return self._func(r)

    __call__ = eval

    def deriv(self, r):
        return self._deriv(r)

    def analytic_moment(self, alpha):
        """Closed-form <r^alpha> (total), or None."""
        return self._moment_law(alpha)

    def analytic_entropic(self, m):
        return self._entropic_law(m)

    @property
    def support_hint(self):
        return self.scale

    @property
    def peak(self):
        """Maximum of rho, sampled when not known in closed form."""
        if self._peak is None:
            upper = self.r_max if self.r_max is not None else 20.0 * self.scale
            grid = np.linspace(0.0, upper, 4001)
            self._peak = float(np.max(self.eval(grid)))
        return self._peak

    def quadrature_spec(self):
        return mathcore.QuadratureSpec.from_settings(scale=self.scale)

    def scaled(self, lam):
        """The density lam^d rho(lam r): same N, lengths divided by lam."""
        if not lam > 0:
            raise DomainError(f'scale factor must be positive, got {lam}', lam=lam)
        d = self.d
        func, deriv = self._func, self._deriv
        moment_law, entropic_law = self._moment_law, self._entropic_law

        def scaled_moment(alpha):
            value = moment_law(alpha)
            return None if value is None else lam ** (-alpha) * value

        def scaled_entropic(m):
            value = entropic_law(m)
            return None if value is None else lam ** (d * (m - 1.0)) * value

        return RadialDensity(
            d, self.N,
            lambda r: lam ** d * func(lam * r),
            lambda r: lam ** (d + 1) * deriv(lam * r),
            scale=self.scale / lam,
            label=f'{self.label}*{lam:g}',
            space=self.space,
            moment_law=scaled_moment,
            entropic_law=scaled_entropic,
            fisher_value=None if self.fisher_value is None else lam ** 2 * self.fisher_value,
            r_max=None if self.r_max is None else self.r_max / lam,
            breakpoints=[b / lam for b in self.breakpoints],
            tabulated=self.tabulated,
            peak=None if self._peak is None else lam ** d * self._peak,
        )


@dataclass(frozen=True)
class DensityPair:
    position: RadialDensity
    momentum: RadialDensity = None
    real_wavefunction: bool = False
    label: str = ''
    orbitals: int = 1
    q: int = None

    def __post_init__(self):
        if self.momentum is None:
            return
        if self.position.d != self.momentum.d:
            raise DomainError(
                f'position and momentum dimensions differ: '
                f'{self.position.d} != {self.momentum.d}')
        tolerance = 1e-8
        if self.position.tabulated or self.momentum.tabulated:
            tolerance = float(conf.get('NORMALIZATION_WARNING'))
        if not math.isclose(self.position.N, self.momentum.N, rel_tol=tolerance):
            raise DomainError(
                f'position and momentum normalisations differ: '
                f'{self.position.N} != {self.momentum.N}')

    @property
    def d(self):
        return self.position.d

    @property
    def N(self):
        return self.position.N

    def config(self, template=None):
        """SystemConfig of this pair; q comes from the pair, then the template."""
        q = self.q or (template.q if template is not None else 2)
        return SystemConfig(d=self.d, N=self.N, q=q)

    def scaled(self, lam):
        """Position scaled by lam and momentum by 1/lam."""
        return DensityPair(
            position=self.position.scaled(lam),
            momentum=None if self.momentum is None else self.momentum.scaled(1.0 / lam),
            real_wavefunction=self.real_wavefunction,
            label=f'{self.label}*{lam:g}',
            orbitals=self.orbitals,
            q=self.q,
        )


def _gaussian(d, sigma2, N, label, space):
    norm = N * (2.0 * math.pi * sigma2) ** (-d / 2.0)

    def func(r):
        return norm * np.exp(-r * r / (2.0 * sigma2))

    def deriv(r):
        return -r / sigma2 * func(r)

    def moment_law(alpha):
        if not alpha > -d:
            return None
        return (N * (2.0 * sigma2) ** (alpha / 2.0)
                * math.exp(mathcore.log_gamma((d + alpha) / 2.0)
                           - mathcore.log_gamma(d / 2.0)))

    def entropic_law(m):
        if not m > 0:
            return None
        return N ** m * m ** (-d / 2.0) * (2.0 * math.pi * sigma2) ** (-d * (m - 1.0) / 2.0)

    sigma = math.sqrt(sigma2)
    return RadialDensity(
        d, N, func, deriv, scale=sigma, label=label, space=space,
        moment_law=moment_law, entropic_law=entropic_law,
        fisher_value=N * d / sigma2, breakpoints=[sigma, 4.0 * sigma],
        peak=norm)


def gaussian_pair(d, a, N=1.0):
    """Minimum-uncertainty Gaussian state, wavefunction proportional to exp(-r^2/(4a^2))."""
    if not a > 0:
        raise DomainError(f'Gaussian width must be positive, got {a}', a=a)
    SystemConfig(d=d, N=N)
    label = f'gaussian(d={d},a={a:g},N={N:g})'
    return DensityPair(
        position=_gaussian(d, a * a, N, label, POSITION),
        momentum=_gaussian(d, 1.0 / (4.0 * a * a), N, label, MOMENTUM),
        real_wavefunction=True,
        label=label,
    )


def hydrogenic3d(Z=1.0):
    """Ground state of a one-electron atom of nuclear charge Z."""
    if not Z > 0:
        raise DomainError(f'nuclear charge must be positive, got {Z}', Z=Z)
    label = f'hydrogenic(Z={Z:g})'
    rho0 = Z ** 3 / math.pi

    def rho(r):
        return rho0 * np.exp(-2.0 * Z * r)

    def rho_deriv(r):
        return -2.0 * Z * rho(r)

    def r_moment(alpha):
        if not alpha > -3:
            return None
        return math.exp(mathcore.log_gamma(alpha + 3.0)) / (2.0 ** (alpha + 1.0) * Z ** alpha)

    def r_entropic(m):
        if not m > 0:
            return None
        return rho0 ** (m - 1.0) / m ** 3

    gamma0 = 8.0 * Z ** 5 / math.pi ** 2

    def gamma(p):
        return gamma0 / (Z * Z + p * p) ** 4

    def gamma_deriv(p):
        return -8.0 * p * gamma0 / (Z * Z + p * p) ** 5

    def p_moment(k):
        if not -3 < k < 5:
            return None
        return 16.0 / math.pi * Z ** k * mathcore.beta((k + 3.0) / 2.0, (5.0 - k) / 2.0)

    position = RadialDensity(
        3, 1.0, rho, rho_deriv, scale=1.0 / Z, label=label,
        moment_law=r_moment, entropic_law=r_entropic,
        fisher_value=4.0 * Z * Z, breakpoints=[1.0 / Z, 5.0 / Z], peak=rho0)
    momentum = RadialDensity(
        3, 1.0, gamma, gamma_deriv, scale=Z, label=label, space=MOMENTUM,
        moment_law=p_moment, fisher_value=12.0 / (Z * Z),
        breakpoints=[Z, 5.0 * Z], peak=gamma0 / Z ** 8)
    return DensityPair(position=position, momentum=momentum,
                       real_wavefunction=True, label=label)


def exponential_radial(d, lam=1.0, N=1.0):
    """rho(r) = N lam^d exp(-lam r) / (omega(d) Gamma(d)); position only."""
    if not lam > 0:
        raise DomainError(f'decay rate must be positive, got {lam}', lam=lam)
    SystemConfig(d=d, N=N)
    log_gamma_d = mathcore.log_gamma(d)
    rho0 = N * lam ** d / (mathcore.omega(d) * math.exp(log_gamma_d))

    def func(r):
        return rho0 * np.exp(-lam * r)

    def deriv(r):
        return -lam * func(r)

    def moment_law(alpha):
        if not alpha > -d:
            return None
        return N * math.exp(mathcore.log_gamma(d + alpha) - log_gamma_d) / lam ** alpha

    def entropic_law(m):
        if not m > 0:
            return None
        return (mathcore.omega(d) * rho0 ** m
                * math.exp(log_gamma_d) / (m * lam) ** d)

    return RadialDensity(
        d, N, func, deriv, scale=1.0 / lam,
        label=f'exponential(d={d},lam={lam:g},N={N:g})',
        moment_law=moment_law, entropic_law=entropic_law,
        fisher_value=N * lam * lam, breakpoints=[1.0 / lam, 5.0 / lam], peak=rho0)


def oscillator_occupations(N, q):
    """Bottom-up filling of oscillator levels with at most q particles each."""
    if int(N) != N or N < 1:
        raise DomainError(f'particle count must be an integer >= 1, got {N}', N=N)
    if q not in (1, 2):
        raise DomainError(f'spin multiplicity must be 1 or 2, got {q}', q=q)
    full, rest = divmod(int(N), q)
    occupations = [q] * full
    if rest:
        occupations.append(rest)
    return occupations


def hermite_functions(n_max, x):
    """Normalised Hermite functions phi_0..phi_n_max at x and their derivatives."""
    x = np.asarray(x, dtype=float)
    phi = np.empty((n_max + 2,) + x.shape)
    phi[0] = math.pi ** -0.25 * np.exp(-x * x / 2.0)
    phi[1] = math.sqrt(2.0) * x * phi[0]
    for n in range(1, n_max + 1):
        phi[n + 1] = (math.sqrt(2.0 / (n + 1)) * x * phi[n]
                      - math.sqrt(n / (n + 1.0)) * phi[n - 1])
    dphi = np.empty((n_max + 1,) + x.shape)
    dphi[0] = -math.sqrt(0.5) * phi[1]
    for n in range(1, n_max + 1):
        dphi[n] = math.sqrt(n / 2.0) * phi[n - 1] - math.sqrt((n + 1) / 2.0) * phi[n + 1]
    return phi[:n_max + 1], dphi


def harmonic_fermions_1d(N, q=2):
    """N non-interacting fermions in the unit oscillator, ground configuration."""
    occupations = np.asarray(oscillator_occupations(N, q), dtype=float)
    n_max = len(occupations) - 1
    label = f'ho1d(N={int(N)},q={q})'

    def _scalar(value, x):
        return float(value) if np.ndim(x) == 0 else value

    def func(x):
        phi, _ = hermite_functions(n_max, x)
        return _scalar(np.tensordot(occupations, phi * phi, axes=1), x)

    def deriv(x):
        phi, dphi = hermite_functions(n_max, x)
        return _scalar(2.0 * np.tensordot(occupations, phi * dphi, axes=1), x)

    levels = np.arange(n_max + 1)
    second = float(np.dot(occupations, levels + 0.5))
    fourth = float(np.dot(occupations, 0.75 * (2.0 * levels ** 2 + 2.0 * levels + 1.0)))

    def moment_law(alpha):
        return {0: float(N), 2: second, 4: fourth}.get(alpha)

    turning = math.sqrt(2.0 * n_max + 1.0)

    def side(space):
        return RadialDensity(
            1, float(N), func, deriv, scale=turning, label=label, space=space,
            moment_law=moment_law, breakpoints=[turning, 2.0 * turning])

    return DensityPair(position=side(POSITION), momentum=side(MOMENTUM),
                       real_wavefunction=True, label=label,
                       orbitals=len(occupations), q=q)


def load_tabulated(cfg, samples, space=POSITION, label='tabulated'):
    """Interpolant-backed density from an ordered (r, rho) table.

    The measured normalisation is stored on the density; a deviation from
    ``cfg.N`` beyond the configured threshold is logged, never rescaled.
    """
    table = np.asarray(samples, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2:
        raise FormatError('tabulated density must have two columns r, rho')
    minimum = int(conf.get('MIN_TABULATED_SAMPLES'))
    if table.shape[0] < minimum:
        raise FormatError(
            f'tabulated density needs at least {minimum} samples, got {table.shape[0]}')
    r, rho = table[:, 0], table[:, 1]
    if r[0] < 0:
        raise FormatError(f'radii must be non-negative, got r={r[0]}')
    interpolant = mathcore.MonotoneInterpolant(r, rho, left=rho[0], right=0.0)
    d = cfg.d
    r_max = float(r[-1])
    knots = [float(x) for x in r[1:-1]]
    spec = mathcore.QuadratureSpec.from_settings(scale=r_max)
    omega = mathcore.omega(d)
    measured = omega * mathcore.integrate_interval(
        lambda x: interpolant(x) * x ** (d - 1), 0.0, r_max, spec, points=knots)
    if not measured > 0:
        raise DomainError(f'tabulated density {label!r} has zero normalisation')
    deviation = abs(measured - cfg.N) / cfg.N
    if deviation > float(conf.get('NORMALIZATION_WARNING')):
        logger.warning('Tabulated density %r integrates to %.10g, expected %.10g '
                       '(%.2f%% off)', label, measured, cfg.N, 100.0 * deviation)
    return RadialDensity(
        d, measured, interpolant, interpolant.derivative,
        scale=r_max / float(conf.get('QUADRATURE')['TAIL_CUT_SCALES']),
        label=label, space=space, r_max=r_max, breakpoints=knots,
        tabulated=True, peak=float(rho.max()))


def sample_grid(density, n=400, r_max=None, spacing='quadratic'):
    """(r, rho) samples of ``density`` on [0, r_max].

    The quadratic grid r_i = r_max (i/(n-1))^2 concentrates samples where
    radial densities vary fastest.
    """
    if n < 2:
        raise DomainError(f'need at least two grid points, got {n}')
    if r_max is None:
        r_max = density.r_max or 30.0 * density.scale
    t = np.linspace(0.0, 1.0, int(n))
    if spacing == 'quadratic':
        r = r_max * t * t
    elif spacing == 'linear':
        r = r_max * t
    else:
        raise FormatError(f'unknown grid spacing {spacing!r}')
    rho = np.asarray(density.eval(r), dtype=float) * np.ones_like(r)
    return np.column_stack([r, rho])


def default_fleet():
    """The validation fleet every catalog inequality is checked against."""
    fleet = [gaussian_pair(d, 1.0, 1.0) for d in range(1, 6)]
    fleet += [hydrogenic3d(Z) for Z in (1.0, 2.0, 8.0)]
    fleet.append(DensityPair(position=exponential_radial(3, 1.0, 1.0),
                             label='exponential(d=3,lam=1,N=1)'))
    for q in (1, 2):
        fleet += [harmonic_fermions_1d(n, q) for n in range(1, 21)]
    return fleet
