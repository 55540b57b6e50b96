"""Catalog of uncertainty relations evaluated against density pairs.

Each check returns a :class:`BoundReport`; :func:`sweep` runs one relation
over a fleet and records parameter-domain failures as hole rows instead of
aborting.
"""
import logging
import math
from dataclasses import dataclass, field

from . import conf, constants
from .constants import SystemConfig
from .exceptions import DomainError, PreconditionError, UncrelError
from .functionals import entropic_moment, fisher_information, radial_moment

logger = logging.getLogger(__name__)

LHS_GE_RHS = 'lhs_ge_rhs'
LHS_LE_RHS = 'lhs_le_rhs'

CATALOG = {
    'thakkar_upper': LHS_LE_RHS,
    'thakkar_lower': LHS_GE_RHS,
    'semiclassical': LHS_GE_RHS,
    'daubechies': LHS_GE_RHS,
    'heisenberg_general': LHS_GE_RHS,
    'heisenberg_d3': LHS_GE_RHS,
    'negative_order': LHS_LE_RHS,
    'zumbach': LHS_LE_RHS,
    'zumbach_conjugate': LHS_LE_RHS,
    'fisher_product_heisenberg': LHS_GE_RHS,
    'fisher_product_N': LHS_GE_RHS,
    'fisher_product_largeN': LHS_GE_RHS,
    'fisher_d3': LHS_GE_RHS,
    'cramer_rao': LHS_GE_RHS,
    'fisher_real_4d2': LHS_GE_RHS,
}

FISHER_IDS = {
    'general': 'fisher_product_N',
    'electronic': 'fisher_product_N',
    'large_N_fermion': 'fisher_product_largeN',
    'large_N_electron': 'fisher_product_largeN',
    'd3_electron': 'fisher_d3',
    'd3_large_N': 'fisher_d3',
    'heisenberg': 'fisher_product_heisenberg',
    'cramer_rao': 'cramer_rao',
    'real_4d2': 'fisher_real_4d2',
}

DEFAULT_FISHER_VARIANT = {
    'fisher_product_N': 'general',
    'fisher_product_largeN': 'large_N_fermion',
    'fisher_d3': 'd3_electron',
    'fisher_product_heisenberg': 'heisenberg',
    'cramer_rao': 'cramer_rao',
    'fisher_real_4d2': 'real_4d2',
}


@dataclass(frozen=True)
class InequalityId:
    id: str
    direction: str
    alpha: float = None
    k: float = None
    variant: str = None

    @classmethod
    def of(cls, name, alpha=None, k=None, variant=None):
        if name not in CATALOG:
            raise DomainError(f'unknown inequality {name!r}', id=name)
        direction = CATALOG[name]
        if name == 'semiclassical' and k is not None and k < 0:
            direction = LHS_LE_RHS
        return cls(id=name, direction=direction, alpha=alpha, k=k, variant=variant)


@dataclass(frozen=True)
class BoundReport:
    inequality: InequalityId
    lhs: float
    rhs: float
    margin: float
    satisfied: bool
    ratio: float
    label: str = ''
    config: SystemConfig = None
    valid: bool = True
    error: str = ''
    extra: dict = field(default_factory=dict)

    @property
    def id(self):
        return self.inequality.id

    @property
    def direction(self):
        return self.inequality.direction

    @property
    def rigorous_satisfied(self):
        """Verdict against the rigorous constant, when the relation carries one."""
        return self.extra.get('rigorous_satisfied')

    @classmethod
    def hole(cls, inequality, label, config, error):
        return cls(inequality=inequality, lhs=math.nan, rhs=math.nan,
                   margin=math.nan, satisfied=False, ratio=math.nan,
                   label=label, config=config, valid=False, error=str(error))


def make_report(inequality, lhs, rhs, label='', config=None, **extra):
    if inequality.direction == LHS_GE_RHS:
        margin = lhs - rhs
    else:
        margin = rhs - lhs
    tolerance = float(conf.get('REPORT_TOLERANCE')) * max(abs(lhs), abs(rhs))
    ratio = lhs / rhs if rhs != 0 else math.inf
    return BoundReport(inequality=inequality, lhs=lhs, rhs=rhs, margin=margin,
                       satisfied=margin >= -tolerance, ratio=ratio, label=label,
                       config=config, extra=extra)


def _momentum(pair, what):
    if pair.momentum is None:
        raise PreconditionError(
            f'{what} needs the momentum density, {pair.label!r} has none',
            label=pair.label)
    return pair.momentum


def _moment(density, order):
    return radial_moment(density, order).value


def check_semiclassical(pair, cfg, k):
    """<p^k> against K_d(k) q^(-k/d) W_{1+k/d}[rho].

    For k > 0 the verdict uses the rigorous constant K'_d = K_d B(d,k); the
    semiclassical comparison is kept in ``extra``. For -d < k < 0 the
    relation is inverted and the semiclassical constant is the verdict.
    """
    d = cfg.d
    if k == 0 or not k > -d:
        raise DomainError(f'semiclassical bound needs -d < k != 0, got k={k}', k=k)
    inequality = InequalityId.of('semiclassical', k=k)
    p_k = _moment(_momentum(pair, 'semiclassical bound'), k)
    w = entropic_moment(pair.position, 1.0 + k / d).value
    spin = cfg.q ** (-k / d)
    semiclassical_rhs = constants.K_d(d, k) * spin * w
    if k < 0:
        return make_report(inequality, p_k, semiclassical_rhs, pair.label, cfg,
                           entropic_moment=w)
    rigorous_rhs = constants.K_prime(d, k) * spin * w
    return make_report(inequality, p_k, rigorous_rhs, pair.label, cfg,
                       entropic_moment=w, semiclassical_rhs=semiclassical_rhs,
                       semiclassical_satisfied=p_k >= semiclassical_rhs)


def check_daubechies(pair, cfg, k):
    """Semiclassical relation with the rigorous constant K_d B, k > 0 only."""
    if not k > 0:
        raise DomainError(f'the rigorous bound needs k > 0, got {k}', k=k)
    report = check_semiclassical(pair, cfg, k)
    return make_report(InequalityId.of('daubechies', k=k), report.lhs, report.rhs,
                       report.label, cfg, **report.extra)


def check_thakkar(pair, cfg, k):
    """Three-dimensional bounds <p^k> vs c_k W_{1+k/3}: lower for k = 1..4, upper for k = -2, -1."""
    if cfg.d != 3:
        raise PreconditionError(f'c_k bounds are three-dimensional, got d={cfg.d}', d=cfg.d)
    if k in (1, 2, 3, 4):
        inequality = InequalityId.of('thakkar_lower', k=k)
    elif k in (-2, -1):
        inequality = InequalityId.of('thakkar_upper', k=k)
    else:
        raise DomainError(f'c_k bounds are stated for k in -2, -1, 1..4, got {k}', k=k)
    p_k = _moment(_momentum(pair, 'c_k bound'), k)
    w = entropic_moment(pair.position, 1.0 + k / 3.0).value
    return make_report(inequality, p_k, constants.c_k(k) * w, pair.label, cfg,
                       entropic_moment=w)


def _uncertainty_product(pair, alpha, k):
    r_alpha = _moment(pair.position, alpha)
    p_k = _moment(_momentum(pair, 'uncertainty product'), k)
    return r_alpha ** (k / alpha) * p_k, r_alpha, p_k


def check_heisenberg(pair, cfg, alpha, k, ineq='heisenberg_general'):
    """<r^alpha>^(k/alpha) <p^k> >= F(d,alpha,k) q^(-k/d) N^(1+k(1/alpha+1/d)).

    The verdict uses the semiclassical K_d inside F. It can fail for a few
    particles (one-dimensional oscillator ground states at alpha = k = 1);
    ``extra`` carries the comparison against the rigorous constant K_d B,
    which holds for every density.
    """
    if not (alpha > 0 and k > 0):
        raise DomainError(f'Heisenberg-like relation needs alpha, k > 0, got {alpha}, {k}',
                          alpha=alpha, k=k)
    if ineq == 'heisenberg_d3' and cfg.d != 3:
        raise PreconditionError(f'heisenberg_d3 needs d = 3, got d={cfg.d}', d=cfg.d)
    inequality = InequalityId.of(ineq, alpha=alpha, k=k)
    lhs, r_alpha, p_k = _uncertainty_product(pair, alpha, k)
    rhs = constants.F_script(cfg.d, alpha, k, cfg.N, cfg.q)
    rigorous_rhs = rhs * constants.B_daubechies(cfg.d, k)
    return make_report(inequality, lhs, rhs, pair.label, cfg,
                       r_moment=r_alpha, p_moment=p_k,
                       exponent=constants.heisenberg_exponent(cfg.d, alpha, k),
                       rigorous_rhs=rigorous_rhs,
                       rigorous_satisfied=bool(lhs >= rigorous_rhs))


def check_negative_order(pair, cfg, alpha, k):
    """<r^alpha>^(k/alpha) <p^k> <= G_d(alpha,k) q^(-k/d) N^(1+k(1/alpha+1/d)), k < 0."""
    constants.check_negative_order_params(cfg.d, alpha, k)
    inequality = InequalityId.of('negative_order', alpha=alpha, k=k)
    lhs, r_alpha, p_k = _uncertainty_product(pair, alpha, k)
    g = constants.G_script(cfg.d, alpha, k, cfg.N, cfg.q)
    return make_report(inequality, lhs, g.unwrap(), pair.label, cfg,
                       r_moment=r_alpha, p_moment=p_k, note=g.domain_note)


def check_zumbach(pair, cfg):
    """Both orientations: <p^2> vs the position Fisher information and <r^2> vs the momentum one."""
    factor = 0.5 * constants.zumbach_factor(cfg.d, cfg.N, cfg.q)
    momentum = _momentum(pair, 'Zumbach bound')
    fisher_rho = fisher_information(pair.position).value
    fisher_gamma = fisher_information(momentum).value
    direct = make_report(InequalityId.of('zumbach'), _moment(momentum, 2),
                         factor * fisher_rho, pair.label, cfg, fisher=fisher_rho)
    conjugate = make_report(InequalityId.of('zumbach_conjugate'),
                            _moment(pair.position, 2), factor * fisher_gamma,
                            pair.label, cfg, fisher=fisher_gamma)
    return direct, conjugate


def check_fisher_product(pair, cfg, variant='general'):
    """I[rho] I[gamma] against one of the Fisher-product lower bounds.

    ``cramer_rao`` is the exception: it is the per-particle single-space
    product (I[rho]/N)(<r^2>/N) >= d^2.
    """
    if variant not in FISHER_IDS:
        raise DomainError(f'unknown Fisher variant {variant!r}', variant=variant)
    inequality = InequalityId.of(FISHER_IDS[variant], variant=variant)
    d, N = cfg.d, cfg.N
    fisher_rho = fisher_information(pair.position).value
    if variant == 'cramer_rao':
        per_particle = _moment(pair.position, 2) / N
        return make_report(inequality, fisher_rho / N * per_particle, float(d * d),
                           pair.label, cfg, fisher=fisher_rho, variance=per_particle,
                           convention='per particle')
    if variant == 'real_4d2' and not pair.real_wavefunction:
        raise PreconditionError(
            f'I[rho] I[gamma] >= 4 d^2 needs a real wavefunction; {pair.label!r} is not',
            label=pair.label)
    if variant in constants.FISHER_VARIANTS:
        # the closed forms raise on their own q/d restrictions
        rhs = constants.fisher_rhs(variant, cfg)
    fisher_gamma = fisher_information(_momentum(pair, 'Fisher product')).value
    lhs = fisher_rho * fisher_gamma
    if variant == 'real_4d2':
        rhs = 4.0 * d * d
    elif variant == 'heisenberg':
        product = _moment(pair.position, 2) * _moment(pair.momentum, 2)
        rhs = 4.0 * product / constants.zumbach_factor(d, N, cfg.q) ** 2
    return make_report(inequality, lhs, rhs, pair.label, cfg,
                       fisher_position=fisher_rho, fisher_momentum=fisher_gamma)


def real_identity(pair):
    """((I[rho], 4<p^2>), (I[gamma], 4<r^2>)) of a real-wavefunction pair.

    The two sides agree for a single real orbital; a sum of several real
    orbitals only gives I[rho] <= 4<p^2>.
    """
    if not pair.real_wavefunction:
        raise PreconditionError(f'{pair.label!r} is not a real wavefunction',
                                label=pair.label)
    momentum = _momentum(pair, 'real-wavefunction identity')
    position_side = (fisher_information(pair.position).value, 4.0 * _moment(momentum, 2))
    momentum_side = (fisher_information(momentum).value, 4.0 * _moment(pair.position, 2))
    if pair.orbitals == 1:
        for fisher, four_moment in (position_side, momentum_side):
            if not math.isclose(fisher, four_moment, rel_tol=1e-6):
                logger.warning('real single-orbital pair %r: I = %.10g but 4<.^2> = %.10g',
                               pair.label, fisher, four_moment)
    return position_side, momentum_side


def check(name, pair, cfg, alpha=None, k=None, variant=None):
    """Dispatch one catalog relation by id."""
    if name not in CATALOG:
        raise DomainError(f'unknown inequality {name!r}', id=name)

    def need(value, what):
        if value is None:
            raise DomainError(f'{name} needs {what}', id=name)
        return value

    if name in ('thakkar_lower', 'thakkar_upper'):
        report = check_thakkar(pair, cfg, need(k, 'k'))
        if report.id != name:
            raise DomainError(f'k={k} belongs to {report.id}, not {name}', k=k)
        return report
    if name == 'semiclassical':
        return check_semiclassical(pair, cfg, need(k, 'k'))
    if name == 'daubechies':
        return check_daubechies(pair, cfg, need(k, 'k'))
    if name in ('heisenberg_general', 'heisenberg_d3'):
        return check_heisenberg(pair, cfg, need(alpha, 'alpha'), need(k, 'k'), ineq=name)
    if name == 'negative_order':
        return check_negative_order(pair, cfg, need(alpha, 'alpha'), need(k, 'k'))
    if name in ('zumbach', 'zumbach_conjugate'):
        direct, conjugate = check_zumbach(pair, cfg)
        return direct if name == 'zumbach' else conjugate
    variant = variant or DEFAULT_FISHER_VARIANT[name]
    if FISHER_IDS.get(variant) != name:
        raise DomainError(f'variant {variant!r} does not belong to {name}', variant=variant)
    return check_fisher_product(pair, cfg, variant)


def sweep(name, fleet, template=None, alpha=None, k=None, variant=None):
    """One report per fleet member, ordered by N; failures become hole rows."""
    if not fleet:
        raise DomainError('sweep needs a non-empty fleet')
    template = template or SystemConfig(d=fleet[0].d)
    inequality = InequalityId.of(name, alpha=alpha, k=k, variant=variant)
    reports = []
    for pair in sorted(fleet, key=lambda member: member.N):
        cfg = pair.config(template)
        if name.startswith('heisenberg'):
            logger.info('%s on %s with q=%s', name, pair.label, cfg.q)
        try:
            reports.append(check(name, pair, cfg, alpha=alpha, k=k, variant=variant))
        except UncrelError as exc:
            logger.info('sweep hole: %s on %s: %s', name, pair.label, exc.message)
            reports.append(BoundReport.hole(inequality, pair.label, cfg, exc.message))
    return reports
