"""Closed-form and numerically defined constants of the uncertainty bounds.

Every evaluator is a pure, scale-free function of (d, alpha, k, N, q).
Single evaluations raise :class:`~bounds.exceptions.DomainError` outside
their parameter domain; :func:`evaluate` wraps any of them for batch use and
returns a flagged-invalid :class:`ConstantValue` instead.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from . import mathcore
from .exceptions import ConvergenceError, DomainError, UncrelError

logger = logging.getLogger(__name__)

FISHER_VARIANTS = (
    'general',
    'electronic',
    'large_N_fermion',
    'large_N_electron',
    'd3_electron',
    'd3_large_N',
)


@dataclass(frozen=True)
class SystemConfig:
    d: int
    N: float = 1.0
    q: int = 2

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f'd must be an integer >= 1, got {self.d}', d=self.d)
        if not self.N > 0:
            raise DomainError(f'N must be positive, got {self.N}', N=self.N)
        if int(self.q) != self.q or self.q < 1:
            raise DomainError(f'q must be an integer >= 1, got {self.q}', q=self.q)

    @property
    def s(self):
        return (self.q - 1) / 2.0


@dataclass(frozen=True)
class ConstantValue:
    value: float
    valid: bool = True
    domain_note: str = ''

    @classmethod
    def invalid(cls, note):
        return cls(value=math.nan, valid=False, domain_note=note)

    def unwrap(self):
        if not self.valid:
            raise DomainError(self.domain_note)
        return self.value


def c_k(k):
    if not k > -3:
        raise DomainError(f'c_k needs k > -3, got {k}', k=k)
    return 3.0 * (3.0 * math.pi ** 2) ** (k / 3.0) / (k + 3.0)


def K_d(d, k):
    """Semiclassical constant relating <p^k> to W_{1+k/d}."""
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    if not k > -d:
        raise DomainError(f'K_d needs k > -d, got d={d}, k={k}', d=d, k=k)
    return (d / (k + d) * (2.0 * math.pi) ** k
            * math.gamma(1.0 + d / 2.0) ** (k / d) / math.pi ** (k / 2.0))


def daubechies_tail(a):
    """The integral over [a, inf) of exp(-u) (u - a) / u, i.e. exp(-a) - a E1(a)."""
    return math.exp(-a) - a * mathcore.exp1(a)


def B_daubechies(d, k):
    """Rigour factor B(d,k) multiplying K_d(k).

    Depends on d and k only through d/k. The infimum over a > 0 is taken in
    t = ln a on the logarithm of the objective.
    """
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    if not k > 0:
        raise DomainError(f'B(d,k) needs k > 0, got {k}', k=k)
    ratio = d / k

    def objective(t):
        tail = daubechies_tail(math.exp(t))
        if not tail > 0:
            return math.inf
        return -ratio * t - math.log(tail)

    start = math.log(ratio)
    result = mathcore.minimize_scalar(objective, (start - 1.0, start))
    value = math.exp(-(mathcore.log_gamma(ratio) + result.min_value) / ratio)
    logger.debug('B(%s,%s) = %.12g at a = %.10g', d, k, value,
                 math.exp(result.argmin))
    return value


def K_prime(d, k):
    return K_d(d, k) * B_daubechies(d, k)


def heisenberg_exponent(d, alpha, k):
    """N-exponent 1 + k(1/alpha + 1/d) shared by the Heisenberg-like relations."""
    return 1.0 + k * (1.0 / alpha + 1.0 / d)


def heisenberg_exponent_fraction(d, alpha, k):
    return 1 + Fraction(k) * (Fraction(1, alpha) + Fraction(1, d))


def _check_positive_family(d, alpha, k):
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    if not alpha > 0:
        raise DomainError(f'alpha must be positive, got {alpha}', alpha=alpha)
    if not k > 0:
        raise DomainError(f'k must be positive, got {k}', k=k)


def F_const(d, alpha, k):
    """Lower-bound coefficient of W_{1+k/d} in terms of <r^alpha> and N."""
    _check_positive_family(d, alpha, k)
    m = 1.0 + k / d
    x = m * alpha + k
    log_f = (m * math.log(m)
             + (1.0 + 2.0 * k / d) * math.log(alpha)
             - (k / d) * math.log(mathcore.omega(d)
                                  * mathcore.beta(d / alpha, 2.0 + d / k))
             + (k * math.log(k) - x * math.log(x)) / alpha)
    return math.exp(log_f)


def F_script_coefficient(d, alpha, k):
    return K_d(d, k) * F_const(d, alpha, k)


def F_script(d, alpha, k, N=1.0, q=2):
    """Right-hand side of the generalized Heisenberg-like relation."""
    cfg = SystemConfig(d=d, N=N, q=q)
    return (F_script_coefficient(d, alpha, k) * cfg.q ** (-k / d)
            * cfg.N ** heisenberg_exponent(d, alpha, k))


def negative_order_window(d, k):
    """Lower end of the alpha window for the negative-order relation."""
    return -k * d / (d + k)


def check_negative_order_params(d, alpha, k):
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    if not (-d < k < 0):
        raise DomainError(
            f'negative-order relation needs -d < k < 0, got k={k}', d=d, k=k)
    low = negative_order_window(d, k)
    if not alpha > low:
        raise DomainError(
            f'alpha={alpha} is outside the window alpha > {low:.6g} '
            f'for d={d}, k={k}', d=d, alpha=alpha, k=k)


def G_closed_form(d, alpha, k):
    """Printed closed form of G_d(alpha, k), k < 0 the momentum order.

    Returns a flagged-invalid value when any factor is not real-evaluable.
    """
    depth = alpha + alpha * k / d + k
    beta_arg = -1.0 - d * (k + alpha) / (k * alpha)
    if not (k < 0 and alpha > 0 and depth > 0 and beta_arg > 0 and k > -d):
        return ConstantValue.invalid(
            f'closed form not real-evaluable at d={d}, alpha={alpha}, k={k}: '
            f'beta argument {beta_arg:.6g}, base {depth:.6g}')
    log_g = ((1.0 + 2.0 * k / d) * math.log(alpha)
             + (k / alpha) * math.log(-k)
             - (k * (1.0 / alpha + 1.0 / d) + 1.0) * math.log(depth)
             + (k / d + 1.0) * math.log(k / d + 1.0)
             - (k / d) * math.log(mathcore.omega(d)
                                  * mathcore.beta(beta_arg, d / alpha)))
    return ConstantValue(value=math.exp(log_g))


def G_script(d, alpha, k, N=1.0, q=2):
    """Right-hand side of the negative-order relation as a ConstantValue.

    The coefficient comes from the numerically reconstructed maximiser;
    the closed form is compared against it in ``domain_note``.
    """
    from .varoracle import extremal_G

    cfg = SystemConfig(d=d, N=N, q=q)
    check_negative_order_params(d, alpha, k)
    extremal = extremal_G(d, alpha, k)
    coefficient = K_d(d, k) * extremal.numeric_value
    value = (coefficient * cfg.q ** (-k / d)
             * cfg.N ** heisenberg_exponent(d, alpha, k))
    note = f'numeric maximiser; closed form differs by {extremal.discrepancy:.3g}'
    return ConstantValue(value=value, domain_note=note)


def C_zumbach(d):
    if not 1 <= d <= 5:
        raise DomainError(f'Zumbach constant defined for 1 <= d <= 5, got {d}', d=d)
    return ((4.0 * math.pi) ** 2 * 5.0 * d ** 2 / (d + 2.0)
            * (2.0 / (d + 2.0)) ** (2.0 / d))


def A2(d):
    """Coefficient of the d-dimensional Heisenberg product at alpha = k = 2."""
    if d < 1:
        raise DomainError(f'd must be >= 1, got {d}', d=d)
    return (d / (d + 1.0) * math.gamma(d + 1.0) ** (1.0 / d)) ** 2


def zumbach_factor(d, N, q):
    """1 + C_d (N/q)^(2/d)."""
    return 1.0 + C_zumbach(d) * (N / q) ** (2.0 / d)


def d3_large_N_coefficient():
    return 5.0 / (3072.0 * math.pi ** 4) * (5.0 / 3.0) ** (1.0 / 3.0)


def _require(condition, variant, cfg, what):
    if not condition:
        raise DomainError(
            f'fisher variant {variant!r} needs {what}, got d={cfg.d}, q={cfg.q}',
            variant=variant, d=cfg.d, q=cfg.q)


def fisher_rhs(variant, cfg):
    """Lower bound on I_d[rho] I_d[gamma] in terms of N, q and d."""
    if variant not in FISHER_VARIANTS:
        raise DomainError(f'unknown fisher variant {variant!r}', variant=variant)
    d, N, q = cfg.d, cfg.N, cfg.q
    a2 = A2(d)
    if variant == 'general':
        return (4.0 * a2 * N ** (2.0 / d + 2.0) * q ** (-2.0 / d)
                / zumbach_factor(d, N, q) ** 2)
    if variant == 'large_N_fermion':
        return (N ** (2.0 - 2.0 / d) * q ** (2.0 / d)
                * (d + 2.0) ** (4.0 / d + 2.0)
                / (25.0 * math.pi ** 4 * 4.0 ** (2.0 / d + 3.0) * d ** 4) * a2)
    _require(q == 2, variant, cfg, 'q = 2')
    if variant == 'electronic':
        denominator = 1.0 + N ** (2.0 / d) * 80.0 * math.pi ** 2 * d ** 2 \
            * (d + 2.0) ** (-(d + 2.0) / d)
        return N ** (2.0 / d + 2.0) * 2.0 ** (2.0 - 2.0 / d) / denominator ** 2 * a2
    if variant == 'large_N_electron':
        return (N ** (2.0 - 2.0 / d) * (d + 2.0) ** (4.0 / d + 2.0)
                / (25.0 * math.pi ** 4 * 4.0 ** (1.0 / d + 3.0) * d ** 4) * a2)
    _require(d == 3, variant, cfg, 'd = 3')
    if variant == 'd3_electron':
        denominator = N ** (2.0 / 3.0) * 144.0 * math.pi ** 2 / 5.0 ** (2.0 / 3.0) + 1.0
        return N ** (8.0 / 3.0) / denominator ** 2 * 3.0 ** (8.0 / 3.0) / 4.0
    return N ** (4.0 / 3.0) * d3_large_N_coefficient()


# Daubechies factors as printed, keyed by (d, k).
TABLE1_PRINTED = {
    (1, 1): 0.165728, (2, 1): 0.405724, (3, 1): 0.537513, (4, 1): 0.618094,
    (1, 2): 0.021331, (2, 2): 0.165728, (3, 2): 0.303977, (4, 2): 0.405724,
    (1, 3): 0.002056, (2, 3): 0.061935, (3, 3): 0.165728, (4, 3): 0.262190,
    (1, 4): 0.000158, (2, 4): 0.021331, (3, 4): 0.086812, (4, 4): 0.165728,
}


def _gamma_ratio(a, b):
    return math.gamma(a) / math.gamma(b)


def _table2_closed_forms():
    pi = math.pi
    return {
        (1, 1): 9 / 49 * (45 * pi) ** (1 / 3),
        (1, 2): 243 / 5324 * (35 * pi) ** (2 / 3),
        (1, 3): 243 / 625 * pi,
        (1, 4): 841995 / 39617584 * (3465 * pi ** 4) ** (1 / 3),
        (2, 1): 9 / 22 * math.sqrt(3 / 11) * (35 * pi) ** (1 / 3),
        (2, 2): 9 / 16 * 3 ** (2 / 3),
        (2, 3): 135 / 196 * math.sqrt(3 / 7) * pi,
        (2, 4): (2268 / 28561 * (21 / 13 * pi ** 2) ** (1 / 3)
                 * _gamma_ratio(17 / 4, 11 / 4) ** (4 / 3)),
        (3, 1): 3 / 5 * (9 / 5 * pi) ** (1 / 3),
        (3, 2): 3 * (45 * pi / (196 * math.sqrt(7))) ** (2 / 3),
        (3, 3): pi / 2,
        (3, 4): 189 / 484 * (63 / 44 * pi ** 4) ** (1 / 3),
        (4, 1): 3 / 38 * (3 / 19) ** (1 / 4) * (3465 * pi) ** (1 / 3),
        (4, 2): (24 * math.sqrt(3) / 169 * (4 * pi / math.sqrt(13)) ** (1 / 3)
                 * _gamma_ratio(17 / 4, 3 / 4) ** (2 / 3)),
        (4, 3): 21 / 4 * (3 / 11) ** (7 / 4) * pi,
        (4, 4): (567 / 3200 * (63 / 2) ** (1 / 3) * pi ** 2
                 / (math.gamma(3 / 4) * math.gamma(11 / 4)) ** (4 / 3)),
    }


# Printed N-exponents of the three-dimensional electronic table, keyed by
# (alpha, k).
TABLE2_PRINTED_EXPONENTS = {
    (1, 1): Fraction(7, 3), (1, 2): Fraction(11, 3), (1, 3): Fraction(5),
    (1, 4): Fraction(19, 3),
    (2, 1): Fraction(11, 6), (2, 2): Fraction(8, 3), (2, 3): Fraction(7, 2),
    (2, 4): Fraction(13, 3),
    (3, 1): Fraction(5, 3), (3, 2): Fraction(7, 3), (3, 3): Fraction(3),
    (3, 4): Fraction(11, 3),
    (4, 1): Fraction(19, 12), (4, 2): Fraction(13, 16), (4, 3): Fraction(11, 4),
    (4, 4): Fraction(10, 3),
}

# Cells whose printed coefficient differs from the generalized relation;
# the closed forms above carry the corrected power.
TABLE2_PRINTED_COEFFICIENT_NOTES = {
    (2, 4): 'printed Gamma(17/4)/Gamma(11/4) to the power 1; '
            'the generalized relation gives 4/3',
}


def table2_closed_form(alpha, k):
    try:
        return _table2_closed_forms()[(alpha, k)]
    except KeyError:
        raise DomainError(f'no printed cell for alpha={alpha}, k={k}') from None


def table2_coefficient(alpha, k):
    """d = 3, q = 2 coefficient F(3,alpha,k) 2^(-k/3) of the generalized relation."""
    return F_script(3, alpha, k, N=1.0, q=2)


EVALUATORS = {
    'c_k': lambda p: c_k(p['k']),
    'K_d': lambda p: K_d(p['d'], p['k']),
    'B': lambda p: B_daubechies(p['d'], p['k']),
    'K_prime': lambda p: K_prime(p['d'], p['k']),
    'F': lambda p: F_const(p['d'], p['alpha'], p['k']),
    'F_script': lambda p: F_script(p['d'], p['alpha'], p['k'], p['N'], p['q']),
    'G_closed': lambda p: G_closed_form(p['d'], p['alpha'], p['k']),
    'G_script': lambda p: G_script(p['d'], p['alpha'], p['k'], p['N'], p['q']),
    'C_d': lambda p: C_zumbach(p['d']),
    'A2': lambda p: A2(p['d']),
}
EVALUATORS.update({
    f'fisher_rhs:{variant}': (
        lambda p, variant=variant: fisher_rhs(
            variant, SystemConfig(d=p['d'], N=p['N'], q=p['q'])))
    for variant in FISHER_VARIANTS
})


def evaluate(name, strict=False, **params):
    """Evaluate the constant ``name`` as a :class:`ConstantValue`.

    With ``strict=False`` (batch use) a domain or convergence failure becomes
    a flagged-invalid value instead of an exception. Float overflow counts as
    a convergence failure.
    """
    if name not in EVALUATORS:
        raise DomainError(f'unknown constant {name!r}', name=name)
    defaults = {'N': 1.0, 'q': 2}
    defaults.update(params)
    try:
        try:
            result = EVALUATORS[name](defaults)
        except (OverflowError, ZeroDivisionError) as exc:
            raise ConvergenceError(f'{name} not representable as a float: {exc}',
                                   name=name) from exc
        if not isinstance(result, ConstantValue) and not math.isfinite(result):
            raise ConvergenceError(f'{name} evaluates to {result}', name=name)
    except UncrelError as exc:
        if strict:
            raise
        return ConstantValue.invalid(exc.message)
    except KeyError as exc:
        raise DomainError(f'constant {name!r} needs parameter {exc}') from None
    if isinstance(result, ConstantValue):
        if strict and not result.valid:
            raise DomainError(result.domain_note)
        return result
    return ConstantValue(value=result)
