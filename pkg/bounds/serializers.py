import math

from rest_framework import serializers

from . import constants, densities, inequalities
from .exceptions import DomainError, FormatError

MODELS = ('gaussian', 'hydrogenic', 'exponential', 'ho1d')
FORMATS = ('csv', 'json')

# Validation codes that mean "well-formed but outside the domain".
DOMAIN_CODES = {'domain', 'min_value', 'max_value'}


def _walk_codes(codes):
    if isinstance(codes, dict):
        for value in codes.values():
            yield from _walk_codes(value)
    elif isinstance(codes, (list, tuple)):
        for value in codes:
            yield from _walk_codes(value)
    else:
        yield codes


def _flatten(errors):
    parts = []
    for key, value in errors.items():
        messages = value if isinstance(value, (list, tuple)) else [value]
        parts.append(f'{key}: ' + '; '.join(str(m) for m in messages))
    return ', '.join(parts)


def validated(serializer):
    """Validated data of ``serializer`` or the matching UncrelError.

    Field errors coded as domain violations become DomainError, everything
    else FormatError.
    """
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as exc:
        codes = set(_walk_codes(exc.get_codes()))
        message = _flatten(serializer.errors)
        if codes and codes <= DOMAIN_CODES:
            raise DomainError(message) from None
        raise FormatError(message) from None
    return serializer.validated_data


class BoundsSerializer(serializers.Serializer):
    """Input-only serializer; ``save()`` builds the library object."""

    def update(self, instance, validated_data):
        raise NotImplementedError('input serializers are not updatable')


def _positive(value, name):
    if value is not None and not value > 0:
        raise serializers.ValidationError(f'{name} must be positive.', code='domain')
    return value


class SystemConfigSerializer(BoundsSerializer):
    """Dimension, particle count and spin multiplicity."""
    d = serializers.IntegerField(min_value=1)
    N = serializers.FloatField(default=1.0)
    q = serializers.IntegerField(min_value=1, default=2)

    def validate_N(self, value):
        return _positive(value, 'N')

    def create(self, validated_data):
        return constants.SystemConfig(**validated_data)


class DensitySpecSerializer(BoundsSerializer):
    """A model density pair: ``gaussian``, ``hydrogenic``, ``exponential`` or ``ho1d``."""
    model = serializers.ChoiceField(choices=MODELS)
    d = serializers.IntegerField(min_value=1, default=3)
    a = serializers.FloatField(default=1.0)
    Z = serializers.FloatField(default=1.0)
    lam = serializers.FloatField(default=1.0)
    N = serializers.FloatField(default=1.0)
    q = serializers.IntegerField(min_value=1, default=2)

    def validate_a(self, value):
        return _positive(value, 'a')

    def validate_Z(self, value):
        return _positive(value, 'Z')

    def validate_lam(self, value):
        return _positive(value, 'lam')

    def validate_N(self, value):
        return _positive(value, 'N')

    def validate(self, attrs):
        if attrs['model'] == 'ho1d':
            if attrs['q'] not in (1, 2):
                raise serializers.ValidationError(
                    {'q': 'ho1d needs q = 1 or 2.'}, code='domain')
            if int(attrs['N']) != attrs['N']:
                raise serializers.ValidationError(
                    {'N': 'ho1d needs an integer particle count.'}, code='domain')
        return attrs

    def create(self, validated_data):
        return build_pair(**validated_data)


def build_pair(model, d=3, a=1.0, Z=1.0, lam=1.0, N=1.0, q=2):
    if model == 'gaussian':
        return densities.gaussian_pair(d, a, N)
    if model == 'hydrogenic':
        return densities.hydrogenic3d(Z)
    if model == 'exponential':
        return densities.DensityPair(
            position=densities.exponential_radial(d, lam, N),
            label=f'exponential(d={d},lam={lam:g},N={N:g})')
    if model == 'ho1d':
        return densities.harmonic_fermions_1d(int(N), q)
    raise FormatError(f'unknown model {model!r}')


class CheckParamsSerializer(BoundsSerializer):
    """Inequality id with its optional alpha, k and Fisher variant."""
    id = serializers.ChoiceField(choices=sorted(inequalities.CATALOG))
    alpha = serializers.FloatField(required=False, allow_null=True, default=None)
    k = serializers.FloatField(required=False, allow_null=True, default=None)
    variant = serializers.ChoiceField(choices=sorted(inequalities.FISHER_IDS),
                                      required=False, allow_null=True, default=None)

    def validate_alpha(self, value):
        return _positive(value, 'alpha')


class ConstantQuerySerializer(BoundsSerializer):
    """Constant name and the parameters it is evaluated at."""
    name = serializers.ChoiceField(choices=sorted(constants.EVALUATORS))
    d = serializers.IntegerField(min_value=1, default=3)
    alpha = serializers.FloatField(default=2.0)
    k = serializers.FloatField(default=2.0)
    N = serializers.FloatField(default=1.0)
    q = serializers.IntegerField(min_value=1, default=2)


class OracleQuerySerializer(BoundsSerializer):
    """Oracle mode and the (d, alpha, k) point."""
    mode = serializers.ChoiceField(choices=('F', 'G', 'grid'))
    d = serializers.IntegerField(min_value=1, default=3)
    alpha = serializers.FloatField(default=2.0)
    k = serializers.FloatField(default=2.0)

    def validate_alpha(self, value):
        return _positive(value, 'alpha')

    def validate(self, attrs):
        if attrs['mode'] == 'F' and not attrs['k'] > 0:
            raise serializers.ValidationError({'k': 'mode F needs k > 0.'}, code='domain')
        if attrs['mode'] == 'G' and not attrs['k'] < 0:
            raise serializers.ValidationError({'k': 'mode G needs k < 0.'}, code='domain')
        return attrs


class FiniteFloatField(serializers.FloatField):
    """Float output with NaN and infinities rendered as null."""

    def to_representation(self, value):
        if value is None:
            return None
        value = float(value)
        return value if math.isfinite(value) else None


class MomentValueSerializer(serializers.Serializer):
    """One moment row of the moments document."""
    kind = serializers.CharField()
    order = FiniteFloatField()
    value = FiniteFloatField()
    method = serializers.CharField()
    est_error = FiniteFloatField()
    convention = serializers.CharField()


class ConstantValueSerializer(serializers.Serializer):
    """A constant with its validity flag."""
    value = FiniteFloatField()
    valid = serializers.BooleanField()
    domain_note = serializers.CharField()


class ExtremalConstantSerializer(serializers.Serializer):
    """Numeric extremal constant next to its closed form."""
    kind = serializers.CharField()
    d = serializers.IntegerField()
    alpha = FiniteFloatField()
    k = FiniteFloatField()
    numeric_value = FiniteFloatField()
    closed_form_value = FiniteFloatField(allow_null=True)
    discrepancy = FiniteFloatField(allow_null=True)
    valid = serializers.BooleanField()
    note = serializers.CharField()


class BoundReportSerializer(serializers.Serializer):
    """One row of a check or sweep document."""
    id = serializers.CharField()
    direction = serializers.CharField()
    label = serializers.CharField()
    d = serializers.IntegerField(source='config.d', allow_null=True)
    N = FiniteFloatField(source='config.N', allow_null=True)
    q = serializers.IntegerField(source='config.q', allow_null=True)
    alpha = FiniteFloatField(source='inequality.alpha', allow_null=True)
    k = FiniteFloatField(source='inequality.k', allow_null=True)
    variant = serializers.CharField(source='inequality.variant', allow_null=True)
    lhs = FiniteFloatField()
    rhs = FiniteFloatField()
    margin = FiniteFloatField()
    ratio = FiniteFloatField()
    satisfied = serializers.BooleanField()
    rigorous_satisfied = serializers.BooleanField(allow_null=True)
    valid = serializers.BooleanField()
    error = serializers.CharField()
