"""Access to the ``UNCREL`` settings dict with library defaults."""
from copy import deepcopy

from django.conf import settings

DEFAULTS = {
    'QUADRATURE': {
        'REL_TOL': 1e-10,
        'ABS_TOL': 1e-14,
        'MAX_REFINEMENTS': 200,
        'TAIL_CUT_SCALES': 40.0,
    },
    'REPORT_TOLERANCE': 1e-9,
    'SIGNIFICANT_DIGITS': 12,
    'FISHER_FLOOR': 1e-300,
    'TABULATED_FISHER_FLOOR': 1e-12,
    'NORMALIZATION_WARNING': 0.01,
    'MIN_TABULATED_SAMPLES': 8,
}


def uncrel_settings():
    """Merged view of ``settings.UNCREL`` over :data:`DEFAULTS`.

    Works without a configured Django project, in which case the defaults
    are returned.
    """
    merged = deepcopy(DEFAULTS)
    if not settings.configured:
        return merged
    overrides = getattr(settings, 'UNCREL', {}) or {}
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key].update(value)
        else:
            merged[key] = value
    return merged


def get(name):
    return uncrel_settings()[name]
