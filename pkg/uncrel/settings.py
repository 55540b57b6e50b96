"""
Django settings for the uncrel project.

Numerical configuration for the bounds app lives in the ``UNCREL`` dict at
the bottom of this file. ``UNCREL_TOL`` in the environment overrides the
quadrature relative tolerance.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'UNCREL_SECRET_KEY',
    'uncrel-local-only-key-f3c9a1d07e5b42c8a6e0b7d19c4f2e85',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('UNCREL_DEBUG', '0') == '1'

ALLOWED_HOSTS = ['127.0.0.1', 'localhost', 'testserver']


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.staticfiles',
    'rest_framework',
    'drf_yasg',
    'bounds',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'uncrel.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'uncrel.wsgi.application'


# Database
# Nothing is persisted; the default connection only satisfies the auth and
# contenttypes apps that rest_framework imports.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Static files (swagger / redoc assets)

STATIC_URL = '/static/'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        }
    },
    'loggers': {
        'bounds': {
            'handlers': ['console'],
            'level': os.environ.get('UNCREL_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    }
}

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}

SWAGGER_SETTINGS = {
    'SECURITY_DEFINITIONS': {},
    'USE_SESSION_AUTH': False,
}

UNCREL = {
    'QUADRATURE': {
        'REL_TOL': float(os.environ.get('UNCREL_TOL', '1e-10')),
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
