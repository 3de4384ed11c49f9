"""
Django settings for the symstack project.

The project has no database and no web surface: Django provides the
management-command CLI, logging configuration, and django-constance defaults.
"""

import os
from pathlib import Path

from django.core.management.utils import get_random_secret_key

BASE_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = BASE_DIR.parent.parent

SECRET_KEY = os.getenv("SECRET_KEY") or get_random_secret_key()

_django_debug_env = os.environ.get("DJANGO_DEBUG")
if _django_debug_env is not None:
    DEBUG = _django_debug_env.lower() in ["true", "1", "t", "yes", "y"]
else:
    DEBUG = False

ALLOWED_HOSTS = []

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "symstack_formatter": {
            "format": "[{asctime}] {levelname} [{name}] {message}",
            "datefmt": "%Y-%m-%d %H:%M:%S",
            "style": "{",
        },
    },
    "handlers": {
        "symstack_handler": {
            "class": "logging.StreamHandler",
            "formatter": "symstack_formatter",
        },
    },
    "loggers": {
        "root": {
            "handlers": ["symstack_handler"],
            "level": "WARNING",
        },
        "django": {
            "handlers": ["symstack_handler"],
            "level": "INFO",
            "propagate": False,
        },
        "symstack": {
            "handlers": ["symstack_handler"],
            "level": os.environ.get("SYMSTACK_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}

# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "constance",
    "symstack",
]

CONSTANCE_BACKEND = "constance.backends.memory.MemoryBackend"

CONSTANCE_CONFIG = {
    "DEFAULT_MAX_N": (
        6,
        "Series truncation N used by the CLI when --max-n is not given",
        int,
    ),
    "VERIFY_MAX_N": (
        4,
        "Largest n exercised by the verify suites",
        int,
    ),
    "PRESET_OMEGA_WINDOW": (
        12,
        "Projective-space presets store the tables of ω^m for |m| <= PRESET_OMEGA_WINDOW "
        "and compute the rest on demand",
        int,
    ),
    "ORACLE_MAX_N": (
        6,
        "Largest symmetric power the brute-force enumeration accepts",
        int,
    ),
    "ORACLE_MAX_GENERATORS": (
        12,
        "Largest signed basis the brute-force enumeration accepts",
        int,
    ),
    "ORACLE_MAX_GROUP_ORDER": (
        720,
        "Largest group the trace-averaging oracle accepts",
        int,
    ),
    "ORACLE_MAX_BASIS": (
        100000,
        "Largest number of fixed-monomial classes the trace-averaging oracle enumerates per group element",
        int,
    ),
    "ORACLE_MAX_INERTIA_N": (
        5,
        "Largest n for the brute-force inertia sum",
        int,
    ),
    "ORACLE_RANDOM_CASES": (
        200,
        "Number of randomized instances in the symmetric-power oracle suite",
        int,
    ),
    "ORACLE_RANDOM_SEED": (
        0,
        "Seed of the randomized oracle suite",
        int,
    ),
}

DATABASES = {}

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}
