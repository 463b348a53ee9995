"""
Django settings for lrc_bounds_tool project.

Generated by 'django-admin startproject' using Django 5.0.6.

The project has no database models and no HTTP surface, everything runs through
management commands. For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = "change-me"

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

LOCAL_APPS = [
    "gf.apps.GfConfig",
    "matgf.apps.MatgfConfig",
    "linearcode.apps.LinearcodeConfig",
    "locality.apps.LocalityConfig",
    "bounds.apps.BoundsConfig",
    "construct.apps.ConstructConfig",
    "cli.apps.CliConfig",
]

THIRDPARTY_APPS = [
    "rest_framework",
]

INSTALLED_APPS = LOCAL_APPS + THIRDPARTY_APPS

# Nothing is persisted: no DATABASES, no auth or contenttypes apps.

# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging
# https://docs.djangoproject.com/en/5.0/topics/logging/

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": "INFO", "propagate": False}
        for app in ["gf", "matgf", "linearcode", "locality", "bounds", "construct", "cli"]
    },
}

# Django REST Framework
# Only the serializers, renderers and parsers are used.
REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}

# XXHASH
XXHASH_SEED = 42

#################################
# LRC Bounds Tool Configurations #
#################################

# Distance oracles guards. The codewords method enumerates q^k messages, the
# lemma1 method enumerates subsets of the n coordinates and the columns
# method enumerates column subsets of the parity-check matrix.
CODEWORD_ENUMERATION_LIMIT = 2**24
SUBSET_RANK_MAX_LENGTH = 24
COLUMN_SUBSET_LIMIT = 10**7

# Number of candidate repair sets, C(n, r+delta-1), scanned by the exhaustive
# repair set enumeration
REPAIR_SET_ENUMERATION_LIMIT = 10**7

# Above this number of t-subsets the overlap search switches to the padded
# family averaging scan
OVERLAP_EXHAUSTIVE_LIMIT = 10**6

# t-wise independence verification: exhaustive up to this many subsets, random
# spot checks above it
INDEPENDENCE_EXHAUSTIVE_LIMIT = 10**7
INDEPENDENCE_SPOT_CHECKS = 10**5

# Largest family whose overlap breaking orders are all explored
BREAK_ORDER_MAX_FAMILY = 6

# Seed for the randomized paths when none is given
DEFAULT_RANDOM_SEED = 0
