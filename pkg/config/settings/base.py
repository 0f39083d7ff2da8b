"""
Django base settings for the octahedral census.
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-census-only')

# Application definition - no web surface, management commands only
INSTALLED_APPS = [
    'apps.core',
    'apps.registry',
    'apps.polyhedra',
    'apps.gluing',
    'apps.census',
    'apps.invariants',
    'apps.hypervol',
    'apps.paperverify',
]

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Census bounds: largest polyhedron count per kind
CENSUS_MAX_COUNT = {
    'oct': 3,
    'tet': 8,
}
# Naive enumeration refuses more faces than this
CENSUS_NAIVE_MAX_FACES = 8
# Worker processes; the --jobs flag is the only override
CENSUS_DEFAULT_JOBS = 1
CENSUS_DEFAULT_SEED = 20110

# Volume constants
HYPERVOL_TOLERANCE = 1e-14
HYPERVOL_SERIES_TOLERANCE = 1e-13
VOLUME_DECIMALS = 12

# Transcribed gluings checked against the census
PAPER_FIXTURE_DIR = BASE_DIR / 'apps' / 'paperverify' / 'data'

# Check registry - apps whose checks.py is autodiscovered
PAPER_CHECK_MODULES = [
    'apps.hypervol',
    'apps.paperverify',
    'apps.invariants',
]

CENSUS_LOG_LEVEL = os.environ.get('CENSUS_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': CENSUS_LOG_LEVEL,
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': CENSUS_LOG_LEVEL,
            'propagate': False,
        },
    },
}
