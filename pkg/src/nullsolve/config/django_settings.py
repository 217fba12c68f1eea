import os
from pathlib import Path

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent

# Management commands only; nothing is signed or served
SECRET_KEY = os.environ.get('NULLSOLVE_SECRET_KEY', 'nullsolve-local-commands-only')

DEBUG = False

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'nullsolve.apps.configuration.apps.ConfigurationConfig',
    'nullsolve.apps.covering.apps.CoveringConfig',
    'nullsolve.apps.nullstellensatz.apps.NullstellensatzConfig',
    'nullsolve.apps.olson.apps.OlsonConfig',
    'nullsolve.apps.ppa.apps.PpaConfig',
    'nullsolve.apps.graphs.apps.GraphsConfig',
    'nullsolve.apps.selftest.apps.SelftestConfig',
]

MIDDLEWARE = []

# No persistence: instances come from files, configuration lives in memory
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Logging goes to stderr so the RESULT report on stdout stays byte-stable
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
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'nullsolve': {
            'handlers': ['console'],
            'level': os.environ.get('NULLSOLVE_LOG_LEVEL', 'WARNING').upper(),
            'propagate': False,
        },
    },
}
