"""
Django settings for the ehrhart_lab project.
"""

import os
from pathlib import Path
from typing import Any, Dict, List
from dotenv import load_dotenv
load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    return os.getenv(name, str(default)).strip().lower() in ('1', 'true', 'yes', 'on')


BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = os.getenv('SECRET_KEY', 'insecure-ehrhart-lab-development-key')
DEBUG = _env_bool('DEBUG', False)
ALLOWED_HOSTS: List[str] = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django_celery_results',
    'lattice',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('EHRHART_DB_PATH', str(BASE_DIR / 'db.sqlite3')),
    }
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Computation knobs; commands and tasks pass these down as arguments
EHRHART_THREADS = int(os.getenv('EHRHART_THREADS', '4'))
EHRHART_RANDOM_RETRIES = int(os.getenv('EHRHART_RANDOM_RETRIES', '100'))
EHRHART_REL_TOLERANCE = float(os.getenv('EHRHART_REL_TOLERANCE', '1e-9'))
EHRHART_MP_PRECISION = int(os.getenv('EHRHART_MP_PRECISION', '120'))
EHRHART_LOG_LEVEL = os.getenv('EHRHART_LOG_LEVEL', 'INFO').upper()

LOGGING: Dict[str, Any] = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(asctime)s %(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        # StreamHandler writes to stderr; stdout carries only documents
        'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'},
    },
    'loggers': {
        'lattice': {'handlers': ['console'], 'level': EHRHART_LOG_LEVEL, 'propagate': False},
        'celery': {'handlers': ['console'], 'level': 'WARNING'},
    },
}

# Celery Configuration
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = 'django-db'
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = _env_bool('CELERY_TASK_ALWAYS_EAGER', False)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_WORKER_CONCURRENCY = EHRHART_THREADS
