"""
Celery configuration for the ehrhart_lab project.
"""

import os
from celery import Celery
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ehrhart_lab.settings')
app = Celery('ehrhart_lab')
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
