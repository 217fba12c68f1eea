from django.apps import AppConfig


class CoveringConfig(AppConfig):
    name = 'nullsolve.apps.covering'
    label = 'covering'
