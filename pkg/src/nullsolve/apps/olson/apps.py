from django.apps import AppConfig


class OlsonConfig(AppConfig):
    name = 'nullsolve.apps.olson'
    label = 'olson'
