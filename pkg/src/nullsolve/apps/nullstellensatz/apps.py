from django.apps import AppConfig


class NullstellensatzConfig(AppConfig):
    name = 'nullsolve.apps.nullstellensatz'
    label = 'nullstellensatz'
