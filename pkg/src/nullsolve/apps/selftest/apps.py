from django.apps import AppConfig


class SelftestConfig(AppConfig):
    name = 'nullsolve.apps.selftest'
    label = 'selftest'
