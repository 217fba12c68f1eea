from django.apps import AppConfig


class PpaConfig(AppConfig):
    name = 'nullsolve.apps.ppa'
    label = 'ppa'
