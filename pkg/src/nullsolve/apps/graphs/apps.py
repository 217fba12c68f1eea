from django.apps import AppConfig


class GraphsConfig(AppConfig):
    name = 'nullsolve.apps.graphs'
    label = 'graphs'
