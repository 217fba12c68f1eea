from nullsolve.apps.olson.application.olson_service import OlsonService, get_olson_service, solve_olson

__all__ = [
    'OlsonService',
    'get_olson_service',
    'solve_olson',
]
