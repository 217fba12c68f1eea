from nullsolve.apps.olson.infrastructure.formats import format_olson, parse_olson

__all__ = [
    'format_olson',
    'parse_olson',
]
