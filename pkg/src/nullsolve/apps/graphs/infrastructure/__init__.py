from nullsolve.apps.graphs.infrastructure.formats import format_graph, parse_forbidden, parse_graph

__all__ = [
    'format_graph',
    'parse_forbidden',
    'parse_graph',
]
