from nullsolve.apps.graphs.application.subgraph_service import (
    SUBGRAPH_ENGINES,
    SubgraphService,
    divisible_subgraph,
    f_avoiding_mod,
    f_avoiding_natural,
    get_subgraph_service,
)

__all__ = [
    'SUBGRAPH_ENGINES',
    'SubgraphService',
    'divisible_subgraph',
    'f_avoiding_mod',
    'f_avoiding_natural',
    'get_subgraph_service',
]
