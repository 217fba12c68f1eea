from nullsolve.apps.graphs.domain.graphs import (
    divisibility_instance, has_divisible_subgraph, is_divisible_subgraph, simple_graphs, threshold
)
from nullsolve.apps.graphs.domain.models import Graph

__all__ = [
    'Graph',
    'divisibility_instance',
    'has_divisible_subgraph',
    'is_divisible_subgraph',
    'simple_graphs',
    'threshold',
]
