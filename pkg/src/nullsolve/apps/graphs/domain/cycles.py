"""Even subgraphs through cycles: d = 1 needs only one cycle of the multigraph."""
import logging
from typing import Tuple

import networkx as nx

from nullsolve.apps.graphs.domain.models import Graph
from nullsolve.core.exceptions import NoSolution

logger = logging.getLogger(__name__)


def find_even_subgraph(graph: Graph) -> Tuple[int, ...]:
    """
    Edge indices of a cycle; every vertex on it has degree 2.

    A pair of parallel edges counts as a cycle of length two. Raises
    NoSolution when the graph is a forest.
    """
    first = {}
    for k, (u, v) in enumerate(graph.edges, start=1):
        key = (min(u, v), max(u, v))
        if key in first:
            return first[key], k
        first[key] = k

    simple = nx.Graph()
    simple.add_nodes_from(range(1, graph.n + 1))
    for (u, v), k in first.items():
        simple.add_edge(u, v, index=k)
    try:
        cycle = nx.find_cycle(simple)
    except nx.NetworkXNoCycle:
        raise NoSolution(f"the graph is a forest ({graph.size} edges on {graph.n} vertices)")
    subset = tuple(sorted(simple.edges[u, v]["index"] for u, v in cycle))
    logger.debug(f"Cycle of length {len(subset)}")
    return subset
