"""Thresholds and exhaustive oracles for divisible subgraphs."""
import logging
from itertools import combinations
from typing import Iterator, Sequence

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.graphs.domain.models import Graph
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.apps.olson.engines.brute import BruteForceEngine
from nullsolve.core.arith import require_prime
from nullsolve.core.exceptions import NoSolution, RangeViolation

logger = logging.getLogger(__name__)


def threshold(n: int, p: int, d: int) -> int:
    """
    f(n, p^d): more edges than this force a nonempty subgraph with every
    degree divisible by p^d.
    """
    require_prime(p)
    if n < 1 or d < 1:
        raise RangeViolation(f"need n >= 1 and d >= 1, got n = {n}, d = {d}")
    if p == 2:
        return (2 ** d - 1) * n - 2 ** (d - 1)
    return (p ** d - 1) * n


def divisibility_instance(graph: Graph, p: int, d: int) -> OlsonInstance:
    """Rows are vertices, columns are edges, every target set is {0} mod p^d."""
    zero = ResidueSet(p, d, frozenset({0}))
    return OlsonInstance(p, (d,) * graph.n, graph.incidence_matrix(), (zero,) * graph.n, graph.size)


def is_divisible_subgraph(graph: Graph, subset: Sequence[int], modulus: int) -> bool:
    if not subset or len(set(subset)) != len(subset):
        return False
    if any(not 1 <= k <= graph.size for k in subset):
        return False
    return all(deg % modulus == 0 for deg in graph.degrees(subset).values())


def has_divisible_subgraph(graph: Graph, d: int, p: int = 2) -> bool:
    """Exhaustive check for a nonempty subgraph with all degrees divisible by p^d."""
    if graph.size == 0:
        return False
    try:
        BruteForceEngine().solve(divisibility_instance(graph, p, d))
    except NoSolution:
        return False
    return True


def simple_graphs(n: int, m: int) -> Iterator[Graph]:
    """Every simple graph on vertices 1..n with m edges, edges in lexicographic order."""
    pairs = list(combinations(range(1, n + 1), 2))
    for chosen in combinations(pairs, m):
        yield Graph(n, chosen)
