"""Multigraph model."""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from nullsolve.core.exceptions import RangeViolation

EdgePair = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Vertices 1..n and a list of edges; parallel edges are allowed, loops are not.

    Edges are referred to by their 1-based position in ``edges``.
    """

    n: int
    edges: Tuple[EdgePair, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise RangeViolation(f"vertex count must be nonnegative, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for k, (u, v) in enumerate(edges, start=1):
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise RangeViolation(f"edge {k} = ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise RangeViolation(f"edge {k} is a loop at vertex {u}")
        object.__setattr__(self, "edges", edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge(self, k: int) -> EdgePair:
        """Edge k, 1-based."""
        return self.edges[k - 1]

    def degrees(self, subset: Optional[Iterable[int]] = None) -> Dict[int, int]:
        """Degree of every vertex in the subgraph spanned by the given edge indices."""
        indices = range(1, self.size + 1) if subset is None else subset
        counts = Counter()
        for k in indices:
            u, v = self.edge(k)
            counts[u] += 1
            counts[v] += 1
        return {v: counts[v] for v in range(1, self.n + 1)}

    @property
    def max_degree(self) -> int:
        return max(self.degrees().values(), default=0)

    def incidence_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """n x |E| 0/1 matrix; every column sums to 2."""
        return tuple(
            tuple(1 if v in edge else 0 for edge in self.edges)
            for v in range(1, self.n + 1)
        )
