"""Application service for divisible and F-avoiding subgraphs."""
import logging
from typing import Iterable, Mapping, Optional, Tuple

from nullsolve.apps.covering.domain.covering import kappa
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.graphs.domain.cycles import find_even_subgraph
from nullsolve.apps.graphs.domain.graphs import divisibility_instance, is_divisible_subgraph, threshold
from nullsolve.apps.graphs.domain.models import Graph
from nullsolve.apps.olson.application import get_olson_service
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.core.arith import next_prime_above, require_prime
from nullsolve.core.exceptions import (
    EngineUnsupported,
    PreconditionViolated,
    RangeViolation,
    VerificationFailed,
    ZeroInSet,
)

logger = logging.getLogger(__name__)

SUBGRAPH_ENGINES = ("brute", "ppa", "cycle")

Forbidden = Mapping[int, ResidueSet]


class SubgraphService:
    """Finds subgraphs with prescribed degrees by reduction to Olson instances."""

    def divisible_subgraph(self, graph: Graph, d: int, engine: str = "brute") -> Tuple[int, ...]:
        """
        A nonempty edge subset with every degree divisible by 2^d.

        Args:
            graph: The multigraph
            d: Exponent; degrees must vanish mod 2^d
            engine: 'brute', 'ppa' or 'cycle' (d = 1 only)

        Returns:
            Sorted 1-based edge indices
        """
        if engine not in SUBGRAPH_ENGINES:
            raise EngineUnsupported(f"unknown engine '{engine}', expected one of {', '.join(SUBGRAPH_ENGINES)}")
        bound = threshold(graph.n, 2, d)
        if graph.size <= bound:
            raise PreconditionViolated(f"{graph.size} edges do not exceed f({graph.n}, 2^{d}) = {bound}")

        if engine == "cycle":
            if d != 1:
                raise EngineUnsupported("the cycle engine only finds 2-divisible subgraphs")
            subset = find_even_subgraph(graph)
        else:
            subset = get_olson_service().solve_even_sum(divisibility_instance(graph, 2, d), engine)

        if not is_divisible_subgraph(graph, subset, 2 ** d):
            raise VerificationFailed(f"edges {subset} do not have all degrees divisible by {2 ** d}")
        logger.info(f"{2 ** d}-divisible subgraph with {len(subset)} of {graph.size} edges")
        return subset

    def f_avoiding_mod(
            self,
            graph: Graph,
            forbidden: Forbidden,
            p: int,
            d: int,
            engine: str = "brute"
    ) -> Tuple[int, ...]:
        """
        A nonempty edge subset whose degree at v, mod p^d, avoids F(v).

        Vertices missing from ``forbidden`` have no constraint.
        """
        require_prime(p)
        sets = self._residue_sets(graph, forbidden, p, d)
        total = sum(kappa(f) for f in sets)
        if total >= graph.size:
            raise PreconditionViolated(f"sum of kappa(F(v)) = {total} is not below |E| = {graph.size}")

        inst = OlsonInstance(
            p, (d,) * graph.n, graph.incidence_matrix(), tuple(f.complement() for f in sets), graph.size
        )
        subset = get_olson_service().solve_olson(inst, engine)

        degrees = graph.degrees(subset)
        bad = [v for v, f in enumerate(sets, start=1) if degrees[v] % f.modulus in f.elems]
        if bad:
            raise VerificationFailed(f"vertex {bad[0]} has forbidden degree {degrees[bad[0]]}")
        return subset

    def f_avoiding_natural(
            self,
            graph: Graph,
            forbidden: Mapping[int, Iterable[int]],
            engine: str = "brute"
    ) -> Tuple[int, ...]:
        """
        A nonempty edge subset whose natural degree at v avoids F(v).

        Works modulo the smallest prime above the maximum degree, where every
        degree is its own residue. Forbidden values above the maximum degree
        can never occur and are dropped.
        """
        values = {v: frozenset(int(x) for x in f) for v, f in forbidden.items()}
        for v, f in values.items():
            if 0 in f:
                raise ZeroInSet(f"F({v}) contains 0")
            if any(x < 0 for x in f):
                raise RangeViolation(f"F({v}) has negative values")
        total = sum(len(f) for f in values.values())
        if total >= graph.size:
            raise PreconditionViolated(f"sum of |F(v)| = {total} is not below |E| = {graph.size}")

        top = graph.max_degree
        p = next_prime_above(top)
        mapped = {v: ResidueSet(p, 1, frozenset(x for x in f if x <= top)) for v, f in values.items()}
        logger.info(f"F-avoiding subgraph with degrees below {top + 1}, working mod {p}")
        subset = self.f_avoiding_mod(graph, mapped, p, 1, engine)

        degrees = graph.degrees(subset)
        bad = [v for v, f in values.items() if degrees.get(v, 0) in f]
        if bad:
            raise VerificationFailed(f"vertex {bad[0]} has forbidden degree {degrees[bad[0]]}")
        return subset

    @staticmethod
    def _residue_sets(graph: Graph, forbidden: Forbidden, p: int, d: int) -> Tuple[ResidueSet, ...]:
        extra = sorted(v for v in forbidden if not 1 <= v <= graph.n)
        if extra:
            raise RangeViolation(f"forbidden sets given for vertices {extra} outside 1..{graph.n}")
        sets = []
        for v in range(1, graph.n + 1):
            f = forbidden.get(v, ResidueSet(p, d, frozenset()))
            if (f.p, f.d) != (p, d):
                raise RangeViolation(f"F({v}) is mod {f.p}^{f.d}, expected {p}^{d}")
            if 0 in f.elems:
                raise ZeroInSet(f"F({v}) contains 0")
            sets.append(f)
        return tuple(sets)


# Singleton instance for application-wide use
_subgraph_service: Optional[SubgraphService] = None


def get_subgraph_service() -> SubgraphService:
    """Get or create the subgraph service singleton."""
    global _subgraph_service
    if _subgraph_service is None:
        _subgraph_service = SubgraphService()
    return _subgraph_service


def divisible_subgraph(graph: Graph, d: int, engine: str = "brute") -> Tuple[int, ...]:
    return get_subgraph_service().divisible_subgraph(graph, d, engine)


def f_avoiding_mod(graph: Graph, forbidden: Forbidden, p: int, d: int, engine: str = "brute") -> Tuple[int, ...]:
    return get_subgraph_service().f_avoiding_mod(graph, forbidden, p, d, engine)


def f_avoiding_natural(graph: Graph, forbidden: Mapping[int, Iterable[int]], engine: str = "brute") -> Tuple[int, ...]:
    return get_subgraph_service().f_avoiding_natural(graph, forbidden, engine)
