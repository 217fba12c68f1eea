"""Brute-force degree census of the End-of-the-Line graph."""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from nullsolve.apps.configuration import services as config
from nullsolve.apps.ppa.domain.models import LEAF, GeneralFormPoly, PPANode, Term, TermTuple, Vector
from nullsolve.apps.ppa.domain.pairing import all_terms, term_count
from nullsolve.core.exceptions import CapExceeded

logger = logging.getLogger(__name__)


@dataclass
class GraphCensus:
    """Degrees of every node: terms, vectors (indexed by code) and the leaf."""

    m: int
    term_degrees: Dict[TermTuple, int]
    vector_degrees: np.ndarray
    leaf_degree: int

    def degree(self, node: PPANode) -> int:
        if isinstance(node, Term):
            return self.term_degrees.get(node.term, 0)
        if isinstance(node, Vector):
            return int(self.vector_degrees[node.code])
        return self.leaf_degree

    def odd_nodes(self) -> List[PPANode]:
        """Odd-degree nodes: the leaf first, then vectors by code, then terms."""
        nodes: List[PPANode] = []
        if self.leaf_degree % 2:
            nodes.append(LEAF)
        nodes.extend(Vector.from_code(int(c), self.m) for c in np.flatnonzero(self.vector_degrees % 2))
        nodes.extend(Term(t) for t, deg in sorted(self.term_degrees.items()) if deg % 2)
        return nodes


def enumerate_graph(inst: GeneralFormPoly) -> GraphCensus:
    """
    Degree of every node, by listing every term.

    A vector's degree is the number of terms whose monomial it contains,
    computed as a subset-sum transform over the term masks.
    """
    cap = config.get('graph_oracle_max_vars', 12)
    if inst.m > cap:
        raise CapExceeded(f"graph enumeration needs m <= {cap}, got {inst.m}")
    term_cap = config.get('term_enumeration_cap', 1 << 20)
    total = term_count(inst)
    if total > term_cap:
        raise CapExceeded(f"{total} term tuples exceed the cap of {term_cap}")

    full = inst.full
    masks: Counter = Counter()
    term_degrees: Dict[TermTuple, int] = {}
    for t in all_terms(inst):
        mask = inst.term_mask(t)
        masks[mask] += 1
        term_degrees[t] = (1 << (inst.m - mask.bit_count())) + (1 if mask == full else 0)

    degrees = np.zeros(1 << inst.m, dtype=np.int64)
    for mask, count in masks.items():
        degrees[mask] += count
    codes = np.arange(1 << inst.m, dtype=np.int64)
    for j in range(inst.m):
        bit = 1 << j
        has_bit = (codes & bit) != 0
        degrees[has_bit] += degrees[codes[has_bit] ^ bit]

    census = GraphCensus(inst.m, term_degrees, degrees, masks.get(full, 0))
    logger.debug(f"Graph census: {len(term_degrees)} terms, {len(census.odd_nodes())} odd nodes")
    return census
