"""
The pairing function of the End-of-the-Line graph.

Every node pairs up its incident edges and leaves at most one unmatched.
Terms flip the smallest variable missing from their monomial. Vectors pair
tuples inside a block through the value-1 monomials of one polynomial, and
pair blocks through their omega tuples. The leaf follows the explicit
full-monomial pairing. Within each list the pairing is consecutive in
increasing index order: 1st with 2nd, 3rd with 4th, and so on.
"""
import logging
from itertools import product
from typing import Iterator, List, Optional

from nullsolve.apps.nullstellensatz.domain.models import Monomial
from nullsolve.apps.ppa.domain.models import (
    LEAF, Edge, GeneralFormPoly, PPANode, StandardLeaf, Term, TermTuple, Vector
)
from nullsolve.core.exceptions import InvalidInstance, MalformedNode, NotIncident

logger = logging.getLogger(__name__)


def term_monomial(inst: GeneralFormPoly, t: TermTuple) -> Monomial:
    """Product of the chosen monomials."""
    inst.check_tuple(t)
    return Monomial(inst.term_mask(t))


def _check_node(inst: GeneralFormPoly, node: PPANode) -> None:
    if isinstance(node, Term):
        inst.check_tuple(node.term)
    elif isinstance(node, Vector):
        inst.check_vector(node)
    elif not isinstance(node, StandardLeaf):
        raise MalformedNode(f"{node!r} is not a node")


def is_edge(inst: GeneralFormPoly, u: PPANode, v: PPANode) -> bool:
    _check_node(inst, u)
    _check_node(inst, v)
    if isinstance(v, Term):
        u, v = v, u
    if not isinstance(u, Term) or isinstance(v, Term):
        return False
    mask = inst.term_mask(u.term)
    if isinstance(v, StandardLeaf):
        return mask == inst.full
    return v.code & mask == mask


def _incident(inst: GeneralFormPoly, node: PPANode, edge: Edge) -> None:
    if not isinstance(edge, Edge):
        raise MalformedNode(f"{edge!r} is not an edge")
    try:
        other = edge.other(node)
    except MalformedNode:
        raise NotIncident(f"{edge} is not incident to {node}")
    if not is_edge(inst, node, other):
        raise NotIncident(f"{edge} is not an edge of the instance")


def _value_one_monomials(inst: GeneralFormPoly, i: int, j: int, code: int) -> List[int]:
    """1-based indices of the monomials of p_ij equal to 1 at code, increasing."""
    return [a for a, t in enumerate(inst.poly(i, j), start=1) if code & t.mask == t.mask]


def _partner(items: List[int], item: int) -> int:
    """Consecutive pairing partner; callers never ask for an odd list's last item."""
    return items[items.index(item) ^ 1]


def omega_tuple(inst: GeneralFormPoly, i: int, code: int) -> TermTuple:
    """The tuple of unpaired monomials of a block whose value at code is 1."""
    choices = tuple(_value_one_monomials(inst, i, j, code)[-1] for j in range(1, len(inst.block(i)) + 1))
    return TermTuple(i, choices)


def _mate_at_term(inst: GeneralFormPoly, node: Term, edge: Edge) -> Optional[Edge]:
    t = node.term
    mask = inst.term_mask(t)
    if mask == inst.full:
        # neighbours are exactly 1...1 and w
        if isinstance(edge.end, StandardLeaf):
            return Edge(t, Vector((1,) * inst.m))
        return Edge(t, LEAF)
    missing = next(j for j in range(1, inst.m + 1) if not (mask >> (j - 1)) & 1)
    return Edge(t, edge.end.flip(missing))


def _mate_at_vector(inst: GeneralFormPoly, node: Vector, edge: Edge) -> Optional[Edge]:
    code = node.code
    t = edge.term
    i = t.block
    block_size = len(inst.block(i))

    zero_factor = next(
        (j for j in range(1, block_size + 1) if not inst.poly_value(i, j, code)), None
    )
    if zero_factor is not None:
        ones = _value_one_monomials(inst, i, zero_factor, code)
        return Edge(t.replace(zero_factor, _partner(ones, t.choices[zero_factor - 1])), node)

    omega = omega_tuple(inst, i, code)
    if t != omega:
        j = next(j for j in range(1, block_size + 1) if t.choices[j - 1] != omega.choices[j - 1])
        ones = _value_one_monomials(inst, i, j, code)
        return Edge(t.replace(j, _partner(ones, t.choices[j - 1])), node)

    live_blocks = [b for b in range(1, inst.k + 1) if inst.block_value(b, code)]
    pos = live_blocks.index(i)
    if pos ^ 1 >= len(live_blocks):
        return None
    return Edge(omega_tuple(inst, live_blocks[pos ^ 1], code), node)


def _mate_at_leaf(inst: GeneralFormPoly, edge: Edge) -> Optional[Edge]:
    t = edge.term
    if t == inst.leftover:
        return None
    for a, b in inst.full_pairs:
        if t == a:
            return Edge(b, LEAF)
        if t == b:
            return Edge(a, LEAF)
    raise InvalidInstance(f"full-monomial occurrence {t} is missing from the pairing")


def mate(inst: GeneralFormPoly, node: PPANode, edge: Edge) -> Optional[Edge]:
    """
    The edge paired with ``edge`` at ``node``, or None when ``edge`` is the
    node's unmatched edge.
    """
    _incident(inst, node, edge)
    if isinstance(node, Term):
        return _mate_at_term(inst, node, edge)
    if isinstance(node, Vector):
        return _mate_at_vector(inst, node, edge)
    return _mate_at_leaf(inst, edge)


# --------------------------------------------------------------------------- #
# Enumeration helpers
# --------------------------------------------------------------------------- #

def block_terms(inst: GeneralFormPoly, i: int) -> Iterator[TermTuple]:
    """Every tuple of block i, choices in lexicographic order."""
    ranges = [range(1, len(poly) + 1) for poly in inst.block(i)]
    for choices in product(*ranges):
        yield TermTuple(i, tuple(choices))


def all_terms(inst: GeneralFormPoly) -> Iterator[TermTuple]:
    for i in range(1, inst.k + 1):
        yield from block_terms(inst, i)


def term_count(inst: GeneralFormPoly) -> int:
    total = 0
    for block in inst.blocks:
        size = 1
        for poly in block:
            size *= len(poly)
        total += size
    return total


def incident_edges(inst: GeneralFormPoly, node: PPANode) -> List[Edge]:
    """All edges at node; exponential in m for vectors and terms of low degree."""
    _check_node(inst, node)
    if isinstance(node, Term):
        t = node.term
        mask = inst.term_mask(t)
        free = [j for j in range(inst.m) if not (mask >> j) & 1]
        edges = []
        for sub in range(1 << len(free)):
            code = mask
            for pos, j in enumerate(free):
                if (sub >> pos) & 1:
                    code |= 1 << j
            edges.append(Edge(t, Vector.from_code(code, inst.m)))
        if mask == inst.full:
            edges.append(Edge(t, LEAF))
        return edges
    if isinstance(node, Vector):
        code = node.code
        edges = []
        for i in range(1, inst.k + 1):
            ranges = [
                _value_one_monomials(inst, i, j, code) for j in range(1, len(inst.block(i)) + 1)
            ]
            for choices in product(*ranges):
                edges.append(Edge(TermTuple(i, tuple(choices)), node))
        return edges
    return [Edge(t, LEAF) for t in full_occurrences(inst)]


def full_occurrences(inst: GeneralFormPoly) -> List[TermTuple]:
    """Term tuples whose monomial is x_1...x_m."""
    out = []
    for i in range(1, inst.k + 1):
        if inst.block_degree(i) < inst.m:
            continue
        out.extend(t for t in block_terms(inst, i) if inst.term_mask(t) == inst.full)
    return out
