"""
General-form polynomials over F_2 and the nodes of their End-of-the-Line graph.

f = sum over blocks i of prod_j p_ij, each p_ij an explicit list of monomials.
The graph is bipartite: one side holds the term tuples (i, a_i1, ..., a_im_i),
the other the vectors of {0,1}^m plus the standard leaf w. A term meets a
vector x when the product of its chosen monomials is 1 at x, and meets w when
that product is x_1...x_m.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from nullsolve.apps.nullstellensatz.domain.models import Monomial, bits_to_code, code_to_bits, full_mask
from nullsolve.core.exceptions import MalformedNode, RangeViolation

ExplicitPoly = Tuple[Monomial, ...]
Block = Tuple[ExplicitPoly, ...]


@dataclass(frozen=True, order=True)
class TermTuple:
    """Block index i and one monomial choice per polynomial, all 1-based."""

    block: int
    choices: Tuple[int, ...] = ()

    def replace(self, j: int, choice: int) -> "TermTuple":
        """Swap the choice for polynomial j (1-based)."""
        choices = list(self.choices)
        choices[j - 1] = choice
        return TermTuple(self.block, tuple(choices))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in (self.block,) + self.choices) + ")"


@dataclass(frozen=True, order=True)
class Vector:
    bits: Tuple[int, ...]

    @classmethod
    def from_code(cls, code: int, m: int) -> "Vector":
        return cls(code_to_bits(code, m))

    @property
    def code(self) -> int:
        return bits_to_code(self.bits)

    def flip(self, var: int) -> "Vector":
        bits = list(self.bits)
        bits[var - 1] ^= 1
        return Vector(tuple(bits))

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


@dataclass(frozen=True)
class StandardLeaf:
    def __str__(self) -> str:
        return "w"


@dataclass(frozen=True)
class Term:
    term: TermTuple

    def __str__(self) -> str:
        return str(self.term)


PPANode = Union[Vector, Term, StandardLeaf]
LEAF = StandardLeaf()


@dataclass(frozen=True)
class Edge:
    """The edge between a term and a vector or the standard leaf."""

    term: TermTuple
    end: Union[Vector, StandardLeaf]

    def other(self, node: PPANode) -> PPANode:
        if node == Term(self.term):
            return self.end
        if node == self.end:
            return Term(self.term)
        raise MalformedNode(f"{node} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"{render_node(Term(self.term))}-{render_node(self.end)}"


def render_node(node: PPANode) -> str:
    """Trace form: w, t(i,a..), v(s..)."""
    if isinstance(node, StandardLeaf):
        return "w"
    if isinstance(node, Term):
        return f"t{node.term}"
    return f"v{node}"


@dataclass(frozen=True)
class GeneralFormPoly:
    """
    sum over blocks of products of explicit F_2 polynomials, together with a
    pairing of the full-monomial term occurrences that leaves one designated
    occurrence unmatched.
    """

    m: int
    blocks: Tuple[Block, ...]
    full_pairs: Tuple[Tuple[TermTuple, TermTuple], ...] = field(default_factory=tuple)
    leftover: Optional[TermTuple] = None

    def __post_init__(self):
        blocks = tuple(tuple(tuple(poly) for poly in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "full_pairs", tuple(tuple(pair) for pair in self.full_pairs))
        if self.m < 1:
            raise RangeViolation(f"a general-form polynomial needs m >= 1, got {self.m}")
        for i, block in enumerate(blocks, start=1):
            for j, poly in enumerate(block, start=1):
                if any(not t.fits(self.m) for t in poly):
                    raise RangeViolation(f"p_{i}{j} uses a variable beyond x{self.m}")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def full(self) -> int:
        return full_mask(self.m)

    def block(self, i: int) -> Block:
        """Block i, 1-based."""
        return self.blocks[i - 1]

    def poly(self, i: int, j: int) -> ExplicitPoly:
        return self.blocks[i - 1][j - 1]

    def poly_degree(self, i: int, j: int) -> int:
        return max((t.degree for t in self.poly(i, j)), default=0)

    def block_degree(self, i: int) -> int:
        return sum(self.poly_degree(i, j) for j in range(1, len(self.block(i)) + 1))

    def poly_value(self, i: int, j: int, code: int) -> int:
        return sum(t.evaluate(code) for t in self.poly(i, j)) & 1

    def block_value(self, i: int, code: int) -> int:
        for j in range(1, len(self.block(i)) + 1):
            if not self.poly_value(i, j, code):
                return 0
        return 1

    def value(self, code: int) -> int:
        """f(x) over F_2."""
        return sum(self.block_value(i, code) for i in range(1, self.k + 1)) & 1

    def check_tuple(self, t: TermTuple) -> None:
        """Raise MalformedNode unless t indexes existing monomials."""
        if not 1 <= t.block <= self.k:
            raise MalformedNode(f"term {t}: block {t.block} outside 1..{self.k}")
        block = self.block(t.block)
        if len(t.choices) != len(block):
            raise MalformedNode(f"term {t}: block {t.block} has {len(block)} polynomials")
        for j, (a, poly) in enumerate(zip(t.choices, block), start=1):
            if not 1 <= a <= len(poly):
                raise MalformedNode(f"term {t}: p_{t.block}{j} has {len(poly)} monomials")

    def check_vector(self, v: Vector) -> None:
        if len(v.bits) != self.m or any(b not in (0, 1) for b in v.bits):
            raise MalformedNode(f"vector {v} is not in {{0,1}}^{self.m}")

    def term_mask(self, t: TermTuple) -> int:
        mask = 0
        for a, poly in zip(t.choices, self.block(t.block)):
            mask |= poly[a - 1].mask
        return mask
