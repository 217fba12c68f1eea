"""
Path trace lines and their replay.

Each line reads ``<k> <node> via <edge> -> <mate>``, with nodes written
``w``, ``t(i,a..)`` or ``v(s..)``, edges ``t(..)-w`` or ``t(..)-v(..)`` and
``*`` for an unmatched edge.
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from nullsolve.apps.ppa.application.path_service import PathStep
from nullsolve.apps.ppa.domain.models import (
    LEAF, Edge, GeneralFormPoly, PPANode, StandardLeaf, Term, TermTuple, Vector, render_node
)
from nullsolve.apps.ppa.domain.pairing import mate
from nullsolve.core.exceptions import MalformedNode, ParseError, VerificationFailed

_NODE = r"w|t\([0-9,]+\)|v\([01,]+\)"
_STEP = re.compile(
    rf"^(?P<k>[0-9]+) (?P<node>{_NODE}) via (?P<edge>t\([0-9,]+\)-(?:{_NODE})) -> (?P<mate>\*|t\([0-9,]+\)-(?:{_NODE}))$"
)


@dataclass(frozen=True)
class TraceLine:
    k: int
    node: PPANode
    edge: Edge
    mate: Optional[Edge]


def _ints(body: str) -> List[int]:
    return [int(x) for x in body.split(",")] if body else []


def parse_node(text: str) -> PPANode:
    if text == "w":
        return LEAF
    if text.startswith("t(") and text.endswith(")"):
        values = _ints(text[2:-1])
        return Term(TermTuple(values[0], tuple(values[1:])))
    if text.startswith("v(") and text.endswith(")"):
        return Vector(tuple(_ints(text[2:-1])))
    raise MalformedNode(f"cannot read node '{text}'")


def parse_edge(text: str) -> Edge:
    cut = text.index(")-") + 1
    term = parse_node(text[:cut])
    end = parse_node(text[cut + 1:])
    if not isinstance(term, Term) or isinstance(end, Term):
        raise MalformedNode(f"cannot read edge '{text}'")
    return Edge(term.term, end)


def format_edge(edge: Optional[Edge]) -> str:
    return "*" if edge is None else str(edge)


def format_step(k: int, step: PathStep) -> str:
    return f"{k} {render_node(step.node)} via {format_edge(step.arrival)} -> {format_edge(step.departure)}"


def parse_step(text: str, number: int = 1) -> TraceLine:
    line = text.strip()
    if line.startswith("TRACE "):
        line = line[len("TRACE "):]
    match = _STEP.match(line)
    if not match:
        raise ParseError("not a trace step", number, 1)
    departure = None if match["mate"] == "*" else parse_edge(match["mate"])
    return TraceLine(int(match["k"]), parse_node(match["node"]), parse_edge(match["edge"]), departure)


def replay_trace(inst: GeneralFormPoly, lines: Iterable[str]) -> int:
    """
    Re-check a dumped path against the pairing function.

    Every step's mate must agree with ``mate`` and every node must be the far
    end of the previous step's mate. Returns the number of edges traversed.
    """
    steps = [parse_step(text, n) for n, text in enumerate(lines, start=1) if text.strip()]
    if not steps:
        raise VerificationFailed("empty trace")
    first = steps[0]
    starts_at_leaf = isinstance(first.node, StandardLeaf) and first.edge == Edge(inst.leftover, LEAF)
    if first.k != 0 or not starts_at_leaf or first.mate is not None:
        raise VerificationFailed("a trace starts at w through its unmatched edge")

    previous = first.edge
    here: PPANode = LEAF
    for expected_k, step in enumerate(steps[1:], start=1):
        if step.k != expected_k:
            raise VerificationFailed(f"step {step.k} out of order, expected {expected_k}")
        here = previous.other(here)
        if step.node != here or step.edge != previous:
            raise VerificationFailed(f"step {step.k} does not continue from {format_edge(previous)}")
        actual = mate(inst, step.node, step.edge)
        if actual != step.mate:
            raise VerificationFailed(
                f"step {step.k}: mate is {format_edge(actual)}, trace says {format_edge(step.mate)}"
            )
        if step.mate is None:
            if step.k != len(steps) - 1:
                raise VerificationFailed(f"trace continues past the unmatched edge at step {step.k}")
            return step.k
        previous = step.mate
    raise VerificationFailed("trace ends before reaching an unmatched edge")
