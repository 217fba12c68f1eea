"""
Text format for multigraphs and the forbidden-degree option.

    graph <n> <m>
    u v                  # m edge lines; parallel edges are fine

Forbidden sets are written ``v:a,b;w:c``: vertex, colon, comma separated values.
"""
from typing import Dict, FrozenSet

from nullsolve.apps.graphs.domain.models import Graph
from nullsolve.core.exceptions import ParseError, RangeViolation
from nullsolve.core.instance_files import InstanceFile, expect_count, parse_ints, take


def parse_graph(text: str) -> Graph:
    """Parse a graph file; raises ParseError with line and column."""
    file = InstanceFile.parse(text, "graph", 2)
    n, m = file.header
    if n < 0 or m < 0:
        raise ParseError(f"need n >= 0 and m >= 0, got n = {n}, m = {m}", file.header_line, 1)
    body = file.body
    last = body[-1].number if body else file.header_line

    edges = []
    for k in range(m):
        line = take(body, k, f"edge line {k + 1}", last)
        tokens = line.tokens()
        ends = parse_ints(line, tokens)
        expect_count(line, ends, 2, "endpoints")
        for (column, _), v in zip(tokens, ends):
            if not 1 <= v <= n:
                raise line.error(f"vertex {v} outside 1..{n}", column)
        if ends[0] == ends[1]:
            raise line.error(f"loop at vertex {ends[0]}")
        edges.append((ends[0], ends[1]))
    if len(body) > m:
        raise body[m].error("unexpected content after the edge list")
    return Graph(n, tuple(edges))


def format_graph(graph: Graph) -> str:
    lines = [f"graph {graph.n} {graph.size}"] + [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def parse_forbidden(text: str) -> Dict[int, FrozenSet[int]]:
    """``1:1;3:2,4`` -> {1: {1}, 3: {2, 4}}; an empty string forbids nothing."""
    out: Dict[int, FrozenSet[int]] = {}
    for group in filter(None, (g.strip() for g in text.split(";"))):
        vertex, sep, values = group.partition(":")
        try:
            v = int(vertex)
            elems = frozenset(int(x) for x in values.replace(",", " ").split())
        except ValueError:
            raise RangeViolation(f"cannot read forbidden set '{group}', expected 'v:a,b,...'")
        if not sep:
            raise RangeViolation(f"forbidden set '{group}' has no ':'")
        if v in out:
            raise RangeViolation(f"vertex {v} is listed twice")
        out[v] = elems
    return out
