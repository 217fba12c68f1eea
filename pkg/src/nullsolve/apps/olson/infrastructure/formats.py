"""
Text format for Olson instances.

    olson <p> <n> <m>
    d: d_1 ... d_n
    Q_1: q ...           # residues mod p^{d_1}; must contain 0
    ...
    Q_n: q ...
    a_11 ... a_1m        # n matrix rows of m integers
    ...
"""
from typing import List

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.core.exceptions import InvalidInput, ParseError
from nullsolve.core.instance_files import InstanceFile, Line, expect_count, parse_ints, take


def _labelled(line: Line, label: str) -> List[int]:
    tokens = line.tokens()
    if not tokens or tokens[0][1] != label:
        raise line.error(f"expected '{label}'")
    return parse_ints(line, tokens[1:])


def parse_olson(text: str) -> OlsonInstance:
    """Parse an olson file; raises ParseError with line and column."""
    file = InstanceFile.parse(text, "olson", 3)
    p, n, m = file.header
    if n < 0 or m < 0:
        raise ParseError(f"need n >= 0 and m >= 0, got n = {n}, m = {m}", file.header_line, 1)
    body = file.body
    last = body[-1].number if body else file.header_line

    line = take(body, 0, "'d:' line", last)
    d = _labelled(line, "d:")
    expect_count(line, d, n, "exponents")

    q = []
    for i in range(1, n + 1):
        line = take(body, i, f"'Q_{i}:' line", last)
        elems = _labelled(line, f"Q_{i}:")
        try:
            q.append(ResidueSet(p, d[i - 1], frozenset(elems)))
        except InvalidInput as e:
            raise line.error(str(e))

    rows = []
    for i in range(1, n + 1):
        line = take(body, n + i, f"matrix row {i}", last)
        row = parse_ints(line, line.tokens())
        expect_count(line, row, m, "entries")
        rows.append(tuple(row))
    if len(body) > 2 * n + 1:
        raise body[2 * n + 1].error("unexpected content after the matrix")

    try:
        return OlsonInstance(p, tuple(d), tuple(rows), tuple(q), m)
    except InvalidInput as e:
        raise ParseError(str(e), file.header_line, 1)


def format_olson(inst: OlsonInstance) -> str:
    lines = [f"olson {inst.p} {inst.n} {inst.m}", " ".join(["d:"] + [str(x) for x in inst.d])]
    for i, qi in enumerate(inst.q, start=1):
        lines.append(" ".join([f"Q_{i}:"] + [str(x) for x in qi.sorted()]))
    lines.extend(" ".join(str(x) for x in row) for row in inst.a)
    return "\n".join(lines) + "\n"
