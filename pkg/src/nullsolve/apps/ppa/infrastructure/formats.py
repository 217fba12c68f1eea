"""
Text format for general-form instances.

    genpoly <m> <k>
    block <m_i>
    x1*x2 + x3 + 1        # one line per polynomial; 0 is the zero polynomial
    ...
    fullpairs:
    1 1 2 ; 2 1 1         # paired full-monomial occurrences
    leftover: 2 1 1
"""
import re
from typing import List, Tuple

from nullsolve.apps.nullstellensatz.domain.models import Monomial
from nullsolve.apps.ppa.domain.models import ExplicitPoly, GeneralFormPoly, TermTuple
from nullsolve.core.exceptions import ParseError, RangeViolation
from nullsolve.core.instance_files import InstanceFile, Line, parse_int, parse_ints, take

_VARIABLE = re.compile(r"x([0-9]+)$")


def _parse_monomial(line: Line, column: int, text: str, m: int) -> Monomial:
    if text.strip() == "1":
        return Monomial()
    variables = []
    offset = 0
    for factor in text.split("*"):
        stripped = factor.strip()
        col = column + offset + (len(factor) - len(factor.lstrip()))
        match = _VARIABLE.match(stripped)
        if not match:
            raise line.error(f"expected x<j> or 1, found '{stripped}'", col)
        j = int(match.group(1))
        if not 1 <= j <= m:
            raise line.error(f"variable x{j} outside x1..x{m}", col)
        variables.append(j)
        offset += len(factor) + 1
    return Monomial.of(*variables)


def parse_poly(line: Line, m: int) -> ExplicitPoly:
    if line.text.strip() == "0":
        return ()
    monomials = []
    start = 0
    for piece in line.text.split("+"):
        if not piece.strip():
            raise line.error("empty monomial", start + 1)
        monomials.append(_parse_monomial(line, start + 1, piece, m))
        start += len(piece) + 1
    return tuple(monomials)


def _parse_tuple(line: Line, tokens) -> TermTuple:
    values = parse_ints(line, tokens)
    if not values:
        raise line.error("expected a term tuple 'i a_1 ... a_mi'")
    return TermTuple(values[0], tuple(values[1:]))


def _split_pair(line: Line) -> Tuple[TermTuple, TermTuple]:
    if line.text.count(";") != 1:
        raise line.error("a full pair is written 'i a... ; i a...'")
    cut = line.text.index(";")
    tokens = line.tokens()
    left = [(c, t) for c, t in tokens if c - 1 < cut]
    right = [(c, t) for c, t in tokens if c - 1 > cut]
    return _parse_tuple(line, left), _parse_tuple(line, right)


def parse_general_form(text: str) -> GeneralFormPoly:
    """Parse a genpoly file; raises ParseError with line and column."""
    file = InstanceFile.parse(text, "genpoly", 2)
    m, k = file.header
    if m < 1 or k < 0:
        raise ParseError(f"need m >= 1 and k >= 0, got m = {m}, k = {k}", file.header_line, 1)
    body = file.body
    last = body[-1].number if body else file.header_line
    pos = 0

    blocks: List[Tuple[ExplicitPoly, ...]] = []
    for b in range(1, k + 1):
        line = take(body, pos, f"'block' line for block {b}", last)
        tokens = line.tokens()
        if len(tokens) != 2 or tokens[0][1] != "block":
            raise line.error(f"expected 'block <m_i>' for block {b}")
        size = parse_int(line, tokens[1][0], tokens[1][1])
        if size < 0:
            raise line.error("block size must be nonnegative", tokens[1][0])
        pos += 1
        polys = []
        for _ in range(size):
            polys.append(parse_poly(take(body, pos, f"a polynomial of block {b}", last), m))
            pos += 1
        blocks.append(tuple(polys))

    pairs = []
    line = take(body, pos, "'fullpairs:' or 'leftover:'", last)
    if line.text.strip() == "fullpairs:":
        pos += 1
        while pos < len(body) and not body[pos].text.strip().startswith("leftover:"):
            pairs.append(_split_pair(body[pos]))
            pos += 1

    line = take(body, pos, "'leftover:' line", last)
    tokens = line.tokens()
    if not tokens or tokens[0][1] != "leftover:":
        raise line.error("expected 'leftover: i a_1 ... a_mi'")
    leftover = _parse_tuple(line, tokens[1:])
    pos += 1
    if pos < len(body):
        raise body[pos].error("unexpected content after 'leftover:'")

    try:
        return GeneralFormPoly(m, tuple(blocks), tuple(pairs), leftover)
    except RangeViolation as e:
        raise ParseError(str(e), file.header_line, 1)


def _format_tuple(t: TermTuple) -> str:
    return " ".join(str(x) for x in (t.block,) + t.choices)


def format_poly(poly: ExplicitPoly) -> str:
    return " + ".join(str(t) for t in poly) or "0"


def format_general_form(inst: GeneralFormPoly) -> str:
    lines = [f"genpoly {inst.m} {inst.k}"]
    for block in inst.blocks:
        lines.append(f"block {len(block)}")
        lines.extend(format_poly(poly) for poly in block)
    lines.append("fullpairs:")
    lines.extend(f"{_format_tuple(a)} ; {_format_tuple(b)}" for a, b in inst.full_pairs)
    if inst.leftover is not None:
        lines.append(f"leftover: {_format_tuple(inst.leftover)}")
    return "\n".join(lines) + "\n"
