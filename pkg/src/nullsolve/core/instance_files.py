"""
Line-oriented instance files.

Every format starts with a header line ``<kind> <int> <int> ...``; ``#``
starts a comment and blank lines are skipped. Errors carry the 1-based line
and column of the offending token.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from nullsolve.core.exceptions import InvalidInput, ParseError


@dataclass(frozen=True)
class Line:
    number: int
    text: str

    def tokens(self) -> List[Tuple[int, str]]:
        """Whitespace tokens with their 1-based columns."""
        out = []
        col = 0
        for raw in self.text.split():
            col = self.text.index(raw, col)
            out.append((col + 1, raw))
            col += len(raw)
        return out

    def error(self, message: str, column: int = 1) -> ParseError:
        return ParseError(message, self.number, column)


@dataclass(frozen=True)
class InstanceFile:
    """A parsed header plus the remaining significant lines."""

    kind: str
    header: Tuple[int, ...]
    body: Tuple[Line, ...] = field(default_factory=tuple)
    header_line: int = 1

    @classmethod
    def parse(cls, text: str, kind: str, header_fields: int) -> "InstanceFile":
        lines = significant_lines(text)
        if not lines:
            raise ParseError(f"empty file, expected a '{kind}' header", 1, 1)
        first = lines[0]
        tokens = first.tokens()
        if not tokens or tokens[0][1] != kind:
            found = tokens[0][1] if tokens else ""
            raise first.error(f"expected header '{kind}', found '{found}'")
        if len(tokens) != header_fields + 1:
            raise first.error(f"'{kind}' header takes {header_fields} integers, found {len(tokens) - 1}")
        header = tuple(parse_int(first, col, tok) for col, tok in tokens[1:])
        return cls(kind, header, tuple(lines[1:]), first.number)


def significant_lines(text: str) -> List[Line]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            out.append(Line(number, content))
    return out


def parse_int(line: Line, column: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise line.error(f"expected an integer, found '{token}'", column)


def parse_ints(line: Line, tokens: Sequence[Tuple[int, str]]) -> List[int]:
    return [parse_int(line, col, tok) for col, tok in tokens]


def expect_count(line: Line, values: Sequence, count: int, what: str) -> None:
    if len(values) != count:
        raise line.error(f"expected {count} {what}, found {len(values)}")


def take(body: Sequence[Line], index: int, what: str, last_line: int) -> Line:
    """body[index], or a ParseError just past the end of the file."""
    if index >= len(body):
        raise ParseError(f"unexpected end of file, expected {what}", last_line + 1, 1)
    return body[index]


def read_text(path: Union[str, Path]) -> str:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e.strerror}")
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError as e:
        line = raw[:e.start].count(b"\n") + 1
        column = e.start - (raw.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError("non-ASCII byte", line, column)
