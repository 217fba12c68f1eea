import pytest

from nullsolve.core.exceptions import InvalidInput, ParseError
from nullsolve.core.instance_files import InstanceFile, Line, read_text, significant_lines, take


class TestReadText:
    def test_ascii(self, tmp_path):
        path = tmp_path / "a.graph"
        path.write_text("graph 2 1\n1 2\n")
        assert read_text(path) == "graph 2 1\n1 2\n"

    def test_non_ascii_byte_is_located(self, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_bytes(b"graph 2 1\n1 \xc3\xa9\n")
        with pytest.raises(ParseError) as e:
            read_text(path)
        assert (e.value.line, e.value.column) == (2, 3)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidInput):
            read_text(tmp_path / "missing.olson")


class TestInstanceFile:
    def test_comments_and_blank_lines(self):
        text = "# leading comment\n\ngraph 3 2   # trailing\n1 2\n\n2 3\n"
        file = InstanceFile.parse(text, "graph", 2)
        assert file.header == (3, 2)
        assert file.header_line == 3
        assert [line.number for line in file.body] == [4, 6]

    def test_empty_file(self):
        with pytest.raises(ParseError) as e:
            InstanceFile.parse("# nothing\n", "graph", 2)
        assert e.value.line == 1

    def test_header_field_count(self):
        with pytest.raises(ParseError) as e:
            InstanceFile.parse("graph 3\n", "graph", 2)
        assert e.value.line == 1

    def test_header_integer(self):
        with pytest.raises(ParseError) as e:
            InstanceFile.parse("graph 3 two\n", "graph", 2)
        assert (e.value.line, e.value.column) == (1, 9)

    def test_take_past_the_end(self):
        body = significant_lines("1 2\n")
        assert take(body, 0, "an edge", 1).text == "1 2"
        with pytest.raises(ParseError) as e:
            take(body, 1, "an edge", 1)
        assert e.value.line == 2


def test_token_columns():
    assert Line(1, "  ab c").tokens() == [(3, "ab"), (6, "c")]
