import io
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmaps.errors import IoError, ParseError
from asmaps.graph import Graph
from asmaps.io import format_edge_list, parse_edge_list, read_edge_list, write_curve_csv, write_edge_list

from .graphs import random_graphs


def test_parse_counts():
    g, doc = parse_edge_list("1 2\n2 3\n2 1\n3 3\n")
    assert g.edge_set() == {(1, 2), (2, 3)}
    assert (doc.parsed_edges, doc.dropped_self_loops, doc.collapsed_duplicates) == (2, 1, 1)


def test_comments_and_blanks():
    text = "# comment\n\n10 20\n"
    g, doc = parse_edge_list(text)
    assert g.edge_count == 1
    lines = len(text.splitlines())
    assert lines == doc.parsed_edges + doc.dropped_self_loops + doc.collapsed_duplicates + doc.skipped_lines


@pytest.mark.parametrize("text, line", [("1 x\n", 1), ("1 2\n3\n", 2), ("1 2 3\n", 1), ("-1 2\n", 1),
                                        ("1 4294967296\n", 1)])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_large_as_numbers():
    g, _ = parse_edge_list("4294967295 65536\n")
    assert g.has_edge(65536, 4294967295)


def test_isolated_nodes_round_trip():
    g = Graph([(1, 2)], nodes=[9])
    assert format_edge_list(g) == "1 2\n9 9\n"
    assert parse_edge_list(format_edge_list(g))[0] == g


def test_round_trip_random():
    for g in random_graphs(50, seed=3):
        buf = io.StringIO()
        write_edge_list(g, buf)
        assert parse_edge_list(buf.getvalue())[0] == g


@given(st.lists(st.tuples(st.integers(0, 40), st.integers(0, 40)), min_size=1, max_size=60), st.randoms())
def test_parse_order_insensitive(edges, rnd):
    lines = [f"{u} {v}\n" for u, v in edges]
    shuffled = lines[:]
    rnd.shuffle(shuffled)
    assert parse_edge_list(lines)[0] == parse_edge_list(shuffled)[0]


def test_canonical_edge_order():
    g = Graph([(5, 1), (3, 2), (1, 3)])
    assert format_edge_list(g) == "1 3\n1 5\n2 3\n"


def test_read_missing_file(tmp_path):
    with pytest.raises(IoError):
        read_edge_list(tmp_path / "nope.edges")


def test_csv_format(tmp_path):
    out = tmp_path / "c.csv"
    write_curve_csv(("r", "phi"), [(0.01, 0.32)], out)
    assert out.read_bytes() == b"r,phi\n0.01,0.32\n"


def test_csv_header_only(tmp_path):
    out = tmp_path / "c.csv"
    write_curve_csv(("r", "phi"), [], out)
    assert out.read_text() == "r,phi\n"


def test_csv_matrix_arity(tmp_path):
    out = tmp_path / "m.csv"
    write_curve_csv(("bin_i", "bin_j", "count"), [(i, j, 0) for i in range(20) for j in range(20)], out)
    assert len(out.read_text().splitlines()) == 401


def test_csv_ragged_rows():
    with pytest.raises(ValueError):
        write_curve_csv(("a", "b"), [(1,)], io.StringIO())


def test_csv_unwritable(tmp_path):
    with pytest.raises(IoError):
        write_curve_csv(("a",), [], tmp_path / "missing" / "x.csv")
