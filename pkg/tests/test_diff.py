import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asmaps.diff import diff_maps, rich_rich_fraction
from asmaps.errors import EmptyGraph, NoMissingLinks
from asmaps.generator import BaParams, enrich_club, generate_ba
from asmaps.graph import Graph

from .graphs import gnp

graph_pairs = st.builds(
    lambda n, pa, pb, s: (gnp(n, pa, s), gnp(n, pb, s + 1)),
    st.integers(2, 25), st.floats(0.05, 0.9), st.floats(0.05, 0.9), st.integers(0, 2**31),
)


def test_identical_maps(k4):
    report = diff_maps(k4, k4)
    assert not report.missing_links
    assert report.rich_rich_fraction == 0.0
    with pytest.raises(NoMissingLinks):
        rich_rich_fraction(report, 0.05)


def test_path_vs_triangle():
    a = Graph([(1, 2), (2, 3)])
    b = Graph([(1, 2), (2, 3), (1, 3)])
    report = diff_maps(a, b)
    assert report.missing_links == {(1, 3)}
    assert report.missing_bin_matrix.total() == 1


def test_empty_maps(k4):
    with pytest.raises(EmptyGraph):
        diff_maps(Graph(), k4)
    with pytest.raises(EmptyGraph):
        diff_maps(k4, Graph())


def test_nodes_only_in_b_still_count():
    a = Graph([(1, 2)])
    b = Graph([(1, 2), (2, 3), (3, 4)], nodes=[9])
    report = diff_maps(a, b)
    assert report.missing_links == {(2, 3), (3, 4)}
    assert (report.common_nodes, report.nodes_only_in_a, report.nodes_only_in_b) == (2, 0, 3)


def test_links_only_in_a_are_counted_not_classified():
    a = Graph([(1, 2), (5, 6)])
    b = Graph([(1, 2), (2, 3)])
    report = diff_maps(a, b)
    assert report.links_only_in_a == 1
    assert report.missing_links == {(2, 3)}


def test_leaf_link_outside_club():
    a = generate_ba(BaParams(400, 2, seed=2))
    u, v = 398, 399
    assert not a.has_edge(u, v)
    b = a.with_edges([(u, v)])
    report = diff_maps(a, b)
    assert rich_rich_fraction(report, 0.05) == 0.0
    assert rich_rich_fraction(report, 1.0) == 1.0


def test_enriched_fixture():
    a = generate_ba(BaParams(2000, 3, seed=5))
    b = enrich_club(a, 0.05, 25, seed=5)
    report = diff_maps(a, b)
    assert len(report.missing_links) == 25
    assert report.rich_rich_fraction == 1.0
    assert report.missing_bin_matrix.bins[0][0] == 25


@settings(max_examples=60, deadline=None)
@given(graph_pairs)
def test_report_invariants(pair):
    a, b = pair
    report = diff_maps(a, b)
    assert not report.missing_links & a.edge_set()
    assert report.missing_links <= b.edge_set()
    assert b.edge_count == report.shared_links + len(report.missing_links)
    assert report.missing_bin_matrix.total() == len(report.missing_links)
    assert not diff_maps(a, a).missing_links
    if report.missing_links:
        fractions = [rich_rich_fraction(report, t / 20) for t in range(1, 21)]
        assert fractions == sorted(fractions)
        assert fractions[-1] == 1.0


def test_report_dict(k4):
    a = Graph([(1, 2), (2, 3)])
    b = Graph([(1, 2), (2, 3), (1, 3)])
    d = diff_maps(a, b).to_dict([0.05, 1.0])
    assert d["missing_links"] == 1
    assert d["rich_rich_fraction"] == {"0.05": 0.0, "1.0": 1.0}
    assert diff_maps(k4, k4).to_dict()["rich_rich_fraction"] == {"0.05": 0.0}
