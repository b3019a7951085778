import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from dclab.color import chromatic_number
from dclab.critical import (
    CensusSummary,
    bound_c,
    census,
    decompose_join,
    double_critical_edges,
    is_double_critical,
    is_double_edge_critical,
    is_mixed_double_critical,
    is_odd_wheel,
    is_vertex_critical,
    join_masks,
    non_incident_dc_pair,
    verdict,
)
from dclab.graph import Graph, complete, cycle, delete_vertices, h_graph, join, petersen, wheel, write_graph6
from oracles import brute_colorable
from strategies import graphs


def _brute_dc_count(g, chi):
    # chi(G - x - y) >= chi - 2 always, so test (chi - 2)-colourability only
    count = 0
    for x, y in g.edges():
        h = delete_vertices(g, [x, y])
        if brute_colorable(h.n, h.edges(), chi - 2):
            count += 1
    return count


def test_complete_graphs_are_double_critical():
    for k in range(1, 8):
        assert is_double_critical(complete(k))


def test_odd_wheel_dc_edges_are_spokes():
    g = wheel(5)
    assert double_critical_edges(g) == [(0, v) for v in range(1, 6)]
    assert is_odd_wheel(g) and is_odd_wheel(wheel(7))
    assert not is_odd_wheel(complete(4))


def test_petersen_is_not_critical():
    assert not is_vertex_critical(petersen())


@pytest.mark.parametrize("length, count, m", [(5, 11, 16), (7, 15, 22), (9, 19, 28)])
def test_cycle_join_k2_counts(length, count, m):
    g = join(cycle(length), complete(2))
    assert g.m == m
    assert is_vertex_critical(g)
    dc = double_critical_edges(g)
    assert len(dc) == count == _brute_dc_count(g, 5)
    assert bound_c(g.n, g.m) == count


@pytest.mark.parametrize("length, count, m", [(5, 25, 35), (7, 49, 63)])
def test_h_graph_ratios(length, count, m):
    g = h_graph(6, length)
    assert is_vertex_critical(g) and chromatic_number(g) == 6
    assert (len(double_critical_edges(g)), g.m) == (count, m)


def test_h_graph_dc_count_against_oracle():
    g = h_graph(6, 5)
    assert _brute_dc_count(g, 6) == 25


def test_h_graph_ratio_grows_with_cycle_length():
    ratios = []
    for length in (5, 7, 9):
        g = h_graph(6, length)
        ratios.append(Fraction(len(double_critical_edges(g)), g.m))
    assert ratios == sorted(ratios) and ratios[-1] > Fraction(3, 4)


def test_bound_c_is_exact_rational():
    assert bound_c(7, 16) == Fraction(11)
    assert bound_c(6, 10) == Fraction(90, 13)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
def test_join_law(a, b):
    g = join(a, b)
    assert chromatic_number(g) == chromatic_number(a) + chromatic_number(b)
    assert is_double_critical(g) == (is_double_critical(a) and is_double_critical(b))
    assert is_vertex_critical(g) == (is_vertex_critical(a) and is_vertex_critical(b))


@given(graphs(min_n=2, max_n=8))
def test_decompose_join_conventions(g):
    parts = decompose_join(g)
    if parts is None:
        return
    first, second = join_masks(g)
    assert first & 1  # the factor holding vertex 0 comes first
    g1, g2 = parts
    assert g1.n + g2.n == g.n
    assert g1.n == bin(first).count("1")
    assert g.m == g1.m + g2.m + g1.n * g2.n


def test_decompose_known_joins():
    assert decompose_join(cycle(5)) is None
    g1, g2 = decompose_join(wheel(5))
    assert (g1.n, g2) == (1, cycle(5))


def test_non_incident_pair_needs_4_critical():
    with pytest.raises(ValueError):
        non_incident_dc_pair(complete(5))
    assert non_incident_dc_pair(wheel(5)) is None


def test_gallai_bound_on_small_critical_graphs():
    # every k-critical graph on at most 2k - 2 vertices decomposes
    for g in (wheel(5), join(cycle(5), complete(2)), h_graph(6, 5), complete(4)):
        k = chromatic_number(g)
        assert g.n <= 2 * k - 2
        assert decompose_join(g) is not None


def test_variants_on_small_graphs():
    for k in range(1, 6):
        assert is_double_edge_critical(complete(k)) and is_mixed_double_critical(complete(k))
    for g in (cycle(5), wheel(5), join(cycle(5), complete(2))):
        assert not is_double_edge_critical(g)
        assert not is_mixed_double_critical(g)
    v = verdict(wheel(5))
    assert v.chi == 4 and v.is_vertex_critical and not v.is_double_critical


def test_census_records_and_summary():
    corpus = [
        ("w5", wheel(5)),
        ("k4", complete(4)),
        ("c5", cycle(5)),
        ("bad", ValueError("broken line")),
        ("pet", petersen()),
        ("w7", wheel(7)),
    ]
    summary = CensusSummary(4)
    records = list(census(corpus, 4, summary=summary))
    assert [r.graph_id for r in records] == ["w5", "k4", "w7"]
    assert summary.processed == 6
    assert summary.skipped_chi == 2 and summary.parse_errors == [("bad", "broken line")]
    assert summary.violations == []
    w5 = records[0].to_dict()
    assert w5["ratio"] == "1/2" and w5["dc_edge_count"] == 5
    assert w5["factors"] == [write_graph6(complete(1)), write_graph6(cycle(5))]
    json.dumps(summary.to_dict())


def test_census_parallel_matches_serial():
    corpus = [(str(i), g) for i, g in enumerate([wheel(5), wheel(7), complete(4), cycle(7)])]
    serial = [r.to_dict() for r in census(corpus, 4)]
    parallel = [r.to_dict() for r in census(corpus, 4, jobs=2)]
    assert serial == parallel


def test_five_critical_equality_is_only_observed():
    summary = CensusSummary(5)
    list(census([("c5k2", join(cycle(5), complete(2)))], 5, summary=summary))
    assert summary.bound_c_equality == ["c5k2"] and summary.violations == []


def test_empty_graph_edge_cases():
    assert is_vertex_critical(Graph.empty(1))
    assert not is_vertex_critical(Graph.empty(2))
    with pytest.raises(ValueError):
        is_vertex_critical(Graph.empty(0))
