import itertools
import random

import pytest
from hypothesis import given, strategies as st

from dclab.color import (
    Coloring,
    CyclicColorPermutation,
    chromatic_number,
    count_cycles_through_edge,
    dsatur_greedy,
    is_k_colorable,
    kempe_chain,
    optimal_coloring,
    prescribed_color_path,
    recolor,
)
from dclab.graph import Graph, complete, cycle, h_graph, join, petersen, wheel
from oracles import brute_chromatic_number, brute_cycles_through_edge, random_edges
from strategies import graphs


@pytest.mark.parametrize(
    "g, chi",
    [
        (complete(1), 1),
        (Graph.empty(4), 1),
        (cycle(5), 3),
        (cycle(6), 2),
        (petersen(), 3),
        (wheel(5), 4),
        (join(cycle(5), complete(2)), 5),
        (h_graph(6, 5), 6),
        (h_graph(7, 7), 7),
    ],
)
def test_known_chromatic_numbers(g, chi):
    assert chromatic_number(g) == chi


@given(graphs(min_n=1, max_n=7))
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic_number(g.n, g.edges())


@given(graphs(min_n=1, max_n=9))
def test_optimal_coloring_is_tight(g):
    chi = chromatic_number(g)
    c = optimal_coloring(g)
    assert c.is_proper(g) and len(set(c.assign)) == chi
    assert is_k_colorable(g, chi - 1) is None
    greedy = dsatur_greedy(g)
    assert len(set(greedy.values())) >= chi


def test_coloring_canonical_form():
    c = Coloring(3, (2, 0, 2, 1)).canonical()
    assert c.assign == (0, 1, 0, 2)


def test_within_mask_restricts_graph():
    g = join(cycle(5), complete(2))
    assert chromatic_number(g, within=0b11111) == 3
    assert chromatic_number(g, within=0) == 0


def _closure_oracle(g, c, x, pi):
    # smallest set containing x closed under "neighbour with the next colour"
    s = {x}
    changed = True
    while changed:
        changed = False
        for y in list(s):
            for z in g.neighbors(y):
                if z not in s and c[z] == pi(c[y]):
                    s.add(z)
                    changed = True
    return s


@given(graphs(min_n=2, max_n=9), st.data())
def test_kempe_chain_closure_and_properness(g, data):
    c = optimal_coloring(g)
    k = max(c.assign) + 1
    if k < 2:
        return
    x = data.draw(st.integers(0, g.n - 1))
    size = data.draw(st.integers(2, k))
    cyc = data.draw(st.permutations(range(k)))[:size]
    pi = CyclicColorPermutation(tuple(cyc))
    chain = kempe_chain(g, c, x, pi)
    assert set(chain) == _closure_oracle(g, c, x, pi)
    assert recolor(g, c, chain, pi).is_proper(g)


def test_kempe_chain_classic_two_colour_case():
    # path 0-1-2-3 coloured 0,1,0,2: swapping 0 and 1 from vertex 0 reaches 0,1,2 only
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    c = Coloring(3, (0, 1, 0, 2))
    chain = kempe_chain(g, c, 0, CyclicColorPermutation((0, 1)))
    assert chain == frozenset({0, 1, 2})
    assert recolor(g, c, chain, CyclicColorPermutation((0, 1))).assign == (1, 0, 1, 2)


def test_kempe_chain_rejects_improper_input():
    g = complete(2)
    with pytest.raises(ValueError):
        kempe_chain(g, Coloring(1, (0, 0)), 0, CyclicColorPermutation((0, 1)))


def _brute_prescribed_path(g, c, x, y, seq):
    others = [v for v in range(g.n) if v not in (x, y)]
    for mid in itertools.permutations(others, len(seq)):
        if all(c[v] == s for v, s in zip(mid, seq)):
            p = (x,) + mid + (y,)
            if all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1)):
                return True
    return False


@given(graphs(min_n=3, max_n=8), st.data())
def test_prescribed_path_matches_brute_force(g, data):
    edges = g.edges()
    if not edges:
        return
    x, y = data.draw(st.sampled_from(edges))
    c = optimal_coloring(g)
    k = max(c.assign) + 1
    seq = data.draw(st.lists(st.integers(0, k - 1), min_size=1, max_size=min(k, 3), unique=True))
    found = prescribed_color_path(g, c, x, y, seq)
    assert (found is not None) == _brute_prescribed_path(g, c, x, y, seq)
    if found is not None:
        assert found[0] == x and found[-1] == y
        assert [c[v] for v in found[1:-1]] == seq
        assert all(g.has_edge(found[i], found[i + 1]) for i in range(len(found) - 1))


def test_prescribed_path_argument_errors():
    g = complete(4)
    c = optimal_coloring(g)
    with pytest.raises(ValueError):
        prescribed_color_path(g, c, 0, 1, [2, 2])
    with pytest.raises(ValueError):
        prescribed_color_path(g, c, 0, 1, [])
    with pytest.raises(ValueError):
        prescribed_color_path(Graph.empty(3), Coloring(1, (0, 0, 0)), 0, 1, [0])


def test_cycle_counts_in_complete_graphs():
    # K_k: a cycle of length i + 2 through xy picks an ordered i-subset of the other k - 2
    for k in (5, 6, 7):
        g = complete(k)
        for i in range(1, k - 1):
            expected = 1
            for j in range(i):
                expected *= k - 2 - j
            assert count_cycles_through_edge(g, 0, 1, i + 2) == expected


def test_cycle_counts_match_oracle():
    r = random.Random(5)
    for _ in range(40):
        n = r.randint(3, 7)
        g = Graph.from_edges(n, random_edges(n, 0.6, r))
        for x, y in g.edges()[:3]:
            for length in range(3, n + 1):
                assert count_cycles_through_edge(g, x, y, length) == brute_cycles_through_edge(
                    n, g.edges(), x, y, length
                )
