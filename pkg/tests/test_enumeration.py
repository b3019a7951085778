from math import comb, factorial

import pytest

from dclab.enumeration import canonical_form, enumerate_graphs, search_double_critical
from dclab.graph import Graph, complete, cycle, relabel, write_graph6
from oracles import automorphism_count, labelled_classes

# isomorphism classes of graphs on n vertices
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_labelled_brute_force(n):
    assert len(list(enumerate_graphs(n))) == labelled_classes(n) == CLASS_COUNTS[n]


@pytest.mark.parametrize("n", [6, 7])
def test_orbit_counting_identity(n):
    # each class contributes n!/|Aut| labelled graphs; together they are all of them
    reps = list(enumerate_graphs(n))
    assert len(reps) == CLASS_COUNTS[n]
    total = sum(factorial(n) // automorphism_count(n, g.edges()) for g in reps)
    assert total == 2 ** comb(n, 2)


def test_representatives_are_canonical_and_distinct():
    reps = list(enumerate_graphs(6))
    codes = [canonical_form(g) for g in reps]
    assert codes == sorted(set(codes))


def test_canonical_form_is_relabelling_invariant(rng):
    for _ in range(30):
        g = Graph.from_edges(6, [(u, v) for v in range(6) for u in range(v) if rng.random() < 0.5])
        order = list(range(6))
        rng.shuffle(order)
        assert canonical_form(relabel(g, order)) == canonical_form(g)
    assert canonical_form(cycle(5)) != canonical_form(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_graphs(8))


def test_search_small_orders():
    found = search_double_critical(5)
    assert [f.graph6 for f in found] == [write_graph6(complete(k)) for k in range(1, 6)]
    assert all(f.complete for f in found)
    assert search_double_critical([cycle(5), complete(3)])[0].graph6 == write_graph6(complete(3))
