"""Isomorphism-free enumeration of small graphs and the double-critical search."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .color import chromatic_number
from .critical import double_critical_edges, is_vertex_critical
from .graph import Graph

ENUMERATION_LIMIT = 7


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """All permutations of ``range(n)`` plus the graph6 pair order.

    Bit ``p`` of the code is the pair ``(i[p], j[p])`` in the column-wise
    order ``(0,1), (0,2), (1,2), (0,3), ...``; the first pair is the most
    significant bit.
    """
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    pi, pj = [], []
    for j in range(1, n):
        for i in range(j):
            pi.append(i)
            pj.append(j)
    npairs = len(pi)
    weights = np.array([1 << (npairs - 1 - p) for p in range(npairs)], dtype=np.int64)
    return perms, np.array(pi, dtype=np.intp), np.array(pj, dtype=np.intp), weights


def _adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def canonical_codes(graphs: list[Graph]) -> list[tuple[int, int]]:
    """``(code, perm_index)`` per graph: the minimum upper-triangle bit string
    over all relabellings, and a permutation attaining it."""
    if not graphs:
        return []
    n = graphs[0].n
    if n <= 1:
        return [(0, 0) for _ in graphs]
    perms, pi, pj, weights = _perm_tables(n)
    rows = perms[:, pi].astype(np.intp)
    cols = perms[:, pj].astype(np.intp)
    stack = np.stack([_adjacency(g) for g in graphs])  # (B, n, n)
    out = []
    # bit p of the relabelled graph is adj[perm[i_p], perm[j_p]]
    for start in range(0, len(graphs), 32):
        block = stack[start:start + 32]
        codes = block[:, rows, cols] @ weights  # (b, n!)
        idx = codes.argmin(axis=1)
        out.extend((int(codes[b, idx[b]]), int(idx[b])) for b in range(len(block)))
    return out


def canonical_form(g: Graph) -> int:
    """Minimum adjacency bit string over all ``n!`` relabellings."""
    return canonical_codes([g])[0][0]


def _from_code(n: int, code: int) -> Graph:
    _, pi, pj, _ = _perm_tables(n)
    npairs = len(pi)
    edges = [(int(pi[p]), int(pj[p])) for p in range(npairs) if code >> (npairs - 1 - p) & 1]
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _enumerate_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    smaller = [_from_code(n - 1, c) for c in _enumerate_codes(n - 1)]
    # every graph on n vertices is a graph on n-1 vertices plus one more vertex
    candidates = []
    for h in smaller:
        for nbhd in range(1 << (n - 1)):
            rows = [r | ((nbhd >> v & 1) << (n - 1)) for v, r in enumerate(h.rows)]
            rows.append(nbhd)
            candidates.append(Graph(n, tuple(rows)))
    codes = {code for code, _ in canonical_codes(candidates)}
    return tuple(sorted(codes))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices (``1 <= n <= 7``).

    Each representative is the relabelling with the minimum adjacency bit
    string, and representatives come out in increasing order of that string.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"built-in enumeration supports 1 <= n <= {ENUMERATION_LIMIT}")
    for code in _enumerate_codes(n):
        yield _from_code(n, code)


def all_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)


@dataclass(frozen=True)
class Finding:
    graph6: str
    n: int
    m: int
    chi: int
    complete: bool


def search_double_critical(graphs: Iterable[Graph] | int) -> list[Finding]:
    """Every double-critical graph among ``graphs`` (or among all graphs with
    at most ``graphs`` vertices when an integer is given).

    Cheap necessary conditions are tested first: a double-critical graph is
    connected and has minimum degree at least ``chi - 1``.
    """
    if isinstance(graphs, int):
        graphs = all_graphs(graphs)
    found = []
    for g in graphs:
        if not g.is_connected():
            continue
        chi = chromatic_number(g)
        if g.min_degree() < chi - 1:
            continue
        if not is_vertex_critical(g, chi):
            continue
        if len(double_critical_edges(g, chi)) != g.m:
            continue
        found.append(Finding(str(g), g.n, g.m, chi, g.is_complete()))
    return found
