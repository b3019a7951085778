"""Independent reference implementations used as test oracles.

Everything here is deliberately naive: plain edge lists, exhaustive loops or
numpy over all assignments.  None of it imports the library's algorithms.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import numpy as np


def random_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    return [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]


# -- graph6 -------------------------------------------------------------------


def graph6_encode(n: int, edges) -> str:
    """Textbook encoder working on a string of '0'/'1' characters."""
    es = {frozenset(e) for e in edges}
    bitstr = "".join("1" if frozenset((i, j)) in es else "0" for j in range(n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    body = "".join(chr(int(bitstr[i:i + 6], 2) + 63) for i in range(0, len(bitstr), 6))
    return chr(n + 63) + body


# -- colouring ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _assignments(n: int, k: int) -> np.ndarray:
    return np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int8).reshape(-1, n)


def brute_chromatic_number(n: int, edges) -> int:
    """Smallest k such that some of the k**n assignments is proper."""
    edges = list(edges)
    if n == 0:
        return 0
    if not edges:
        return 1
    us = np.array([u for u, _ in edges])
    vs = np.array([v for _, v in edges])
    for k in range(2, n + 1):
        a = _assignments(n, k)
        if np.any(np.all(a[:, us] != a[:, vs], axis=1)):
            return k
    raise AssertionError("unreachable")


def brute_colorable(n: int, edges, k: int) -> bool:
    edges = list(edges)
    if not edges:
        return k >= min(n, 1)
    if k < 1:
        return False
    a = _assignments(n, k)
    us = np.array([u for u, _ in edges])
    vs = np.array([v for _, v in edges])
    return bool(np.any(np.all(a[:, us] != a[:, vs], axis=1)))


def brute_cycles_through_edge(n: int, edges, x: int, y: int, length: int) -> int:
    """Cycles of the given length using edge xy, by listing vertex sequences."""
    es = {frozenset(e) for e in edges}
    count = 0
    others = [v for v in range(n) if v not in (x, y)]
    for mid in itertools.permutations(others, length - 2):
        seq = (y,) + mid + (x,)
        if all(frozenset((seq[i], seq[i + 1])) in es for i in range(len(seq) - 1)):
            count += 1
    return count


# -- cliques, independence, connectivity -------------------------------------------


def brute_clique_number(n: int, edges) -> int:
    es = {frozenset(e) for e in edges}
    best = 0
    for r in range(1, n + 1):
        if any(all(frozenset(p) in es for p in itertools.combinations(s, 2)) for s in itertools.combinations(range(n), r)):
            best = r
        else:
            break
    return best


def complement_edges(n: int, edges):
    es = {frozenset(e) for e in edges}
    return [(u, v) for u, v in itertools.combinations(range(n), 2) if frozenset((u, v)) not in es]


def _connected(vertices, es) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    start = next(iter(vertices))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for w in vertices:
            if w not in seen and frozenset((u, w)) in es:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def brute_connectivity(n: int, edges) -> int:
    """Smallest vertex set whose removal disconnects the graph (n - 1 if none)."""
    es = {frozenset(e) for e in edges}
    for r in range(n - 1):
        for s in itertools.combinations(range(n), r):
            rest = set(range(n)) - set(s)
            if len(rest) >= 2 and not _connected(rest, es):
                return r
    return max(n - 1, 0)


# -- minors ---------------------------------------------------------------------


def _canon(n: int, edges: frozenset) -> tuple:
    best = None
    for p in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return (n, best)


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, frozenset]:
    # merge v into u, then close the gap left by v
    def f(w):
        w = u if w == v else w
        return w - 1 if w > v else w

    out = set()
    for a, b in edges:
        a, b = f(a), f(b)
        if a != b:
            out.add((min(a, b), max(a, b)))
    return n - 1, frozenset(out)


def _delete(n: int, edges: frozenset, v: int) -> tuple[int, frozenset]:
    def f(w):
        return w - 1 if w > v else w

    return n - 1, frozenset((f(a), f(b)) for a, b in edges if v not in (a, b))


class MinorClosureOracle:
    """Decides ``K_t`` minors by exploring all vertex deletions and edge
    contractions, memoised on a brute-force canonical form.

    A graph has a ``K_t`` minor iff some sequence of these operations reaches
    a graph with a ``K_t`` subgraph.
    """

    def __init__(self) -> None:
        self.memo: dict[tuple, bool] = {}

    def has_minor(self, n: int, edges, t: int) -> bool:
        edges = frozenset(tuple(sorted(e)) for e in edges)
        return self._rec(n, edges, t)

    def _rec(self, n: int, edges: frozenset, t: int) -> bool:
        if n < t or len(edges) < t * (t - 1) // 2:
            return False
        key = (t, _canon(n, edges)) if n <= 7 else None
        if key is not None and key in self.memo:
            return self.memo[key]
        result = brute_clique_number(n, edges) >= t
        if not result:
            result = any(self._rec(*_contract(n, edges, u, v), t) for u, v in edges) or any(
                self._rec(*_delete(n, edges, v), t) for v in range(n)
            )
        if key is not None:
            self.memo[key] = result
        return result


def partition_has_minor(n: int, edges, t: int) -> bool:
    """Try every assignment of vertices to ``t`` branch sets or to none.

    Non-emptiness and pairwise adjacency are filtered with numpy over all
    ``(t + 1) ** n`` assignments; connectivity is checked on the survivors.
    """
    edges = list(edges)
    if t == 1:
        return n >= 1
    if n < t or len(edges) < t * (t - 1) // 2:
        return False
    es = {frozenset(e) for e in edges}
    a = _assignments(n, t + 1).astype(np.intp)
    ok = np.ones(len(a), dtype=bool)
    for i in range(t):
        ok &= np.any(a == i, axis=1)
    us = np.array([u for u, _ in edges])
    vs = np.array([v for _, v in edges])
    au, av = a[:, us], a[:, vs]
    for i in range(t):
        for j in range(i + 1, t):
            ok &= np.any(((au == i) & (av == j)) | ((au == j) & (av == i)), axis=1)
    for row in a[ok]:
        parts = [[v for v in range(n) if row[v] == i] for i in range(t)]
        if all(_connected(p, es) for p in parts):
            return True
    return False


# -- enumeration -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def automorphism_count(n: int, edges) -> int:
    """Permutations p with A[p][:, p] == A, checked for all n! at once."""
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    perms = _all_perms(n)
    moved = a[perms[:, :, None], perms[:, None, :]]
    return int(np.all(moved == a, axis=(1, 2)).sum())


def labelled_classes(n: int) -> int:
    """Isomorphism classes on n vertices by canonicalising every labelled graph."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        seen.add(_canon(n, edges))
    return len(seen)
