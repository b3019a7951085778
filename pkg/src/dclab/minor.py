"""Clique minors: exact search with certificates, certificate checking, and
replay of explicit contraction recipes."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, bits, component_of, contract, mask_of, popcount
from .structure import max_clique

DEFAULT_MAX_N = 16


class SearchBudgetExceeded(RuntimeError):
    """Raised when a minor search runs out of its step budget."""


@dataclass(frozen=True)
class MinorCertificate:
    t: int
    branch_sets: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps({"t": self.t, "branch_sets": [list(b) for b in self.branch_sets]})

    @classmethod
    def from_json(cls, text: str) -> MinorCertificate:
        d = json.loads(text)
        return cls(d["t"], tuple(tuple(b) for b in d["branch_sets"]))


def verify_certificate(g: Graph, cert: MinorCertificate) -> bool:
    """Check disjointness, connectivity and pairwise adjacency of the branch sets."""
    sets = cert.branch_sets
    if len(sets) != cert.t:
        return False
    masks = []
    used = 0
    for b in sets:
        if not b or any(not 0 <= v < g.n for v in b) or len(set(b)) != len(b):
            return False
        m = mask_of(b)
        if m & used:
            return False
        used |= m
        if component_of(g, m & -m, m) != m:
            return False
        masks.append(m)
    nbrs = []
    for m in masks:
        nb = 0
        for v in bits(m):
            nb |= g.rows[v]
        nbrs.append(nb)
    return all(nbrs[i] & masks[j] for i in range(len(masks)) for j in range(i + 1, len(masks)))


def _connected_sets_by_root(g: Graph, order: list[int], max_size: int) -> dict[int, list[tuple[int, int]]]:
    """For every vertex ``r``, the connected sets whose lowest-ranked vertex is
    ``r``, as ``(mask, neighbourhood)`` pairs sorted by size."""
    rank = {v: i for i, v in enumerate(order)}
    out: dict[int, list[tuple[int, int]]] = {}
    for r in order:
        allowed = mask_of(v for v in order if rank[v] > rank[r])
        start = 1 << r
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for s in frontier:
                if popcount(s) >= max_size:
                    continue
                nb = 0
                for v in bits(s):
                    nb |= g.rows[v]
                for w in bits(nb & allowed & ~s):
                    t = s | 1 << w
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        sets = []
        for s in seen:
            nb = 0
            for v in bits(s):
                nb |= g.rows[v]
            sets.append((s, nb & ~s))
        sets.sort(key=lambda p: (popcount(p[0]), p[0]))
        out[r] = sets
    return out


def find_clique_minor(
    g: Graph, t: int, *, budget: int | None = None, max_n: int = DEFAULT_MAX_N
) -> MinorCertificate | None:
    """Branch sets of a ``K_t`` minor of ``g``, or ``None`` if there is none.

    Branch sets are chosen one at a time in increasing order of their
    lowest-ranked vertex, where vertices are ranked by descending degree.  A
    partial choice is abandoned when some chosen set cannot reach enough
    unused vertices to touch every remaining set, or when the edge budget
    (``t`` sets on ``s`` vertices need ``s - t`` internal and ``C(t, 2)`` cross
    edges) is exhausted.  ``budget`` bounds the number of search nodes.
    """
    if t < 1:
        raise ValueError("t must be positive")
    n = g.n
    if t > n:
        return None
    clique = max_clique(g)
    if popcount(clique) >= t:
        return MinorCertificate(t, tuple((v,) for v in list(bits(clique))[:t]))
    if t >= 6 and n > max_n:
        raise ValueError(f"K_{t} search limited to n <= {max_n}; raise max_n to override")
    m = g.m
    pairs = t * (t - 1) // 2
    if m < pairs:
        return None
    # vertices usable in total: internal edges s - t <= m - C(t, 2)
    max_total = min(n, m - pairs + t)
    max_size = max_total - (t - 1)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    after = [mask_of(order[i + 1:]) for i in range(n)] + [0]
    sets_by_root = _connected_sets_by_root(g, order, max_size)
    steps = 0
    chosen: list[int] = []
    chosen_nb: list[int] = []

    def rec(used: int, total: int, last_rank: int) -> bool:
        nonlocal steps
        steps += 1
        if budget is not None and steps > budget:
            raise SearchBudgetExceeded(f"minor search exceeded {budget} steps")
        r = t - len(chosen)
        if r == 0:
            return True
        avail = after[last_rank] & ~used if last_rank >= 0 else g.full_mask & ~used
        if popcount(avail) < r or total + r > max_total:
            return False
        for nb in chosen_nb:
            if popcount(nb & avail) < r:
                return False
        for i in range(last_rank + 1, n):
            root = order[i]
            if not avail >> root & 1:
                continue
            if popcount(after[i] & avail) < r - 1:
                break
            for s, nb in sets_by_root[root]:
                size = popcount(s)
                if total + size + r - 1 > max_total:
                    break
                if s & ~avail:
                    continue
                if any(not nb & c for c in chosen):
                    continue
                chosen.append(s)
                chosen_nb.append(nb)
                if rec(used | s, total + size, i):
                    return True
                chosen.pop()
                chosen_nb.pop()
        return False

    if rec(0, 0, -1):
        sets = sorted(tuple(bits(s)) for s in chosen)
        return MinorCertificate(t, tuple(sets))
    return None


def has_clique_minor(g: Graph, t: int, **kwargs) -> bool:
    return find_clique_minor(g, t, **kwargs) is not None


def hadwiger_number(g: Graph, **kwargs) -> int:
    t = popcount(max_clique(g))
    while t < g.n and find_clique_minor(g, t + 1, **kwargs) is not None:
        t += 1
    return t


def meets_density_bound(g: Graph, t: int) -> bool:
    """The edge counts that force a clique minor: ``m >= 4n - 9`` for ``K_6``
    and ``m >= 5n - 14`` for ``K_7``.  Only a sufficient condition."""
    if t == 6:
        return g.n >= 6 and g.m >= 4 * g.n - 9
    if t == 7:
        return g.n >= 7 and g.m >= 5 * g.n - 14
    return False


# -- contraction recipes --------------------------------------------------------


@dataclass(frozen=True)
class ContractionRecipe:
    """Edges to contract in order, named by their original vertex labels."""

    edges: tuple[tuple[int, int], ...]
    expected: int


def apply_recipe(g: Graph, recipe: ContractionRecipe) -> tuple[Graph, bool]:
    """Contract the recipe's edges and report whether the result contains
    ``K_expected`` as a subgraph.

    Edge endpoints refer to the labels of ``g``; each original vertex is
    tracked to the vertex it was merged into, so later edges may name vertices
    that have already been absorbed.
    """
    where = list(range(g.n))  # original vertex -> current index
    h = g
    for u, v in recipe.edges:
        a, b = where[u], where[v]
        if a == b or not h.has_edge(a, b):
            raise ValueError(f"recipe edge ({u}, {v}) is not an edge at contraction time")
        h = contract(h, a, b)
        keep, gone = min(a, b), max(a, b)
        for i, w in enumerate(where):
            if w == gone:
                where[i] = keep
            elif w > gone:
                where[i] = w - 1
    return h, popcount(max_clique(h)) >= recipe.expected


def recipe_certificate(g: Graph, recipe: ContractionRecipe, apex: bool = False) -> MinorCertificate:
    """Branch sets read off a recipe: each contracted group is one set, every
    other vertex a singleton.  With ``apex`` the result is for ``g`` joined
    with one extra vertex (appended as vertex ``g.n``), giving ``K_{t+1}``."""
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in recipe.edges:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    sets = sorted(tuple(sorted(s)) for s in groups.values())
    if apex:
        sets.append((g.n,))
    return MinorCertificate(len(sets), tuple(sets))


def cycle_complement_labels(length: int) -> dict[str, int]:
    """Figure labels ``y1..yl`` for the complement of ``C_l`` built by
    ``complement(cycle(l))``: ``y_i`` is vertex ``i - 1``, and consecutive
    labels are the *non*-adjacent pairs."""
    return {f"y{i}": i - 1 for i in range(1, length + 1)}


def named_recipe(labels: dict[str, int], pairs: Sequence[tuple[str, str]], expected: int) -> ContractionRecipe:
    return ContractionRecipe(tuple((labels[a], labels[b]) for a, b in pairs), expected)
