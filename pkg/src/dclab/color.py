"""Exact vertex colouring and generalized Kempe chains.

Colours are the integers ``0..k-1``.  Every solver here works on a vertex
mask of a :class:`~dclab.graph.Graph`, so ``chi(G - x - y)`` and friends never
have to materialise the smaller graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph, bits, mask_of, popcount


@dataclass(frozen=True)
class Coloring:
    """A proper colouring with colours in ``range(k)``.

    ``assign[v]`` is ``None`` for vertices outside the coloured subgraph, e.g.
    ``x`` and ``y`` in a colouring of ``G - x - y``.
    """

    k: int
    assign: tuple[int | None, ...]

    def __post_init__(self) -> None:
        for c in self.assign:
            if c is not None and not 0 <= c < self.k:
                raise ValueError(f"colour {c} outside range({self.k})")

    def __getitem__(self, v: int) -> int | None:
        return self.assign[v]

    def is_proper(self, g: Graph) -> bool:
        if len(self.assign) != g.n:
            return False
        for u, v in g.edges():
            cu = self.assign[u]
            if cu is not None and cu == self.assign[v]:
                return False
        return True

    def colored_mask(self) -> int:
        return mask_of(v for v, c in enumerate(self.assign) if c is not None)

    def classes(self) -> list[int]:
        """Vertex mask of every colour class, indexed by colour."""
        out = [0] * self.k
        for v, c in enumerate(self.assign):
            if c is not None:
                out[c] |= 1 << v
        return out

    def canonical(self) -> Coloring:
        """Renumber colours by first appearance in vertex order."""
        remap: dict[int, int] = {}
        new = []
        for c in self.assign:
            if c is None:
                new.append(None)
                continue
            if c not in remap:
                remap[c] = len(remap)
            new.append(remap[c])
        return Coloring(self.k, tuple(new))


@dataclass(frozen=True)
class CyclicColorPermutation:
    """The cyclic permutation ``cycle[0] -> cycle[1] -> ... -> cycle[0]``."""

    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.cycle) < 2:
            raise ValueError("a cyclic permutation needs at least two colours")
        if len(set(self.cycle)) != len(self.cycle):
            raise ValueError("cycle entries must be distinct")

    def __call__(self, c: int) -> int:
        try:
            i = self.cycle.index(c)
        except ValueError:
            return c
        return self.cycle[(i + 1) % len(self.cycle)]


# -- bounds ------------------------------------------------------------------


def greedy_clique(g: Graph, within: int | None = None) -> int:
    """Mask of a maximal clique grown greedily by descending degree."""
    mask = g.full_mask if within is None else within
    rows = g.rows
    order = sorted(bits(mask), key=lambda v: (-popcount(rows[v] & mask), v))
    clique = 0
    cand = mask
    for v in order:
        if cand >> v & 1:
            clique |= 1 << v
            cand &= rows[v]
    return clique


def dsatur_greedy(g: Graph, within: int | None = None) -> dict[int, int]:
    """Greedy DSATUR colouring of ``g[within]`` (an upper bound on chi)."""
    mask = g.full_mask if within is None else within
    rows = g.rows
    color: dict[int, int] = {}
    seen = {v: 0 for v in bits(mask)}  # bitmask of colours on coloured neighbours
    uncolored = mask
    while uncolored:
        best = max(
            bits(uncolored),
            key=lambda v: (popcount(seen[v]), popcount(rows[v] & uncolored), -v),
        )
        forb = seen[best]
        c = 0
        while forb >> c & 1:
            c += 1
        color[best] = c
        uncolored &= ~(1 << best)
        for u in bits(rows[best] & uncolored):
            seen[u] |= 1 << c
    return color


# -- exact search ------------------------------------------------------------


def _k_color(rows: Sequence[int], mask: int, k: int) -> dict[int, int] | None:
    """Backtracking k-colouring of the induced subgraph on ``mask``.

    Branches on the uncoloured vertex of highest saturation (ties: higher
    degree among uncoloured vertices, then lower index).  A new colour is only
    ever opened as the next unused one, which removes colour symmetry.
    """
    if not mask:
        return {}
    if k <= 0:
        return None
    local = {v: rows[v] & mask for v in bits(mask)}
    classes = [0] * k
    color: dict[int, int] = {}

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        best = -1
        best_key = (-1, -1)
        best_forb = 0
        for v in bits(uncolored):
            nb = local[v]
            forb = 0
            for c in range(used):
                if nb & classes[c]:
                    forb |= 1 << c
            sat = popcount(forb)
            if sat == k:
                return False
            key = (sat, popcount(nb & uncolored))
            if key > best_key:
                best, best_key, best_forb = v, key, forb
        rest = uncolored & ~(1 << best)
        bit = 1 << best
        for c in range(used):
            if best_forb >> c & 1:
                continue
            classes[c] |= bit
            color[best] = c
            if rec(rest, used):
                return True
            classes[c] &= ~bit
        if used < k:
            classes[used] |= bit
            color[best] = used
            if rec(rest, used + 1):
                return True
            classes[used] &= ~bit
        del color[best]
        return False

    return dict(color) if rec(mask, 0) else None


def _as_mask(g: Graph, within: int | Iterable[int] | None) -> int:
    if within is None:
        return g.full_mask
    if isinstance(within, int):
        return within & g.full_mask
    return mask_of(within)


def is_k_colorable(g: Graph, k: int, within: int | Iterable[int] | None = None) -> Coloring | None:
    """A k-colouring of ``g[within]`` (default: all of ``g``), or ``None``.

    The witness is canonical: colours are numbered by first appearance in
    vertex order.  Vertices outside ``within`` are left uncoloured.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    mask = _as_mask(g, within)
    found = _k_color(g.rows, mask, k)
    if found is None:
        return None
    assign = tuple(found.get(v) for v in range(g.n))
    return Coloring(max(k, 0), assign).canonical()


def colorable(g: Graph, k: int, within: int | None = None) -> bool:
    mask = g.full_mask if within is None else within
    return _k_color(g.rows, mask, k) is not None


def chromatic_number(g: Graph, within: int | Iterable[int] | None = None) -> int:
    """Exact chi of ``g[within]``; the empty vertex set has chi 0.

    Bounds first (greedy clique below, DSATUR above), then a binary search
    that confirms each midpoint with the exact k-colouring search.
    """
    mask = _as_mask(g, within)
    if not mask:
        return 0
    lo = popcount(greedy_clique(g, mask))
    hi = max(dsatur_greedy(g, mask).values()) + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _k_color(g.rows, mask, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


def optimal_coloring(g: Graph) -> Coloring:
    chi = chromatic_number(g)
    c = is_k_colorable(g, chi)
    assert c is not None
    return c


# -- Kempe chains and prescribed paths -------------------------------------------


def kempe_chain(g: Graph, c: Coloring, x: int, pi: CyclicColorPermutation) -> frozenset[int]:
    """The generalized Kempe chain from ``x`` w.r.t. ``c`` and ``pi``.

    Layer ``i+1`` consists of the neighbours of layer ``i`` that carry colour
    ``pi`` applied ``i+1`` times to ``c[x]``; the chain is the union of all
    layers.  Recolouring the chain by ``pi`` keeps the colouring proper, which
    is asserted via :func:`recolor`.
    """
    if not c.is_proper(g):
        raise ValueError("input colouring is not proper")
    if c[x] is None:
        raise ValueError(f"vertex {x} is uncoloured")
    chain = {x}
    layer = [x]
    while layer:
        nxt = []
        for y in layer:
            want = pi(c[y])  # type: ignore[arg-type]
            for z in bits(g.rows[y]):
                if z not in chain and c[z] == want:
                    chain.add(z)
                    nxt.append(z)
        layer = nxt
    out = frozenset(chain)
    recolor(g, c, out, pi)
    return out


def recolor(g: Graph, c: Coloring, chain: Iterable[int], pi: CyclicColorPermutation) -> Coloring:
    """Apply ``pi`` to the colours of ``chain``; the result must stay proper."""
    assign = list(c.assign)
    k = c.k
    for v in chain:
        new = pi(assign[v])  # type: ignore[arg-type]
        assign[v] = new
        k = max(k, new + 1)
    out = Coloring(k, tuple(assign))
    if not out.is_proper(g):
        raise AssertionError("Kempe recolouring produced an improper colouring")
    return out


def prescribed_color_path(
    g: Graph, c: Coloring, x: int, y: int, seq: Sequence[int]
) -> list[int] | None:
    """A path ``x, v_1, ..., v_i, y`` with ``c[v_t] == seq[t-1]``, or ``None``.

    ``c`` colours ``g - x - y``; the colours of ``x`` and ``y`` are ignored.
    Because the colours in ``seq`` are distinct the interior is automatically
    a set of distinct vertices.
    """
    if not g.has_edge(x, y):
        raise ValueError(f"x={x} and y={y} are not adjacent")
    if len(set(seq)) != len(seq):
        raise ValueError("colour sequence contains repeats")
    if not seq:
        raise ValueError("colour sequence must be non-empty")
    rows = g.rows
    classes = [0] * max(c.k, max(seq) + 1)
    for v, col in enumerate(c.assign):
        if col is not None and v not in (x, y):
            classes[col] |= 1 << v

    def rec(v: int, t: int) -> list[int] | None:
        if t == len(seq):
            return [v] if rows[v] >> y & 1 else None
        for w in bits(rows[v] & classes[seq[t]]):
            tail = rec(w, t + 1)
            if tail is not None:
                return [v] + tail
        return None

    found = rec(x, 0)
    return None if found is None else found + [y]


def count_cycles_through_edge(g: Graph, x: int, y: int, length: int) -> int:
    """Number of cycles of exactly ``length`` edges that use the edge ``xy``.

    Each such cycle is counted once as an ``x``-``y`` path of ``length - 1``
    edges avoiding the direct edge.
    """
    if not g.has_edge(x, y):
        raise ValueError(f"x={x} and y={y} are not adjacent")
    if length < 3:
        return 0
    rows = g.rows
    target = length - 1

    def rec(v: int, used: int, depth: int) -> int:
        if depth == target - 1:
            return 1 if rows[v] >> y & 1 else 0
        total = 0
        for w in bits(rows[v] & ~used & ~(1 << y)):
            total += rec(w, used | 1 << w, depth + 1)
        return total

    return rec(x, 1 << x | 1 << y, 0)
