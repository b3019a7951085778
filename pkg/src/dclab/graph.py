"""Simple undirected graphs on at most 62 vertices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and subset tests are single integer operations.  Graphs are
immutable; every operation returns a new graph.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

MAX_VERTICES = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A simple graph with vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask.  The constructor
    checks symmetry and the absence of loops.
    """

    n: int
    rows: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self, within: int | None = None) -> bool:
        mask = self.full_mask if within is None else within
        if not mask:
            return True
        return component_of(self, mask & -mask, mask) == mask

    def __str__(self) -> str:
        return write_graph6(self)


def component_of(g: Graph, seed: int, within: int) -> int:
    """The vertex mask of the component of ``g[within]`` containing ``seed``."""
    seen = seed & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    mask = g.full_mask if within is None else within
    out = []
    while mask:
        comp = component_of(g, mask & -mask, mask)
        out.append(comp)
        mask &= ~comp
    return out


# -- structural operations ---------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def relabel(g: Graph, order: list[int]) -> Graph:
    """The graph whose vertex ``i`` is vertex ``order[i]`` of ``g``.

    ``order`` may be any list of distinct vertices; the result is the induced
    subgraph on them.
    """
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(g.rows[v]):
            if u in pos:
                r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(order), tuple(rows))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabelled ``0..|S|-1`` in increasing order."""
    order = sorted(set(vertices))
    if not order:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    if order[0] < 0 or order[-1] >= g.n:
        raise ValueError("vertex out of range")
    return relabel(g, order)


def neighborhood_graph(g: Graph, x: int) -> Graph:
    """``G_x``: the subgraph induced by the open neighbourhood of ``x``."""
    return induced(g, bits(g.rows[x]))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = mask_of(vertices)
    return relabel(g, [v for v in range(g.n) if not drop >> v & 1])


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.rows)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(g.n, g.edges() + list(edges))


def contract_set(g: Graph, vertices: Iterable[int]) -> Graph:
    """Contract a connected vertex set into its lowest-indexed vertex.

    The remaining vertices are relabelled densely in their original order.
    """
    u_mask = mask_of(vertices)
    if not u_mask:
        raise ValueError("cannot contract an empty set")
    if u_mask >> g.n:
        raise ValueError("vertex out of range")
    if component_of(g, u_mask & -u_mask, u_mask) != u_mask:
        raise ValueError("contracted set must induce a connected subgraph")
    keep = (u_mask & -u_mask).bit_length() - 1
    merged = 0
    for v in bits(u_mask):
        merged |= g.rows[v]
    merged &= ~u_mask
    rows = list(g.rows)
    for v in bits(u_mask):
        rows[v] = 0
    rows[keep] = merged
    for w in range(g.n):
        if w == keep or u_mask >> w & 1:
            continue
        if merged >> w & 1:
            rows[w] = (rows[w] & ~u_mask) | (1 << keep)
        else:
            rows[w] &= ~u_mask
    order = [v for v in range(g.n) if v == keep or not u_mask >> v & 1]
    return relabel(Graph(g.n, tuple(rows)), order)


def contract(g: Graph, u: int, v: int) -> Graph:
    """Contract the edge ``uv``; the merged vertex takes index ``min(u, v)``."""
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return contract_set(g, (u, v))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    Vertices of ``g1`` keep their labels; those of ``g2`` are shifted by ``g1.n``.
    """
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise ValueError(f"join would have {n1 + n2} > {MAX_VERTICES} vertices")
    high = ((1 << n2) - 1) << n1
    rows = [r | high for r in g1.rows] + [(r << n1) | g1.full_mask for r in g2.rows]
    return Graph(n1 + n2, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    if n1 + g2.n > MAX_VERTICES:
        raise ValueError("union too large")
    return Graph(n1 + g2.n, g1.rows + tuple(r << n1 for r in g2.rows))


# -- named constructions -----------------------------------------------------


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs k >= 1")
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << v) for v in range(k)))


def cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError("cycle needs length >= 3")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def path(order: int) -> Graph:
    """``P_n``: the path on ``order`` vertices."""
    if order < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(order, [(i, i + 1) for i in range(order - 1)])


def wheel(rim: int) -> Graph:
    """Hub (vertex 0) joined to an odd cycle on vertices ``1..rim``."""
    if rim < 3 or rim % 2 == 0:
        raise ValueError("wheel rim must be an odd cycle length >= 3")
    return join(complete(1), cycle(rim))


def h_graph(k: int, length: int) -> Graph:
    """``K_{k-6}`` joined with two copies of the odd cycle ``C_length``.

    For ``k == 6`` the complete part is empty and the result is ``C ∨ C``.
    """
    if k < 6:
        raise ValueError("H(k, l) needs k >= 6")
    if length < 5 or length % 2 == 0:
        raise ValueError("H(k, l) needs an odd cycle length >= 5")
    g = join(cycle(length), cycle(length))
    if k > 6:
        g = join(complete(k - 6), g)
    return g


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes ``(i, i+5)``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


@dataclass(frozen=True)
class GraphSpec:
    """Recipe for one of the named graphs.

    ``kind`` is one of ``complete``, ``cycle``, ``path``, ``wheel``, ``join``,
    ``h``, ``complement`` or ``petersen``.  ``params`` holds integer
    parameters; ``parts`` holds sub-specs for ``join`` and ``complement``.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple[GraphSpec, ...] = ()

    def __str__(self) -> str:
        if self.kind == "complete":
            return f"K{self.params[0]}"
        if self.kind == "cycle":
            return f"C{self.params[0]}"
        if self.kind == "path":
            return f"P{self.params[0]}"
        if self.kind == "wheel":
            return f"W{self.params[0]}"
        if self.kind == "h":
            return f"H({self.params[0]},{self.params[1]})"
        if self.kind == "petersen":
            return "petersen"
        if self.kind == "complement":
            return f"co({self.parts[0]})"
        return "join(" + ",".join(str(p) for p in self.parts) + ")"


def build(spec: GraphSpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return complete(p[0])
    if kind == "cycle":
        return cycle(p[0])
    if kind == "path":
        return path(p[0])
    if kind == "wheel":
        return wheel(p[0])
    if kind == "h":
        return h_graph(p[0], p[1])
    if kind == "petersen":
        return petersen()
    if kind == "complement":
        return complement(build(spec.parts[0]))
    if kind == "join":
        if len(spec.parts) < 2:
            raise ValueError("join needs at least two parts")
        g = build(spec.parts[0])
        for part in spec.parts[1:]:
            g = join(g, build(part))
        return g
    raise ValueError(f"unknown graph kind {kind!r}")


_ATOM = re.compile(r"\s*(K|C|P|W)(\d+)\s*$")
_H = re.compile(r"\s*H\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_spec(text: str) -> GraphSpec:
    """Parse ``K6``, ``C5``, ``P4``, ``W5``, ``H(6,5)``, ``petersen``,
    ``co(<spec>)`` and ``join(<spec>,<spec>,...)``."""
    text = text.strip()
    if m := _ATOM.match(text):
        kind = {"K": "complete", "C": "cycle", "P": "path", "W": "wheel"}[m.group(1)]
        return GraphSpec(kind, (int(m.group(2)),))
    if m := _H.match(text):
        return GraphSpec("h", (int(m.group(1)), int(m.group(2))))
    if text.lower() == "petersen":
        return GraphSpec("petersen")
    for name, kind in (("co(", "complement"), ("join(", "join")):
        if text.startswith(name) and text.endswith(")"):
            parts = [parse_spec(s) for s in _split_top(text[len(name):-1])]
            if kind == "complement" and len(parts) != 1:
                raise ValueError("co() takes exactly one argument")
            return GraphSpec(kind, (), tuple(parts))
    raise ValueError(f"cannot parse graph spec {text!r}")


def _split_top(s: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(s[start:i])
            start = i + 1
    out.append(s[start:])
    return out


# -- graph6 ------------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def write_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no header, no newline)."""
    n = g.n
    out = [chr(n + 63)]
    acc = nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.  Surrounding whitespace and an optional
    ``>>graph6<<`` header are ignored."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 data") from exc
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("empty graph6 line")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range")
    n = ord(text[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"size byte {text[0]!r} encodes n > {MAX_VERTICES} (multi-byte sizes unsupported)")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = text[1:]
    if len(body) != ngroups:
        raise Graph6Error(f"expected {ngroups} data bytes for n={n}, got {len(body)}")
    acc = 0
    for ch in body:
        acc = acc << 6 | (ord(ch) - 63)
    pad = ngroups * 6 - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    acc >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if acc >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
