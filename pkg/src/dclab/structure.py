"""Edge neighbourhoods, clique/independence numbers, connectivity, and the
structural property suite for non-complete double-critical graphs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import asdict, dataclass, field
from math import perm

from .color import chromatic_number, colorable, is_k_colorable, prescribed_color_path
from .graph import (
    Graph,
    bits,
    complement,
    component_of,
    components,
    contract_set,
    mask_of,
    neighborhood_graph,
    popcount,
)

SEPARATOR_LIMIT = 14


# -- edge neighbourhood partition ----------------------------------------------


@dataclass(frozen=True)
class EdgeNeighborhoodPartition:
    x: int
    y: int
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    D: frozenset[int]


def _partition_masks(g: Graph, x: int, y: int) -> tuple[int, int, int, int]:
    nx, ny = g.rows[x], g.rows[y]
    a = nx & ~ny & ~(1 << y)
    b = nx & ny
    c = ny & ~nx & ~(1 << x)
    d = g.full_mask & ~(nx | ny)
    return a, b, c, d


def edge_partition(g: Graph, x: int, y: int) -> EdgeNeighborhoodPartition:
    """``A = N(x) - N[y]``, ``B = N(x) & N(y)``, ``C = N(y) - N[x]`` and ``D``
    the vertices adjacent to neither end."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    a, b, c, d = _partition_masks(g, x, y)
    fs = lambda m: frozenset(bits(m))  # noqa: E731
    return EdgeNeighborhoodPartition(x, y, fs(a), fs(b), fs(c), fs(d))


# -- cliques and independent sets ----------------------------------------------


def max_clique(g: Graph, within: int | None = None) -> int:
    """Mask of a maximum clique of ``g[within]``.

    Branch and bound with a greedy colouring bound on the candidate set.
    """
    mask = g.full_mask if within is None else within
    rows = g.rows
    best = 0
    best_size = 0

    def expand(r: int, r_size: int, cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if r_size > best_size:
                best, best_size = r, r_size
            return
        # colour the candidates greedily; colour number bounds the clique gain
        order: list[tuple[int, int]] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, color))
        for v, bound in reversed(order):
            if r_size + bound <= best_size:
                return
            expand(r | 1 << v, r_size + 1, cand & rows[v])
            cand &= ~(1 << v)

    expand(0, 0, mask)
    return best


def clique_number(g: Graph, within: int | None = None) -> int:
    return popcount(max_clique(g, within))


def max_independent_set(g: Graph, within: int | None = None) -> int:
    return max_clique(complement(g), within)


def independence_number(g: Graph, within: int | None = None) -> int:
    return popcount(max_independent_set(g, within))


def maximum_independent_sets(g: Graph) -> list[int]:
    """Every maximum independent set of ``g`` as a mask (small graphs only)."""
    alpha = independence_number(g)
    out = []
    for combo in itertools.combinations(range(g.n), alpha):
        m = mask_of(combo)
        if all(not g.rows[v] & m for v in combo):
            out.append(m)
    return out


# -- complement structure ------------------------------------------------------


@dataclass(frozen=True)
class ComplementStructure:
    isolated: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    other: bool


def complement_structure(h: Graph) -> ComplementStructure:
    """Classify the components of the complement of ``h`` as isolated
    vertices, cycles, or something else (``other``)."""
    co = complement(h)
    isolated: list[int] = []
    cycles: list[tuple[int, ...]] = []
    other = False
    for comp in components(co):
        verts = list(bits(comp))
        if len(verts) == 1:
            isolated.append(verts[0])
            continue
        if len(verts) < 3 or any(co.degree(v) != 2 for v in verts):
            other = True
            continue
        start = verts[0]
        seq = [start]
        prev, cur = start, min(co.neighbors(start))
        while cur != start:
            seq.append(cur)
            a, b = co.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(seq))
    return ComplementStructure(tuple(isolated), tuple(cycles), other)


# -- connectivity -----------------------------------------------------------------


def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity augmenting paths on the vertex-split digraph: vertex ``v``
    becomes ``v_in = 2v`` and ``v_out = 2v + 1`` joined by a unit arc.
    """
    if g.has_edge(s, t):
        raise ValueError("local connectivity is defined for non-adjacent pairs")
    inf = g.n + 1
    residual: dict[int, dict[int, int]] = {i: {} for i in range(2 * g.n)}

    def arc(a: int, b: int, c: int) -> None:
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, inf if v in (s, t) else 1)
        for u in bits(g.rows[v]):
            arc(2 * v + 1, 2 * u, inf)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    limit = inf if cap is None else cap
    while flow < limit:
        parent = {source: source}
        q = deque([source])
        while q and sink not in parent:
            a = q.popleft()
            for b, c in residual[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    q.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(g) by Menger's theorem; ``kappa(K_n) = n - 1``."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, local_connectivity(g, s, t, cap=best))
    return best


def separates(g: Graph, sep: int) -> bool:
    rest = g.full_mask & ~sep
    if popcount(rest) < 2:
        return False
    return component_of(g, rest & -rest, rest) != rest


def connectivity_by_separators(g: Graph) -> int:
    """kappa(g) as the size of a smallest separating set, found exhaustively."""
    n = g.n
    for size in range(n - 1):
        for combo in itertools.combinations(range(n), size):
            if separates(g, mask_of(combo)):
                return size
    return max(n - 1, 0)


def minimum_separators(g: Graph) -> list[frozenset[int]]:
    """All separating sets of size kappa(g), in lexicographic order."""
    if g.is_complete():
        raise ValueError("complete graphs have no separating sets")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n > SEPARATOR_LIMIT:
        raise ValueError(f"exhaustive separator search limited to n <= {SEPARATOR_LIMIT}")
    kappa = vertex_connectivity(g)
    return [
        frozenset(combo)
        for combo in itertools.combinations(range(g.n), kappa)
        if separates(g, mask_of(combo))
    ]


def split_partition(g: Graph, vertices: frozenset[int] | set[int]) -> tuple[frozenset[int], frozenset[int]] | None:
    """A partition ``(A, B)`` of ``vertices`` with ``A`` independent and ``B`` a
    clique, or ``None`` if none exists."""
    vs = sorted(vertices)
    for r in range(len(vs) + 1):
        for a in itertools.combinations(vs, r):
            am = mask_of(a)
            if any(g.rows[v] & am for v in a):
                continue
            b = [v for v in vs if not am >> v & 1]
            bm = mask_of(b)
            if all((g.rows[v] | 1 << v) & bm == bm for v in b):
                return frozenset(a), frozenset(b)
    return None


# -- property suite -------------------------------------------------------------

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


@dataclass
class Entry:
    status: str
    witness: list | None = None
    note: str = ""


@dataclass
class PropertyReport:
    n: int
    m: int
    k: int
    vertex_critical: bool
    double_critical: bool
    complete: bool
    entries: dict[str, Entry] = field(default_factory=dict)

    @property
    def failures(self) -> dict[str, Entry]:
        return {name: e for name, e in self.entries.items() if e.status == FAIL}

    @property
    def contradicts_known_results(self) -> bool:
        """A failed entry on a genuinely double-critical non-complete graph."""
        return self.double_critical and not self.complete and bool(self.failures)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["entries"] = {name: asdict(e) for name, e in self.entries.items()}
        return d


PROPOSITIONS = (
    "no_k_minus_1_subgraph",
    "contraction_colorable",
    "prescribed_paths",
    "common_neighbourhood",
    "min_degree_in_neighbourhood",
    "a_set_nonempty",
    "d_set_nonempty",
    "no_isolated_in_a_or_c",
    "no_degree_one_in_complement",
    "min_degree_k_plus_1",
    "alpha_bound",
    "neighbourhood_chi",
    "low_vertex_complement_cycles",
    "no_adjacent_low_vertices",
    "separator_not_split",
    "six_connected",
    "degree7_complement_7cycle",
    "degree9_alpha_3",
    "degree9_no_k4_minus",
    "degree9_degrees",
    "degree9_private_non_neighbours",
)


def _check(witness: list | None) -> Entry:
    return Entry(PASS) if witness is None else Entry(FAIL, witness)


def _first(iterable):
    return next(iter(iterable), None)


def _connected_sets(g: Graph, max_size: int | None) -> list[int]:
    """Connected vertex sets with at least two vertices (grown from edges)."""
    seen: set[int] = set()
    frontier = [1 << u | 1 << v for u, v in g.edges()]
    seen.update(frontier)
    while frontier:
        nxt = []
        for s in frontier:
            if max_size is not None and popcount(s) >= max_size:
                continue
            nb = 0
            for v in bits(s):
                nb |= g.rows[v]
            for w in bits(nb & ~s):
                t = s | 1 << w
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda s: (popcount(s), s))


def check_propositions(
    g: Graph, k: int, *, contraction_max_size: int | None = None
) -> dict[str, Entry]:
    """Evaluate every structural proposition on ``g`` with chromatic number ``k``.

    The propositions are only guaranteed for non-complete double-critical
    graphs; applied to other graphs they simply report what holds.  Failures
    carry a witness made of vertex indices.
    """
    n, rows = g.n, g.rows
    out: dict[str, Entry] = {}
    edges = g.edges()
    ordered = edges + [(y, x) for x, y in edges]
    deg = g.degrees()

    clique = max_clique(g)
    out["no_k_minus_1_subgraph"] = _check(sorted(bits(clique)) if popcount(clique) >= k - 1 else None)

    if contraction_max_size is None and n > SEPARATOR_LIMIT:
        contraction_max_size = 3
    bad = None
    for s in _connected_sets(g, contraction_max_size):
        if not colorable(contract_set(g, bits(s)), k - 1):
            bad = sorted(bits(s))
            break
    out["contraction_colorable"] = _check(bad)
    if contraction_max_size is not None:
        out["contraction_colorable"].note = f"connected sets of size <= {contraction_max_size}"

    # colourings of G - x - y drive the path and common-neighbourhood checks
    colorings = {}
    for x, y in edges:
        colorings[(x, y)] = is_k_colorable(g, k - 2, g.full_mask & ~(1 << x | 1 << y))

    bad = None
    for x, y in edges:
        c = colorings[(x, y)]
        if c is None:
            bad = [x, y]
            break
        for i in range(1, k - 1):
            for seq in itertools.permutations(range(k - 2), i):
                for a, b in ((x, y), (y, x)):
                    if prescribed_color_path(g, c, a, b, seq) is None:
                        bad = [a, b, *seq]
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    out["prescribed_paths"] = _check(bad)

    bad = None
    for x, y in edges:
        b = rows[x] & rows[y]
        c = colorings[(x, y)]
        if popcount(b) < k - 2 or c is None or {c[v] for v in bits(b)} != set(range(k - 2)):
            bad = [x, y]
            break
    out["common_neighbourhood"] = _check(bad)

    bad = None
    for x in range(n):
        for y in bits(rows[x]):
            if popcount(rows[x] & rows[y]) < k - 2:
                bad = [x, y]
                break
        if bad:
            break
    out["min_degree_in_neighbourhood"] = _check(bad)

    bad = _first(x for x in range(n) if not any(_partition_masks(g, x, y)[0] for y in bits(rows[x])))
    out["a_set_nonempty"] = _check(None if bad is None else [bad])

    found = _first((x, y) for x, y in edges if _partition_masks(g, x, y)[3])
    out["d_set_nonempty"] = Entry(PASS, list(found)) if found else Entry(FAIL, [])

    bad = None
    for x, y in ordered:
        a = _partition_masks(g, x, y)[0]
        iso = _first(v for v in bits(a) if not rows[v] & a)
        if iso is not None:
            bad = [x, y, iso]
            break
    out["no_isolated_in_a_or_c"] = _check(bad)

    bad = None
    for x in range(n):
        nx = rows[x]
        for y in bits(nx):
            if popcount(nx & ~rows[y] & ~(1 << y)) == 1:
                bad = [x, y]
                break
        if bad:
            break
    out["no_degree_one_in_complement"] = _check(bad)

    low = _first(v for v in range(n) if deg[v] < k + 1)
    out["min_degree_k_plus_1"] = _check(None if low is None else [low])

    bad = None
    for x in range(n):
        gx = rows[x]
        alpha = independence_number(g, gx)
        if alpha < 2 or deg[x] - alpha < k - 1:
            bad = [x]
            break
        for y in bits(gx):
            # y lies in a maximum independent set of G_x
            if 1 + independence_number(g, gx & ~rows[y] & ~(1 << y)) == alpha:
                if deg[x] - alpha < popcount(rows[x] & rows[y]) + 1:
                    bad = [x, y]
                    break
        if bad:
            break
    out["alpha_bound"] = _check(bad)

    bad = None
    for x in range(n):
        if deg[x] < n - 1 and not colorable(g, k - 3, rows[x]):
            bad = [x]
            break
    out["neighbourhood_chi"] = _check(bad)

    lows = [v for v in range(n) if deg[v] == k + 1]
    if not lows:
        out["low_vertex_complement_cycles"] = Entry(VACUOUS, note="no vertex of degree k+1")
        out["no_adjacent_low_vertices"] = Entry(VACUOUS, note="no vertex of degree k+1")
    else:
        bad = None
        for x in lows:
            cs = complement_structure(neighborhood_graph(g, x))
            if cs.other or not cs.cycles or min(len(c) for c in cs.cycles) < 5:
                bad = [x]
                break
        out["low_vertex_complement_cycles"] = _check(bad)
        pair = _first((u, v) for u, v in edges if deg[u] == deg[v] == k + 1)
        out["no_adjacent_low_vertices"] = _check(None if pair is None else list(pair))

    if g.is_complete() or not g.is_connected():
        out["separator_not_split"] = Entry(VACUOUS, note="complete or disconnected")
    elif n > SEPARATOR_LIMIT:
        out["separator_not_split"] = Entry(VACUOUS, note=f"not evaluated for n > {SEPARATOR_LIMIT}")
    else:
        bad = None
        for sep in minimum_separators(g):
            if split_partition(g, sep) is not None:
                bad = sorted(sep)
                break
        out["separator_not_split"] = _check(bad)
        out["separator_not_split"].note = "minimum-size separators"

    if k >= 6:
        kappa = vertex_connectivity(g)
        out["six_connected"] = Entry(PASS) if kappa >= 6 else Entry(FAIL, [kappa])
    else:
        out["six_connected"] = Entry(VACUOUS, note="k < 6")

    if k == 6 and lows:
        bad = None
        for x in lows:
            cs = complement_structure(neighborhood_graph(g, x))
            if cs.other or cs.isolated or len(cs.cycles) != 1:
                bad = [x]
                break
        out["degree7_complement_7cycle"] = _check(bad)
    else:
        out["degree7_complement_7cycle"] = Entry(VACUOUS, note="needs k = 6 and a vertex of degree 7")

    nines = [v for v in range(n) if deg[v] == 9] if k == 7 else []
    names = ("degree9_alpha_3", "degree9_no_k4_minus", "degree9_degrees", "degree9_private_non_neighbours")
    if not nines:
        for name in names:
            out[name] = Entry(VACUOUS, note="needs k = 7 and a vertex of degree 9")
    else:
        results: dict[str, list | None] = dict.fromkeys(names)
        for x in nines:
            gx = neighborhood_graph(g, x)
            if results["degree9_alpha_3"] is None and independence_number(gx) != 3:
                results["degree9_alpha_3"] = [x]
            if results["degree9_no_k4_minus"] is None:
                co = complement(gx)
                quad = _first(
                    q for q in itertools.combinations(range(9), 4)
                    if sum(co.has_edge(a, b) for a, b in itertools.combinations(q, 2)) >= 5
                )
                if quad is not None:
                    results["degree9_no_k4_minus"] = [x, *(list(bits(rows[x]))[i] for i in quad)]
            if results["degree9_degrees"] is None:
                off = _first(v for v in range(9) if gx.degree(v) not in (5, 6, 8))
                if off is not None:
                    results["degree9_degrees"] = [x, list(bits(rows[x]))[off]]
            if results["degree9_private_non_neighbours"] is None:
                for w in maximum_independent_sets(gx):
                    rest = gx.full_mask & ~w
                    privs = [rest & ~gx.rows[v] for v in bits(w)]
                    if any(popcount(p) != 1 for p in privs) or len(set(privs)) != len(privs):
                        results["degree9_private_non_neighbours"] = [x, *(list(bits(rows[x]))[i] for i in bits(w))]
                        break
        for name in names:
            out[name] = _check(results[name])

    return out


def verify_dc_properties(g: Graph, **kwargs) -> PropertyReport:
    """Record chi, criticality and completeness, then evaluate the property
    suite if ``g`` is double-critical and not complete (otherwise every entry
    is vacuous)."""
    from .critical import is_double_critical, is_vertex_critical

    k = chromatic_number(g)
    vc = is_vertex_critical(g)
    dc = vc and is_double_critical(g)
    rep = PropertyReport(g.n, g.m, k, vc, dc, g.is_complete())
    if dc and not rep.complete:
        rep.entries = check_propositions(g, k, **kwargs)
    else:
        why = "complete graph" if rep.complete else "not double-critical"
        rep.entries = {name: Entry(VACUOUS, note=why) for name in PROPOSITIONS}
    return rep


def kempe_cycle_bound(k: int, i: int) -> int:
    """``(k-2)! / (k-2-i)!``: the guaranteed number of cycles of length i+2."""
    return perm(k - 2, i)
