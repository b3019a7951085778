"""Criticality predicates, join decomposition and the double-critical edge census."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .color import chromatic_number, colorable
from .graph import Graph, components, delete_edges, delete_vertices, induced, bits, write_graph6


def is_vertex_critical(g: Graph, chi: int | None = None) -> bool:
    """True iff deleting any single vertex lowers the chromatic number."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    chi = chromatic_number(g) if chi is None else chi
    full = g.full_mask
    return all(colorable(g, chi - 1, full & ~(1 << v)) for v in range(g.n))


def is_double_critical_edge(g: Graph, x: int, y: int, chi: int | None = None) -> bool:
    chi = chromatic_number(g) if chi is None else chi
    return colorable(g, chi - 2, g.full_mask & ~(1 << x | 1 << y))


def double_critical_edges(g: Graph, chi: int | None = None) -> list[tuple[int, int]]:
    """Edges ``xy`` with ``chi(G - x - y) == chi(G) - 2``, lexicographically ordered.

    ``chi(G - x - y) >= chi(G) - 2`` always holds, so it is enough to ask for
    a ``(chi - 2)``-colouring.
    """
    chi = chromatic_number(g) if chi is None else chi
    return [(x, y) for x, y in g.edges() if is_double_critical_edge(g, x, y, chi)]


def is_double_critical(g: Graph) -> bool:
    chi = chromatic_number(g)
    if not is_vertex_critical(g, chi):
        return False
    return all(is_double_critical_edge(g, x, y, chi) for x, y in g.edges())


def is_double_edge_critical(g: Graph) -> bool:
    """Vertex-critical, and removing any two non-incident edges drops chi by two."""
    chi = chromatic_number(g)
    if not is_vertex_critical(g, chi):
        return False
    for e1, e2 in itertools.combinations(g.edges(), 2):
        if set(e1) & set(e2):
            continue
        if not colorable(delete_edges(g, (e1, e2)), chi - 2):
            return False
    return True


def is_mixed_double_critical(g: Graph) -> bool:
    """Vertex-critical, and removing any vertex ``x`` together with any edge of
    ``G - x`` drops chi by two."""
    chi = chromatic_number(g)
    if not is_vertex_critical(g, chi):
        return False
    for u, v in g.edges():
        h = delete_edges(g, [(u, v)])
        for x in range(g.n):
            if x in (u, v):
                continue
            if not colorable(h, chi - 2, h.full_mask & ~(1 << x)):
                return False
    return True


@dataclass(frozen=True)
class CriticalityVerdict:
    chi: int
    is_vertex_critical: bool
    dc_edges: tuple[tuple[int, int], ...]
    is_double_critical: bool
    is_double_edge_critical: bool
    is_mixed_double_critical: bool


def verdict(g: Graph) -> CriticalityVerdict:
    chi = chromatic_number(g)
    vc = is_vertex_critical(g, chi)
    dc_edges = tuple(double_critical_edges(g, chi))
    dc = vc and len(dc_edges) == g.m
    # both variants require vertex-criticality, so skip the expensive loops otherwise
    dec = vc and is_double_edge_critical(g)
    mixed = vc and is_mixed_double_critical(g)
    return CriticalityVerdict(chi, vc, dc_edges, dc, dec, mixed)


# -- decomposable graphs --------------------------------------------------------


def join_masks(g: Graph) -> tuple[int, int] | None:
    """Vertex masks of the two join factors (the one holding vertex 0 first)."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    full = g.full_mask
    co_rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows))
    comps = components(Graph(g.n, co_rows))
    if len(comps) < 2:
        return None
    first = comps[0]
    return first, full & ~first


def decompose_join(g: Graph) -> tuple[Graph, Graph] | None:
    """Split ``g`` as ``G1 ∨ G2`` if its complement is disconnected.

    ``G1`` is induced by the complement component containing vertex 0 and
    ``G2`` by all remaining vertices; ``None`` if ``g`` is not decomposable.
    """
    masks = join_masks(g)
    if masks is None:
        return None
    return induced(g, bits(masks[0])), induced(g, bits(masks[1]))


def is_odd_wheel(g: Graph) -> bool:
    """Some vertex is adjacent to all others and deleting it leaves an odd
    cycle of length >= 5."""
    n = g.n
    if n < 6 or n % 2:
        return False
    for v in range(n):
        if g.degree(v) == n - 1:
            rest = delete_vertices(g, [v])
            if rest.is_connected() and all(d == 2 for d in rest.degrees()):
                return True
    return False


def non_incident_dc_pair(g: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """First pair (lexicographic) of vertex-disjoint double-critical edges of a
    4-critical graph, or ``None``."""
    chi = chromatic_number(g)
    if chi != 4 or not is_vertex_critical(g, chi):
        raise ValueError("graph must be 4-critical")
    dc = double_critical_edges(g, chi)
    for e1, e2 in itertools.combinations(dc, 2):
        if not set(e1) & set(e2):
            return e1, e2
    return None


# -- census ---------------------------------------------------------------------


def bound_c(n: int, m: int) -> Fraction:
    """``(2 + 1/(3n - 5)) * m / 3`` as an exact rational."""
    return (2 + Fraction(1, 3 * n - 5)) * m / 3


@dataclass(frozen=True)
class CensusRecord:
    graph_id: str
    graph6: str
    n: int
    m: int
    chi: int
    dc_edge_count: int
    ratio: Fraction
    bound_c: Fraction
    is_decomposable: bool
    factors: tuple[str, str] | None

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "chi": self.chi,
            "dc_edge_count": self.dc_edge_count,
            "ratio": str(self.ratio),
            "bound_c": str(self.bound_c),
            "is_decomposable": self.is_decomposable,
            "factors": list(self.factors) if self.factors else None,
        }


@dataclass
class CensusSummary:
    target_chi: int
    processed: int = 0
    emitted: int = 0
    skipped_chi: int = 0
    skipped_noncritical: int = 0
    parse_errors: list[tuple[str, str]] = field(default_factory=list)
    # proven statements whose failure is a counterexample
    violations: list[dict] = field(default_factory=list)
    # equality cases of the 5-critical bound, recorded as observations only
    bound_c_equality: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "summary": True,
            "target_chi": self.target_chi,
            "processed": self.processed,
            "emitted": self.emitted,
            "skipped_chi": self.skipped_chi,
            "skipped_noncritical": self.skipped_noncritical,
            "parse_errors": [{"graph_id": i, "error": e} for i, e in self.parse_errors],
            "violations": self.violations,
            "bound_c_equality": self.bound_c_equality,
        }


def census_record(g: Graph, graph_id: str, chi: int | None = None) -> CensusRecord:
    chi = chromatic_number(g) if chi is None else chi
    dc = len(double_critical_edges(g, chi))
    m = g.m
    factors = decompose_join(g) if g.n >= 2 else None
    return CensusRecord(
        graph_id=graph_id,
        graph6=write_graph6(g),
        n=g.n,
        m=m,
        chi=chi,
        dc_edge_count=dc,
        ratio=Fraction(dc, m) if m else Fraction(0),
        bound_c=bound_c(g.n, m),
        is_decomposable=factors is not None,
        factors=None if factors is None else (write_graph6(factors[0]), write_graph6(factors[1])),
    )


def _census_one(item: tuple[str, Graph, int]) -> tuple[str, CensusRecord | None]:
    graph_id, g, target = item
    chi = chromatic_number(g)
    if chi != target:
        return "chi", None
    if not is_vertex_critical(g, chi):
        return "noncritical", None
    return "ok", census_record(g, graph_id, chi)


def _check_record(rec: CensusRecord, g: Graph, summary: CensusSummary) -> None:
    complete = rec.m == rec.n * (rec.n - 1) // 2
    if rec.chi == 4 and not complete:
        if 2 * rec.dc_edge_count > rec.m:
            summary.violations.append({"graph_id": rec.graph_id, "statement": "4-critical: dc <= m/2"})
        elif (2 * rec.dc_edge_count == rec.m) != is_odd_wheel(g):
            summary.violations.append({"graph_id": rec.graph_id, "statement": "4-critical: equality iff odd wheel"})
        if non_incident_dc_pair(g) is not None:
            summary.violations.append({"graph_id": rec.graph_id, "statement": "4-critical: no disjoint dc edges"})
    if rec.chi == 5 and not complete:
        if rec.dc_edge_count > rec.bound_c:
            summary.violations.append({"graph_id": rec.graph_id, "statement": "5-critical: dc <= bound_c"})
        elif rec.dc_edge_count == rec.bound_c:
            summary.bound_c_equality.append(rec.graph_id)
    if rec.n <= 2 * rec.chi - 2 and not rec.is_decomposable and rec.n >= 2:
        summary.violations.append({"graph_id": rec.graph_id, "statement": "critical with n <= 2k-2 is decomposable"})


def census(
    corpus: Iterable[tuple[str, Graph | Exception]],
    target_chi: int,
    summary: CensusSummary | None = None,
    jobs: int = 1,
) -> Iterator[CensusRecord]:
    """Yield a :class:`CensusRecord` for every vertex-critical graph of the
    corpus with chi equal to ``target_chi``, in input order.

    Parse failures in the corpus (items carrying an exception) are recorded in
    ``summary`` and skipped.  Records are also checked against the proven
    statements for 4-critical graphs and the 5-critical bound; anything that
    fails lands in ``summary.violations``.
    """
    if target_chi < 1:
        raise ValueError("target chi must be positive")
    summary = CensusSummary(target_chi) if summary is None else summary
    items: list[tuple[str, Graph, int]] = []
    for graph_id, g in corpus:
        summary.processed += 1
        if isinstance(g, Exception):
            summary.parse_errors.append((graph_id, str(g)))
            continue
        items.append((graph_id, g, target_chi))
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_census_one, items, chunksize=8))
    else:
        results = map(_census_one, items)
    for (graph_id, g, _), (status, rec) in zip(items, results):
        if status == "chi":
            summary.skipped_chi += 1
        elif status == "noncritical":
            summary.skipped_noncritical += 1
        else:
            assert rec is not None
            _check_record(rec, g, summary)
            summary.emitted += 1
            yield rec
