"""Table of double-critical edge counts for joins of odd cycles with small
complete graphs, compared with the exact 5-critical bound."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from dclab.critical import bound_c, double_critical_edges, is_vertex_critical
from dclab.graph import complete, cycle, h_graph, join


@dataclass
class TableConfig:
    lengths: tuple[int, ...] = (5, 7, 9, 11)
    h_orders: tuple[int, ...] = (6, 7)


def run(cfg: TableConfig) -> None:
    print(f"{'graph':<12}{'n':>4}{'m':>6}{'dc':>6}{'ratio':>10}{'bound':>10}")
    for ell in cfg.lengths:
        g = join(cycle(ell), complete(2))
        dc = len(double_critical_edges(g))
        assert is_vertex_critical(g)
        print(f"{f'C{ell}+K2':<12}{g.n:>4}{g.m:>6}{dc:>6}{str(Fraction(dc, g.m)):>10}{str(bound_c(g.n, g.m)):>10}")
    for k in cfg.h_orders:
        for ell in cfg.lengths[:3]:
            g = h_graph(k, ell)
            dc = len(double_critical_edges(g))
            print(f"{f'H({k},{ell})':<12}{g.n:>4}{g.m:>6}{dc:>6}{float(Fraction(dc, g.m)):>10.4f}{'':>10}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", type=int, nargs="+", default=[5, 7, 9, 11])
    args = ap.parse_args()
    run(TableConfig(lengths=tuple(args.lengths)))


if __name__ == "__main__":
    main()
