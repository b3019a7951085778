"""Write the networkx graph atlas (every graph on at most 7 vertices) as a
graph6 file using networkx's own encoder, for use as an external corpus."""

import argparse
from pathlib import Path

import networkx as nx


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=Path, nargs="?", default=Path("tests/data/atlas.g6"))
    args = ap.parse_args()
    with args.out.open("w") as fh:
        for g in nx.graph_atlas_g()[1:]:  # skip the null graph
            fh.write(nx.to_graph6_bytes(g, header=False).decode())
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
