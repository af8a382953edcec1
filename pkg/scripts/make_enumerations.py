"""Write the enumeration and fixture files under tests/data.

networkx supplies the raw enumerations (graph atlas up to 7 vertices,
nonisomorphic trees); files are written in graph6, one graph per line,
ordered by vertex count and then by graph6 string.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import networkx as nx

from tdcolor.graph import Graph, path_graph, complete_bipartite, to_edge_list, to_graph6

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def _from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges))


def isolate_free_graphs(lo: int, hi: int) -> list[str]:
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if lo <= n <= hi and all(d > 0 for _, d in h.degree):
            out.append((n, to_graph6(_from_nx(h))))
    return [s for _, s in sorted(out)]


def trees(lo: int, hi: int) -> list[str]:
    out = []
    for n in range(lo, hi + 1):
        out += sorted(to_graph6(_from_nx(t)) for t in nx.nonisomorphic_trees(n))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DATA)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    graphs = isolate_free_graphs(2, 7)
    (args.out / "isolate_free_n2-7.g6").write_text("\n".join(graphs) + "\n")
    tree_list = trees(2, 12)
    (args.out / "trees_n2-12.g6").write_text("\n".join(tree_list) + "\n")

    (args.out / "p11.el").write_text(to_edge_list(path_graph(11)))
    (args.out / "p6.el").write_text(to_edge_list(path_graph(6)))
    (args.out / "k23.el").write_text(to_edge_list(complete_bipartite(2, 3)))
    # a TD-coloring of P_11 with 7 classes, one of them the four vertices {0, 3, 7, 10}
    seven = {"colors": [7, 1, 2, 7, 6, 5, 6, 7, 3, 4, 7]}
    (args.out / "p11_seven.json").write_text(json.dumps(seven) + "\n")
    print(f"{len(graphs)} isolate-free graphs, {len(tree_list)} trees -> {args.out}")


if __name__ == "__main__":
    main()
