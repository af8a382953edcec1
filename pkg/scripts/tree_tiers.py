"""Tier census of all nonisomorphic trees, and the smallest tree needing gamma_t + 2 colors.

Reads tests/data/trees_n2-12.g6 (see make_enumerations.py); trees are in
(n, graph6) order, so the first GAMMA_T_PLUS_2 hit is the smallest such tree.
"""

from __future__ import annotations

import argparse
from collections import Counter
from pathlib import Path

from tdcolor.exact import chi_td_exact
from tdcolor.graph import parse_graph6
from tdcolor.trees import Tier, classify_tree

DEFAULT = Path(__file__).resolve().parent.parent / "tests" / "data" / "trees_n2-12.g6"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trees", type=Path, default=DEFAULT)
    args = ap.parse_args()
    census: dict[int, Counter] = {}
    first_plus_2 = None
    for line in args.trees.read_text().split():
        t = parse_graph6(line)
        r = classify_tree(t, cross_check_max_n=0)
        assert r.chi_td == chi_td_exact(t).value, line
        census.setdefault(t.n, Counter())[r.tier] += 1
        if r.tier == Tier.GAMMA_T_PLUS_2 and first_plus_2 is None:
            first_plus_2 = (line, t.sorted_edges())
    print(" n  " + "  ".join(f"{tier.name:>15}" for tier in Tier))
    for n, counts in sorted(census.items()):
        print(f"{n:2}  " + "  ".join(f"{counts[tier]:>15}" for tier in Tier))
    if first_plus_2:
        print(f"smallest gamma_t + 2 tree: {first_plus_2[0]} edges {first_plus_2[1]}")


if __name__ == "__main__":
    main()
