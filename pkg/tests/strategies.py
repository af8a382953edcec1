"""Hypothesis strategies for small graphs."""

from __future__ import annotations

from hypothesis import strategies as st

from tdcolor.graph import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, isolate_free: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, keep in zip(pairs, mask) if keep}
    if isolate_free:
        touched = {v for e in edges for v in e}
        for v in range(n):
            if v not in touched:
                u = draw(st.sampled_from([w for w in range(n) if w != v]))
                edges.add((min(u, v), max(u, v)))
                touched |= {u, v}
    return Graph.from_edges(n, edges)


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, ((perm[p], perm[v]) for v, p in enumerate(parents, start=1)))
