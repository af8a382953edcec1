from __future__ import annotations

from collections import deque
from typing import NamedTuple

from ..graph import Graph
from .base import Rejection


class Bipartition(NamedTuple):
    x: frozenset[int]
    y: frozenset[int]


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    rev = [rot[0]] + rot[1:][::-1]
    return tuple(min(rot, rev))


def recognize_bipartite(g: Graph) -> Bipartition | Rejection:
    """BFS 2-coloring per component; the lowest vertex of each component goes to X.

    On failure the certificate is an odd cycle, rotated to start at its
    smallest vertex.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return Rejection("odd cycle", _odd_cycle(u, w, parent, depth))
    x = frozenset(v for v in range(g.n) if side[v] == 0)
    return Bipartition(x, frozenset(range(g.n)) - x)


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left and right both end at the common ancestor
    return _canonical_cycle(left + right[-2::-1])
