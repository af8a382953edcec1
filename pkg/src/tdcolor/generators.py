"""Seeded random instances for each supported graph class.

Every generator returns isolate-free graphs with vertex ids shuffled, so
recognizers never see a conveniently ordered input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

CLASSES = ("tree", "cograph", "chain", "split", "bipartite", "any")


class UnsatisfiableSpec(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    cls: str
    n: int
    seed: int
    k: int | None = None  # chain: number of blocks per side
    connected: bool | None = None  # cograph/bipartite; None = random (cograph) or no constraint
    p: float = 0.4  # bipartite/any: extra edge probability
    max_arity: int = 3  # cograph: children per cotree node


def _shuffled(rng: random.Random, n: int, edges: list[tuple[int, int]]) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges))


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Uniform random composition of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_tree(rng: random.Random, n: int) -> Graph:
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def _cotree_edges(rng: random.Random, verts: list[int], join: bool, arity: int) -> list[tuple[int, int]]:
    if len(verts) == 1:
        return []
    r = rng.randint(2, min(arity, len(verts)))
    sizes = _composition(rng, len(verts), r)
    parts, start = [], 0
    for s in sizes:
        parts.append(verts[start:start + s])
        start += s
    edges = []
    for part in parts:
        edges += _cotree_edges(rng, part, not join, arity)
    if join:
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                edges += [(u, v) for u in a for v in b]
    return edges


def random_cograph(rng: random.Random, n: int, connected: bool | None, arity: int) -> Graph:
    if connected is None:
        connected = n < 4 or rng.random() < 0.5
    verts = list(range(n))
    if connected:
        edges = _cotree_edges(rng, verts, True, arity)
    else:
        if n < 4:
            raise UnsatisfiableSpec("a disconnected isolate-free cograph needs n >= 4")
        # components of size >= 2, each a connected (JOIN-rooted) cograph
        r = rng.randint(2, min(arity, n // 2))
        sizes = [s + 1 for s in _composition(rng, n - r, r)]
        edges, start = [], 0
        for s in sizes:
            edges += _cotree_edges(rng, verts[start:start + s], True, arity)
            start += s
    return _shuffled(rng, n, edges)


def random_chain(rng: random.Random, n: int, k: int | None) -> Graph:
    if k is None:
        k = rng.randint(1, n // 2)
    if k < 1 or 2 * k > n:
        raise UnsatisfiableSpec(f"chain graph with k={k} blocks per side needs n >= {2 * k}")
    nx_ = rng.randint(k, n - k)
    xs = _composition(rng, nx_, k)
    ys = _composition(rng, n - nx_, k)
    x_block, y_block = [], []
    for i, s in enumerate(xs):
        x_block += [i] * s
    for j, s in enumerate(ys):
        y_block += [j] * s
    edges = [
        (x, nx_ + y)
        for x, i in enumerate(x_block)
        for y, j in enumerate(y_block)
        if j <= i
    ]
    return _shuffled(rng, n, edges)


def random_split(rng: random.Random, n: int) -> Graph:
    """Connected split graph whose clique K is maximum (omega = |K| >= 2)."""
    q = rng.randint(2, n)
    edges = [(u, v) for u in range(q) for v in range(u + 1, q)]
    for w in range(q, n):
        size = rng.randint(1, q - 1)
        edges += [(w, u) for u in rng.sample(range(q), size)]
    return _shuffled(rng, n, edges)


def random_bipartite(rng: random.Random, n: int, p: float, connected: bool | None) -> Graph:
    a = rng.randint(1, n - 1)
    xs, ys = list(range(a)), list(range(a, n))
    edges = set()
    if connected:
        placed_x, placed_y = [xs[0]], [ys[0]]
        edges.add((xs[0], ys[0]))
        rest = xs[1:] + ys[1:]
        rng.shuffle(rest)
        for v in rest:
            if v < a:
                edges.add((v, rng.choice(placed_y)))
                placed_x.append(v)
            else:
                edges.add((rng.choice(placed_x), v))
                placed_y.append(v)
    for x in xs:
        for y in ys:
            if rng.random() < p:
                edges.add((x, y))
    touched = {v for e in edges for v in e}
    for v in range(n):
        if v not in touched:
            edges.add((v, rng.choice(ys)) if v < a else (rng.choice(xs), v))
    return _shuffled(rng, n, sorted(edges))


def random_any(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    touched = {v for e in edges for v in e}
    for v in range(n):
        if v not in touched:
            u = rng.choice([w for w in range(n) if w != v])
            edges.add((min(u, v), max(u, v)))
            touched.update((u, v))
    return _shuffled(rng, n, sorted(edges))


def generate(spec: GenSpec) -> Graph:
    if spec.n < 2:
        raise UnsatisfiableSpec("n >= 2 is required for an isolate-free graph")
    rng = random.Random(spec.seed)
    if spec.cls == "tree":
        return _shuffled(rng, spec.n, sorted(random_tree(rng, spec.n).edges))
    if spec.cls == "cograph":
        return random_cograph(rng, spec.n, spec.connected, spec.max_arity)
    if spec.cls == "chain":
        return random_chain(rng, spec.n, spec.k)
    if spec.cls == "split":
        return random_split(rng, spec.n)
    if spec.cls == "bipartite":
        return random_bipartite(rng, spec.n, spec.p, spec.connected)
    if spec.cls == "any":
        return random_any(rng, spec.n, spec.p)
    raise UnsatisfiableSpec(f"unknown graph class {spec.cls!r}")
