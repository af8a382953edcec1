"""Undirected simple graphs on vertices ``0..n-1`` plus text formats.

Vertex sets are plain ``frozenset[int]`` at the API boundary; hot loops in
the solvers use the integer bitmasks exposed by :attr:`Graph.masks`.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

VertexSet = frozenset


class GraphFormatError(ValueError):
    """Raised for malformed edge-list or graph6 input."""


def bits(mask: int) -> list[int]:
    """Vertex ids set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, frozenset(canon), tuple(tuple(sorted(a)) for a in nbrs))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open-neighborhood bitmask per vertex."""
        return tuple(to_mask(a) for a in self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v])

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1`` and the local-to-original map."""
        keep = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(keep)}
        sub = [(local[u], local[v]) for u, v in self.edges if u in local and v in local]
        return Graph.from_edges(len(keep), sub), keep

    def complement(self) -> Graph:
        return Graph.from_edges(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)),
        )

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        return self.n <= 1 or len(component_vertex_sets(self)) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


# -- parsing / serialization -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, parts) for i, parts in lines if parts and not parts[0].startswith("#")]
    if not lines:
        raise GraphFormatError("line 1: missing 'n m' header")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"line {lineno}: header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, parts in body:
        u, v = _ints(parts, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(parts: list[str], lineno: int, count: int) -> list[int]:
    if len(parts) != count:
        raise GraphFormatError(f"line {lineno}: expected {count} integers, got {len(parts)} fields")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer field") from None


def to_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError("graph6 byte outside the printable range 63..126")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise GraphFormatError("bad graph6 header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(f"graph6 bit field has {len(body)} bytes, expected {need}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bitlist = [int(g.has_edge(u, v)) for v in range(1, n) for u in range(v)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = [int("".join(map(str, bitlist[i:i + 6])), 2) for i in range(0, len(bitlist), 6)]
    return "".join(chr(63 + d) for d in head + body)


def read_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse either format; ``auto`` picks graph6 for a single-token input."""
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise ValueError(f"unknown graph format {fmt!r}")
    stripped = text.strip()
    if stripped and len(stripped.split()) == 1 and not stripped.isdigit():
        return parse_graph6(stripped)
    return parse_edge_list(text)


# -- queries -----------------------------------------------------------------


def is_isolate_free(g: Graph) -> bool:
    return all(g.adj[v] for v in range(g.n))


def component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Induced component subgraphs ordered by smallest original vertex id."""
    return [g.induced(c) for c in component_vertex_sets(g)]


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique, by branch and bound over candidate bitmasks."""
    masks = g.masks
    best = 0

    def expand(clique: int, cand: int) -> None:
        nonlocal best
        if clique.bit_count() > best.bit_count():
            best = clique
        while cand:
            if clique.bit_count() + cand.bit_count() <= best.bit_count():
                return
            low = cand & -cand
            expand(clique | low, cand & masks[low.bit_length() - 1])
            cand ^= low

    expand(0, g.full_mask)
    return frozenset(bits(best))
