"""Cograph recognition by recursive complement decomposition, and chi_td.

A connected cograph's proper colorings are all TD-colorings, so
chi_td = chi there; with k >= 2 components, each component needs two
colors of its own and chi_td = chi + 2(k - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..coloring import Coloring, is_td_coloring
from ..domination import require_isolate_free
from ..graph import Graph, bits
from .base import ClassSolution, NotInClassError, Rejection

UNION = "UNION"
JOIN = "JOIN"
LEAF = "LEAF"


@dataclass(frozen=True)
class Cotree:
    label: str
    children: tuple[Cotree, ...] = ()
    vertex: int | None = None

    def leaves(self) -> list[int]:
        if self.label == LEAF:
            return [self.vertex]
        return sorted(v for c in self.children for v in c.leaves())

    def edges(self) -> set[tuple[int, int]]:
        if self.label == LEAF:
            return set()
        out = set().union(*(c.edges() for c in self.children))
        if self.label == JOIN:
            parts = [c.leaves() for c in self.children]
            for i, p in enumerate(parts):
                for q in parts[i + 1:]:
                    out.update((min(a, b), max(a, b)) for a in p for b in q)
        return out

    def evaluate(self, n: int) -> Graph:
        return Graph.from_edges(n, self.edges())

    def is_canonical(self) -> bool:
        return all(
            c.label != self.label and len(self.children) >= 2 and c.is_canonical()
            for c in self.children
        )

    def to_dict(self) -> dict:
        if self.label == LEAF:
            return {"leaf": self.vertex}
        return {"op": self.label, "children": [c.to_dict() for c in self.children]}


class _Found(Exception):
    def __init__(self, p4: tuple[int, int, int, int]) -> None:
        self.p4 = p4


def _subset_components(masks: list[int], subset: int) -> list[int]:
    comps = []
    left = subset
    while left:
        frontier = left & -left
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            frontier = nxt & subset & ~comp
        comps.append(comp)
        left &= ~comp
    return comps


def _induced_p4(g: Graph, subset: int) -> tuple[int, int, int, int]:
    m = g.masks
    for b in bits(subset):
        for c in bits(m[b] & subset):
            ends_a = m[b] & subset & ~m[c] & ~(1 << c)
            ends_d = m[c] & subset & ~m[b] & ~(1 << b)
            for a in bits(ends_a):
                far = ends_d & ~m[a]
                if far:
                    return a, b, c, (far & -far).bit_length() - 1
    raise AssertionError("graph and complement both connected but no induced P4 found")


def recognize_cograph(g: Graph) -> Cotree | Rejection:
    """Canonical cotree, or a rejection carrying an induced P4 ``(a, b, c, d)``."""
    if g.n == 0:
        return Rejection("empty graph")
    masks = list(g.masks)
    co_masks = [g.full_mask & ~masks[v] & ~(1 << v) for v in range(g.n)]

    def build(subset: int) -> Cotree:
        if subset & (subset - 1) == 0:
            return Cotree(LEAF, vertex=subset.bit_length() - 1)
        comps = _subset_components(masks, subset)
        if len(comps) > 1:
            return Cotree(UNION, tuple(build(c) for c in comps))
        co = _subset_components(co_masks, subset)
        if len(co) > 1:
            return Cotree(JOIN, tuple(build(c) for c in co))
        raise _Found(_induced_p4(g, subset))

    try:
        return build(g.full_mask)
    except _Found as hit:
        return Rejection("induced P4", hit.p4)


def cotree_chromatic_number(tree: Cotree) -> int:
    if tree.label == LEAF:
        return 1
    sub = [cotree_chromatic_number(c) for c in tree.children]
    return max(sub) if tree.label == UNION else sum(sub)


def _cotree_coloring(tree: Cotree) -> dict[int, int]:
    """Optimal proper coloring with colors 1..chi, read off the cotree."""
    if tree.label == LEAF:
        return {tree.vertex: 1}
    out: dict[int, int] = {}
    offset = 0
    for child in tree.children:
        sub = _cotree_coloring(child)
        if tree.label == UNION:
            out.update(sub)
        else:
            out.update({v: c + offset for v, c in sub.items()})
            offset += max(sub.values())
    return out


def _exclusive_pair(tree: Cotree, colors: dict[int, int]) -> tuple[int, int]:
    # connected cograph on >= 2 vertices: root is a JOIN, so one class from
    # each side of the first split is dominated by everything on the other side
    first, *rest = tree.children
    a = colors[min(first.leaves())]
    b = colors[min(v for c in rest for v in c.leaves())]
    return a, b


def chi_td_cograph(g: Graph) -> ClassSolution:
    require_isolate_free(g)
    tree = recognize_cograph(g)
    if isinstance(tree, Rejection):
        raise NotInClassError(f"not a cograph: induced P4 {tree.certificate}")
    comps = tree.children if tree.label == UNION else (tree,)
    chis = [cotree_chromatic_number(c) for c in comps]
    chi = max(chis)
    k = len(comps)
    shared = chi - 2
    colors = [0] * g.n
    for i, comp in enumerate(comps):
        local = _cotree_coloring(comp)
        if k == 1:
            mapping = {c: c for c in set(local.values())}
        else:
            ex = _exclusive_pair(comp, local)
            others = sorted(set(local.values()) - set(ex))
            mapping = {c: j for j, c in enumerate(others, start=1)}
            mapping[ex[0]] = shared + 2 * i + 1
            mapping[ex[1]] = shared + 2 * i + 2
        for v, c in local.items():
            colors[v] = mapping[c]
    coloring = Coloring.normalized(colors)
    value = chi + 2 * (k - 1)
    assert coloring.num_colors == value and is_td_coloring(g, coloring)
    return ClassSolution(value, coloring)

