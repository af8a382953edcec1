"""Split graphs: degree-sequence recognition and chi_td in {omega, omega + 1}."""

from __future__ import annotations

from dataclasses import dataclass

from ..coloring import Coloring, is_td_coloring
from ..domination import require_isolate_free
from ..exact import chi_d_exact, feasible_td_coloring
from ..graph import Graph, max_clique, to_mask
from .base import ClassSolution, NotInClassError, Rejection


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    @property
    def omega(self) -> int:
        return len(self.clique)

    def to_dict(self) -> dict:
        return {"K": sorted(self.clique), "I": sorted(self.independent)}


def recognize_split(g: Graph) -> SplitPartition | Rejection:
    """Hammer-Simeone degree test, then grow K to a maximum clique.

    With degrees sorted descending and m = max{i : d_i >= i - 1}, the graph
    is split iff sum_{i<=m} d_i = m(m - 1) + sum_{i>m} d_i; the top-m
    vertices then form a clique. A vertex of I seeing all of K is moved in.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return Rejection("degree sequence fails the split criterion")
    clique = set(order[:m])
    kmask = to_mask(clique)
    for v in sorted(set(range(g.n)) - clique):
        if g.masks[v] & kmask == kmask:
            clique.add(v)
            break
    part = SplitPartition(frozenset(clique), frozenset(range(g.n)) - frozenset(clique))
    kmask = to_mask(part.clique)
    imask = to_mask(part.independent)
    assert all((g.masks[v] | 1 << v) & kmask == kmask for v in part.clique)
    assert all(g.masks[v] & imask == 0 for v in part.independent)
    if len(max_clique(g)) != part.omega:
        raise AssertionError("split partition clique is not maximum")
    return part


def omega_plus_one_coloring(g: Graph, part: SplitPartition) -> Coloring:
    """Unique colors on K and one extra color shared by all of I."""
    colors = [0] * g.n
    for i, v in enumerate(sorted(part.clique), start=1):
        colors[v] = i
    for v in part.independent:
        colors[v] = part.omega + 1
    return Coloring(tuple(colors))


def chi_td_split(g: Graph, budget: int | None = None) -> ClassSolution:
    """chi_td of a connected split graph.

    The value equals chi_d (omega >= 2 always holds here), and is confirmed
    by an exact feasibility check at omega colors.
    """
    require_isolate_free(g)
    if not g.is_connected():
        raise NotInClassError("split solver needs a connected graph")
    part = recognize_split(g)
    if isinstance(part, Rejection):
        raise NotInClassError(f"not a split graph: {part.reason}")
    omega = part.omega
    value = chi_d_exact(g, budget).value
    at_omega = feasible_td_coloring(g, omega, budget)
    if (at_omega is not None) != (value == omega) or not omega <= value <= omega + 1:
        raise AssertionError(f"chi_d = {value} disagrees with the TD feasibility check at omega = {omega}")
    coloring = at_omega if at_omega is not None else omega_plus_one_coloring(g, part)
    assert coloring.num_colors == value and is_td_coloring(g, coloring)
    return ClassSolution(value, coloring)
