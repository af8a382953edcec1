"""Exact chromatic, total dominator and dominator chromatic numbers.

All three share one backtracking engine. Vertices are colored in a fixed
order (descending degree, ties by id) and a new color may only be opened
as ``max used + 1``, so every set partition is visited at most once. For
the domination variants each vertex ``v`` carries a target mask: some
nonempty color class must end up inside it (``N(v)`` for TD-colorings,
``N[v]`` for dominator colorings). A branch dies as soon as some vertex
has no class that could still satisfy this.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .coloring import Coloring
from .domination import gamma_t_exact, require_isolate_free
from .graph import Graph, max_clique


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    lower_bound_used: int
    upper_bound_used: int
    nodes: int = 0


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int | None) -> None:
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")


def search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def iter_colorings(
    g: Graph,
    k: int,
    targets: Sequence[int] | None = None,
    counter: _Counter | None = None,
) -> Iterator[tuple[int, ...]]:
    """Proper colorings with at most ``k`` colors, one per set partition.

    With ``targets`` given, only colorings in which every vertex ``v`` has a
    nonempty class contained in ``targets[v]`` are produced. Colors in the
    output are 1-based in order of first use along :func:`search_order`.
    """
    n = g.n
    if n == 0:
        yield ()
        return
    masks = g.masks
    order = search_order(g)
    counter = counter or _Counter(None)
    colors = [0] * n
    classes = [0] * k
    check = list(range(n)) if targets is not None else []

    def alive(used: int, unassigned: int) -> bool:
        spare = used < k
        for v in check:
            tv = targets[v]
            if spare and unassigned & tv:
                continue
            for j in range(used):
                if classes[j] & ~tv == 0:
                    break
            else:
                return False
        return True

    def rec(pos: int, used: int, unassigned: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(colors)
            return
        v = order[pos]
        bit = 1 << v
        rest = unassigned & ~bit
        nbr = masks[v]
        for j in range(min(used + 1, k)):
            if classes[j] & nbr:
                continue
            counter.tick()
            classes[j] |= bit
            colors[v] = j + 1
            new_used = used + 1 if j == used else used
            if alive(new_used, rest):
                yield from rec(pos + 1, new_used, rest)
            classes[j] &= ~bit
        colors[v] = 0

    yield from rec(0, 0, g.full_mask)


def td_targets(g: Graph) -> list[int]:
    return list(g.masks)


def dominator_targets(g: Graph) -> list[int]:
    return [m | 1 << v for v, m in enumerate(g.masks)]


def _first(g: Graph, k: int, targets, counter: _Counter) -> Coloring | None:
    for colors in iter_colorings(g, k, targets, counter):
        return Coloring.normalized(colors)
    return None


def _solve(g: Graph, lower: int, upper: int, targets, budget: int | None) -> SolveResult:
    counter = _Counter(budget)
    for k in range(lower, upper + 1):
        found = _first(g, k, targets, counter)
        if found is not None:
            return SolveResult(found.num_colors, found, lower, upper, counter.nodes)
    raise AssertionError(f"no coloring within the upper bound {upper}")


def _greedy_colors(g: Graph) -> int:
    colors: dict[int, int] = {}
    for v in search_order(g):
        taken = {colors[u] for u in g.adj[v] if u in colors}
        colors[v] = next(c for c in range(1, g.n + 2) if c not in taken)
    return max(colors.values(), default=0)


def chi_exact(g: Graph, budget: int | None = None) -> SolveResult:
    if g.n == 0:
        return SolveResult(0, Coloring(()), 0, 0)
    lower = max(1, len(max_clique(g)))
    return _solve(g, lower, _greedy_colors(g), None, budget)


def chi_td_exact(g: Graph, budget: int | None = None) -> SolveResult:
    require_isolate_free(g)
    gamma = gamma_t_exact(g).gamma_t
    chi = chi_exact(g, budget).value
    return _solve(g, max(gamma, chi), gamma + chi, td_targets(g), budget)


def chi_d_exact(g: Graph, budget: int | None = None) -> SolveResult:
    if g.n == 0:
        return SolveResult(0, Coloring(()), 0, 0)
    chi = chi_exact(g, budget).value
    return _solve(g, chi, g.n, dominator_targets(g), budget)


def feasible_td_coloring(g: Graph, k: int, budget: int | None = None) -> Coloring | None:
    """Some TD-coloring using at most ``k`` colors, or None if there is none."""
    require_isolate_free(g)
    if k < 1:
        return None
    return _first(g, k, td_targets(g), _Counter(budget))


def iter_td_colorings(g: Graph, k: int, budget: int | None = None) -> Iterator[Coloring]:
    """Every TD-coloring with at most ``k`` colors, each partition once."""
    require_isolate_free(g)
    for colors in iter_colorings(g, k, td_targets(g), _Counter(budget)):
        yield Coloring.normalized(colors)
