"""Total domination: TD-set checks, exact gamma_t, private neighborhoods."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .graph import Graph, bits, to_mask


class IsolatedVertexError(ValueError):
    """Total domination is undefined on graphs with an isolated vertex."""


def require_isolate_free(g: Graph) -> None:
    for v in range(g.n):
        if not g.adj[v]:
            raise IsolatedVertexError(f"vertex {v} is isolated")


@dataclass(frozen=True)
class TDSetResult:
    gamma_t: int
    witness: frozenset[int]


@dataclass(frozen=True)
class PrivateStructure:
    private: dict[int, frozenset[int]]
    d_i: frozenset[int]
    d_r: frozenset[int]


def dominated_mask(g: Graph, dmask: int) -> int:
    """Vertices with at least one neighbor in ``dmask``."""
    out = 0
    for u in bits(dmask):
        out |= g.masks[u]
    return out


def is_td_set(g: Graph, d: Iterable[int]) -> bool:
    return dominated_mask(g, to_mask(d)) == g.full_mask


def _greedy_td_set(g: Graph) -> int:
    # repeatedly take the vertex totally dominating the most uncovered vertices
    uncovered = g.full_mask
    chosen = 0
    while uncovered:
        best = max(range(g.n), key=lambda v: ((g.masks[v] & uncovered).bit_count(), -v))
        chosen |= 1 << best
        uncovered &= ~g.masks[best]
    return chosen


def _search_size(g: Graph, k: int) -> int | None:
    """Some TD-set of size <= k, branching on the lowest undominated vertex."""
    masks = g.masks
    full = g.full_mask

    def rec(chosen: int, covered: int, left: int) -> int | None:
        if covered == full:
            return chosen
        if left == 0:
            return None
        rest = full & ~covered
        # each added vertex covers at most max-degree new vertices
        if rest.bit_count() > left * max((masks[v] & rest).bit_count() for v in range(g.n)):
            return None
        target = (rest & -rest).bit_length() - 1
        for u in bits(masks[target] & ~chosen):
            hit = rec(chosen | 1 << u, covered | masks[u], left - 1)
            if hit is not None:
                return hit
        return None

    return rec(0, 0, k)


def gamma_t_exact(g: Graph) -> TDSetResult:
    require_isolate_free(g)
    upper = _greedy_td_set(g)
    best = upper
    for k in range(2, upper.bit_count()):
        hit = _search_size(g, k)
        if hit is not None:
            best = hit
            break
    # report the lexicographically first minimum set for reproducibility
    size = best.bit_count()
    witness = next(iter_td_sets_of_size(g, size))
    return TDSetResult(size, witness)


def iter_td_sets_of_size(g: Graph, size: int) -> Iterator[frozenset[int]]:
    """All TD-sets of exactly ``size`` vertices in lexicographic order.

    Include-before-exclude DFS over ids 0..n-1 yields sorted tuples in
    lexicographic order; a vertex whose neighbors are all decided and
    excluded prunes the branch.
    """
    n = g.n
    masks = g.masks
    # after deciding vertex i, vertices whose whole neighborhood lies in 0..i are closed
    closes_at: list[list[int]] = [[] for _ in range(n)]
    for w in range(n):
        if masks[w]:
            closes_at[masks[w].bit_length() - 1].append(w)
    full = g.full_mask

    def rec(i: int, chosen: int, covered: int, count: int) -> Iterator[int]:
        if count == size:
            if covered == full:
                yield chosen
            return
        if i == n or n - i < size - count:
            return
        # include i
        new_cov = covered | masks[i]
        if all((new_cov >> w) & 1 for w in closes_at[i]):
            yield from rec(i + 1, chosen | 1 << i, new_cov, count + 1)
        # exclude i
        if all((covered >> w) & 1 for w in closes_at[i]):
            yield from rec(i + 1, chosen, covered, count)

    if any(not masks[w] for w in range(n)):
        return
    for m in rec(0, 0, 0, 0):
        yield frozenset(bits(m))


def all_min_td_sets(g: Graph) -> Iterator[frozenset[int]]:
    gamma = gamma_t_exact(g).gamma_t
    yield from iter_td_sets_of_size(g, gamma)


def private_neighbors(g: Graph, d: Iterable[int]) -> dict[int, frozenset[int]]:
    dmask = to_mask(d)
    return {
        u: frozenset(w for w in range(g.n) if g.masks[w] & dmask == 1 << u)
        for u in sorted(bits(dmask))
    }


def private_structure(g: Graph, d: Iterable[int]) -> PrivateStructure:
    d = frozenset(d)
    if not is_td_set(g, d):
        raise ValueError("not a total dominating set")
    pn = private_neighbors(g, d)
    d_i = frozenset(u for u, p in pn.items() if len(p) == 1)
    return PrivateStructure(pn, d_i, d - d_i)
