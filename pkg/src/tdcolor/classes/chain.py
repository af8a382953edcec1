"""Chain graphs: nested-neighborhood recognition and chi_td in {2, 3, 4}."""

from __future__ import annotations

from dataclasses import dataclass

from ..coloring import Coloring, is_td_coloring
from ..domination import require_isolate_free
from ..graph import Graph, bits, to_mask
from .base import ClassSolution, NotInClassError, Rejection
from .bipartite import recognize_bipartite


@dataclass(frozen=True)
class ChainPartition:
    x_blocks: tuple[frozenset[int], ...]
    y_blocks: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.x_blocks)

    @property
    def x(self) -> frozenset[int]:
        return frozenset().union(*self.x_blocks)

    @property
    def y(self) -> frozenset[int]:
        return frozenset().union(*self.y_blocks)

    def problems(self, g: Graph) -> list[str]:
        out = []
        if len(self.y_blocks) != self.k:
            out.append("X and Y have different block counts")
            return out
        if any(not b for b in self.x_blocks + self.y_blocks):
            out.append("empty block")
        if self.x & self.y or self.x | self.y != frozenset(range(g.n)):
            out.append("X and Y do not partition V")
        for i in range(self.k):
            want_x = to_mask(frozenset().union(*self.y_blocks[: i + 1]))
            want_y = to_mask(frozenset().union(*self.x_blocks[i:]))
            if any(g.masks[x] != want_x for x in self.x_blocks[i]):
                out.append(f"X_{i + 1} vertex with the wrong neighborhood")
            if any(g.masks[y] != want_y for y in self.y_blocks[i]):
                out.append(f"Y_{i + 1} vertex with the wrong neighborhood")
        return out

    def to_dict(self) -> dict:
        return {"X": [sorted(b) for b in self.x_blocks], "Y": [sorted(b) for b in self.y_blocks]}


def recognize_chain(g: Graph) -> ChainPartition | Rejection:
    """Chain partition with X taken as the side of vertex 0."""
    require_isolate_free(g)
    if not g.is_connected():
        return Rejection("disconnected")
    sides = recognize_bipartite(g)
    if isinstance(sides, Rejection):
        return Rejection("not bipartite", sides.certificate)
    x_side = sides.x if 0 in sides.x else sides.y
    xs = sorted(x_side, key=lambda v: (g.degree(v), v))
    m = g.masks
    for a, b in zip(xs, xs[1:]):
        if m[a] & ~m[b]:
            return Rejection("neighborhoods not nested", (a, b))
    x_blocks: list[list[int]] = []
    for v in xs:
        if x_blocks and m[x_blocks[-1][0]] == m[v]:
            x_blocks[-1].append(v)
        else:
            x_blocks.append([v])
    y_blocks = []
    seen = 0
    for block in x_blocks:
        nb = m[block[0]]
        y_blocks.append(frozenset(bits(nb & ~seen)))
        seen |= nb
    part = ChainPartition(tuple(frozenset(b) for b in x_blocks), tuple(y_blocks))
    assert not part.problems(g)
    return part


def chain_coloring(g: Graph, part: ChainPartition) -> Coloring:
    """The explicit 2-, 3- or 4-class TD-coloring for chain length k = 1, 2, >= 3."""
    colors = [0] * g.n
    k = part.k
    y1, xk = part.y_blocks[0], part.x_blocks[-1]
    for v in range(g.n):
        in_x = v in part.x
        if k == 1:
            colors[v] = 2 if in_x else 1
        elif k == 2:
            colors[v] = 1 if v in y1 else 2 if v in xk else 3
        else:
            colors[v] = 1 if v in y1 else 2 if v in xk else 3 if in_x else 4
    return Coloring(tuple(colors))


def chi_td_chain(g: Graph) -> ClassSolution:
    part = recognize_chain(g)
    if isinstance(part, Rejection):
        raise NotInClassError(f"not a chain graph: {part.reason}")
    coloring = chain_coloring(g, part)
    value = min(part.k, 3) + 1
    assert coloring.num_colors == value and is_td_coloring(g, coloring)
    return ClassSolution(value, coloring)
