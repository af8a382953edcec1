"""Colorings, their validators, and the class-structure analysis of a TD-coloring."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .graph import Graph, bits


@dataclass(frozen=True)
class Coloring:
    """Vertex ``v`` has color ``colors[v]``; colors are ``1..num_colors``, all used."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        used = set(self.colors)
        if used and used != set(range(1, len(used) + 1)):
            raise ValueError("color ids must be contiguous from 1; use Coloring.normalized")

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> Coloring:
        """Relabel arbitrary hashable color ids to 1..k, keeping their relative order."""
        ranks = {c: i for i, c in enumerate(sorted(set(colors)), start=1)}
        return cls(tuple(ranks[c] for c in colors))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Sequence[int]]) -> Coloring:
        colors = [0] * n
        for i, cls_ in enumerate(classes, start=1):
            for v in cls_:
                colors[v] = i
        if 0 in colors:
            raise ValueError("classes do not cover every vertex")
        return cls.normalized(colors)

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        """Bitmask of color ``i`` at index ``i - 1``."""
        out = [0] * self.num_colors
        for v, c in enumerate(self.colors):
            out[c - 1] |= 1 << v
        return tuple(out)

    def classes(self) -> list[frozenset[int]]:
        return [frozenset(bits(m)) for m in self.class_masks]

    def to_json(self) -> str:
        return json.dumps({"colors": list(self.colors)})

    @classmethod
    def from_json(cls, text: str) -> Coloring:
        data = json.loads(text)
        if not isinstance(data, dict) or not isinstance(data.get("colors"), list):
            raise ValueError('coloring JSON must look like {"colors": [...]}')
        if not all(isinstance(c, int) for c in data["colors"]):
            raise ValueError("color ids must be integers")
        return cls.normalized(data["colors"])


def _check_size(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for a graph on {g.n} vertices")


def proper_violation(g: Graph, c: Coloring) -> tuple[int, str] | None:
    _check_size(g, c)
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            return u, f"edge {u}-{v} is monochromatic (color {c.colors[u]})"
    return None


def td_violation(g: Graph, c: Coloring) -> tuple[int, str] | None:
    """First vertex breaking the TD-coloring conditions, or None."""
    bad = proper_violation(g, c)
    if bad is not None:
        return bad
    for v in range(g.n):
        if not any(m & ~g.masks[v] == 0 for m in c.class_masks):
            return v, f"vertex {v} totally dominates no color class"
    return None


def dominator_violation(g: Graph, c: Coloring) -> tuple[int, str] | None:
    bad = proper_violation(g, c)
    if bad is not None:
        return bad
    for v in range(g.n):
        closed = g.masks[v] | 1 << v
        # a proper class inside N[v] is either {v} or lies in N(v)
        if not any(m & ~closed == 0 for m in c.class_masks):
            return v, f"vertex {v} dominates no color class"
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return proper_violation(g, c) is None


def is_td_coloring(g: Graph, c: Coloring) -> bool:
    return td_violation(g, c) is None


def is_dominator_coloring(g: Graph, c: Coloring) -> bool:
    return dominator_violation(g, c) is None


def dominated_classes(g: Graph, c: Coloring, v: int) -> tuple[int, ...]:
    """Ids of the classes that ``v`` totally dominates."""
    return tuple(i for i, m in enumerate(c.class_masks, start=1) if m & ~g.masks[v] == 0)


@dataclass(frozen=True)
class ColoringAnalysis:
    classes: tuple[frozenset[int], ...]  # classes[i - 1] is color class i
    c_p: tuple[int, ...]
    c_s: tuple[int, ...]
    c_g: tuple[int, ...]
    c_0: tuple[int, ...]
    a: frozenset[int]
    b: frozenset[int]
    d_s: frozenset[int]
    d_0: frozenset[int]
    dominated_by: tuple[tuple[int, ...], ...]

    def is_free(self, class_id: int) -> bool:
        """Every vertex totally dominates some class other than ``class_id``."""
        return all(any(i != class_id for i in doms) for doms in self.dominated_by)

    def free_classes(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, len(self.classes) + 1) if self.is_free(i))

    def to_dict(self) -> dict:
        return {
            "classes": [sorted(s) for s in self.classes],
            "C_P": list(self.c_p),
            "C_S": list(self.c_s),
            "C_G": list(self.c_g),
            "C_0": list(self.c_0),
            "A": sorted(self.a),
            "B": sorted(self.b),
            "D_S": sorted(self.d_s),
            "D_0": sorted(self.d_0),
            "free": list(self.free_classes()),
            "dominated_by": [list(d) for d in self.dominated_by],
        }


def _min_cover(dominated_by: Sequence[tuple[int, ...]], k: int) -> tuple[int, ...]:
    # combinations() is lexicographic, so ties go to lower class ids
    needs = [set(d) for d in dominated_by]
    for size in range(1, k + 1):
        for pick in combinations(range(1, k + 1), size):
            chosen = set(pick)
            if all(need & chosen for need in needs):
                return pick
    raise ValueError("some vertex dominates no class")


def analyze(g: Graph, c: Coloring) -> ColoringAnalysis:
    bad = td_violation(g, c)
    if bad is not None:
        raise ValueError(f"not a TD-coloring: {bad[1]}")
    k = c.num_colors
    classes = tuple(c.classes())
    dominated_by = tuple(dominated_classes(g, c, v) for v in range(g.n))
    hit = set()
    for doms in dominated_by:
        hit.update(doms)
    c_p = tuple(i for i in range(1, k + 1) if len(classes[i - 1]) == 1)
    c_s = tuple(i for i in range(1, k + 1) if len(classes[i - 1]) > 1 and i in hit)
    c_g = tuple(i for i in range(1, k + 1) if len(classes[i - 1]) > 1 and i not in hit)
    c_0 = _min_cover(dominated_by, k)

    def union(ids: tuple[int, ...]) -> frozenset[int]:
        return frozenset().union(*(classes[i - 1] for i in ids))

    return ColoringAnalysis(
        classes=classes,
        c_p=c_p,
        c_s=c_s,
        c_g=c_g,
        c_0=c_0,
        a=union(c_p),
        b=union(c_g),
        d_s=frozenset(min(classes[i - 1]) for i in c_s),
        d_0=frozenset(min(classes[i - 1]) for i in c_0),
        dominated_by=dominated_by,
    )


def extract_td_set(g: Graph, c: Coloring) -> frozenset[int]:
    """One vertex (the lowest id) from every color class of a TD-coloring."""
    bad = td_violation(g, c)
    if bad is not None:
        raise ValueError(f"not a TD-coloring: {bad[1]}")
    return frozenset(min(bits(m)) for m in c.class_masks)
