"""TD-colorings of trees: family-T recognition, the gamma_t + 1 certificate,
and the three-way classification of chi_td(T) - gamma_t(T).

Certificate conditions are implemented with ``D2`` drawn from ``D_I`` (the
members of ``D`` with exactly one private neighbor), and a vertex is *bad*
when it has at least two neighbors in ``D`` and all of them lie in ``D2``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .coloring import Coloring, analyze, is_td_coloring, td_violation
from .domination import all_min_td_sets, gamma_t_exact, private_neighbors, require_isolate_free
from .exact import BudgetExceeded, chi_td_exact, iter_td_colorings
from .graph import Graph, bits, to_mask

CERTIFICATE_MAX_N = 18
CROSS_CHECK_MAX_N = 14


class NotATreeError(ValueError):
    pass


def _require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise NotATreeError("input graph is not a tree")


def leaves(t: Graph) -> list[int]:
    return [v for v in range(t.n) if t.degree(v) == 1]


def support_vertices(t: Graph) -> list[int]:
    return sorted({t.adj[v][0] for v in leaves(t)})


# -- family T ----------------------------------------------------------------


@dataclass(frozen=True)
class StarDecomposition:
    centers: tuple[int, ...]
    stars: dict[int, frozenset[int]]  # center -> center plus its star leaves
    connectors: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "centers": list(self.centers),
            "stars": {str(c): sorted(s) for c, s in self.stars.items()},
            "connectors": [list(e) for e in self.connectors],
        }


def is_in_family_T(t: Graph) -> StarDecomposition | None:
    """Star decomposition if ``t`` is P_2 or built from stars of order >= 3
    joined leaf-to-leaf with every center still a support vertex."""
    _require_tree(t)
    if t.n == 2:
        return StarDecomposition((0,), {0: frozenset({0, 1})}, ())
    centers = support_vertices(t)
    cmask = to_mask(centers)
    if not centers:
        return None
    for s in centers:
        if t.masks[s] & cmask or t.degree(s) < 2:
            return None
    for v in range(t.n):
        if not (cmask >> v) & 1 and (t.masks[v] & cmask).bit_count() != 1:
            return None
    stars = {s: frozenset(t.adj[s]) | {s} for s in centers}
    connectors = tuple(
        (u, v) for u, v in t.sorted_edges() if not (cmask >> u) & 1 and not (cmask >> v) & 1
    )
    return StarDecomposition(tuple(centers), stars, connectors)


def coloring_from_stars(t: Graph, dec: StarDecomposition) -> Coloring:
    """Each center alone in its class; the leaves of each star share a class."""
    k = len(dec.centers)
    colors = [0] * t.n
    for i, s in enumerate(dec.centers, start=1):
        colors[s] = i
        for v in dec.stars[s] - {s}:
            colors[v] = k + i
    return Coloring.normalized(colors)


# -- bad vertices and certificates --------------------------------------------


def bad_vertices(t: Graph, d: Iterable[int], d2: Iterable[int]) -> frozenset[int]:
    dmask, d2mask = to_mask(d), to_mask(d2)
    if d2mask & ~dmask:
        raise ValueError("D2 is not a subset of D")
    out = []
    for v in range(t.n):
        hit = t.masks[v] & dmask
        if hit.bit_count() >= 2 and hit & ~d2mask == 0:
            out.append(v)
    return frozenset(out)


@dataclass(frozen=True)
class TreeCertificate:
    d: frozenset[int]
    d1: frozenset[int]
    d2: frozenset[int]
    s: frozenset[int]
    bad_vertices_checked: bool = True

    def to_dict(self) -> dict:
        return {"D": sorted(self.d), "D1": sorted(self.d1), "D2": sorted(self.d2), "S": sorted(self.s)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> TreeCertificate:
        data = json.loads(text)
        return cls(*(frozenset(data[key]) for key in ("D", "D1", "D2", "S")))


def certificate_problems(t: Graph, cert: TreeCertificate, gamma_t: int | None = None) -> list[str]:
    """Every violated certificate condition; empty when the certificate is valid."""
    problems = []
    d, d1, d2 = cert.d, cert.d1, cert.d2
    if d1 | d2 != d or d1 & d2:
        problems.append("(D1, D2) is not a partition of D")
        return problems
    if any(not 0 <= v < t.n for v in d):
        problems.append("D has out-of-range vertices")
        return problems
    covered = 0
    for u in d:
        covered |= t.masks[u]
    if covered != t.full_mask:
        problems.append("D is not a total dominating set")
        return problems
    if gamma_t is None:
        gamma_t = gamma_t_exact(t).gamma_t
    if len(d) != gamma_t:
        problems.append(f"|D| = {len(d)} but gamma_t = {gamma_t}")
    pn = private_neighbors(t, d)
    if any(len(pn[x]) != 1 for x in d2):
        problems.append("some vertex of D2 does not have exactly one private neighbor")
    s = frozenset().union(*(pn[x] for x in d2)) if d2 else frozenset()
    if s != cert.s:
        problems.append("S differs from the union of private neighbors of D2")
    if bad_vertices(t, d, d2):
        problems.append("a (D2, D)-bad vertex exists")
    closed_s = to_mask(s)
    for y in s:
        closed_s |= t.masks[y]
    rest = t.full_mask & ~to_mask(d1) & ~closed_s
    if any(t.masks[v] & rest for v in bits(rest)):
        problems.append("V minus (D1 union N[S]) is not independent")
    return problems


@dataclass(frozen=True)
class SearchReport:
    gamma_t_sets: int
    partitions: int


def _search_certificate(t: Graph) -> tuple[TreeCertificate | None, SearchReport]:
    n_sets = n_parts = 0
    full = t.full_mask
    masks = t.masks
    for d in all_min_td_sets(t):
        n_sets += 1
        dmask = to_mask(d)
        pn = private_neighbors(t, d)
        d_i = sorted(u for u, p in pn.items() if len(p) == 1)
        for size in range(len(d_i) + 1):
            for d2 in combinations(d_i, size):
                n_parts += 1
                d2mask = to_mask(d2)
                if any(
                    (masks[v] & dmask).bit_count() >= 2 and masks[v] & dmask & ~d2mask == 0
                    for v in range(t.n)
                ):
                    continue
                s = [next(iter(pn[x])) for x in d2]
                closed_s = to_mask(s)
                for y in s:
                    closed_s |= masks[y]
                rest = full & ~(dmask & ~d2mask) & ~closed_s
                if any(masks[v] & rest for v in bits(rest)):
                    continue
                cert = TreeCertificate(d, d - frozenset(d2), frozenset(d2), frozenset(s))
                return cert, SearchReport(n_sets, n_parts)
    return None, SearchReport(n_sets, n_parts)


def find_gamma_plus_1_certificate(t: Graph, max_n: int = CERTIFICATE_MAX_N) -> TreeCertificate | None:
    """First certificate in (gamma_t-set lexicographic, |D2| ascending) order."""
    _require_tree(t)
    if is_in_family_T(t) is not None:
        raise ValueError("tree belongs to family T; the certificate does not apply")
    if t.n > max_n:
        raise BudgetExceeded(f"certificate search is limited to n <= {max_n}")
    return _search_certificate(t)[0]


def coloring_from_certificate(t: Graph, cert: TreeCertificate) -> Coloring:
    """|D| + 1 colors: unique colors on D, N(y) joins the class of x for
    pn(x, D) = {y}, x in D2, and everything else takes one fresh color."""
    _require_tree(t)
    problems = certificate_problems(t, cert)
    if problems:
        raise ValueError("invalid certificate: " + "; ".join(problems))
    pn = private_neighbors(t, cert.d)
    colors = [0] * t.n
    for i, x in enumerate(sorted(cert.d), start=1):
        colors[x] = i
    for x in sorted(cert.d2):
        (y,) = pn[x]
        cx = colors[x]
        for w in t.adj[y]:
            if colors[w] not in (0, cx):
                raise ValueError(f"vertex {w} is claimed by two classes")
            colors[w] = cx
    fresh = len(cert.d) + 1
    colors = [c or fresh for c in colors]
    out = Coloring.normalized(colors)
    bad = td_violation(t, out)
    if bad is not None:
        raise ValueError(f"certificate coloring is not a TD-coloring: {bad[1]}")
    return out


def coloring_gamma_plus_2(t: Graph, d: Iterable[int]) -> Coloring:
    """Unique colors on a TD-set plus a proper 2-coloring of the rest."""
    d = set(d)
    colors = [0] * t.n
    for i, x in enumerate(sorted(d), start=1):
        colors[x] = i
    k = len(d)
    side = _bipartition(t)
    for v in range(t.n):
        if v not in d:
            colors[v] = k + 1 + side[v]
    return Coloring.normalized(colors)


def _bipartition(t: Graph) -> list[int]:
    side = [-1] * t.n
    for s in range(t.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in t.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
    return side


# -- classification ------------------------------------------------------------


class Tier(str, Enum):
    GAMMA_T = "GAMMA_T"
    GAMMA_T_PLUS_1 = "GAMMA_T_PLUS_1"
    GAMMA_T_PLUS_2 = "GAMMA_T_PLUS_2"

    @property
    def offset(self) -> int:
        return {"GAMMA_T": 0, "GAMMA_T_PLUS_1": 1, "GAMMA_T_PLUS_2": 2}[self.value]


@dataclass(frozen=True)
class TreeClassification:
    gamma_t: int
    chi_td: int
    tier: Tier
    evidence: StarDecomposition | TreeCertificate | SearchReport
    witness: Coloring = field(compare=False)
    exact_chi_td: int | None = None

    def to_dict(self) -> dict:
        if isinstance(self.evidence, StarDecomposition):
            ev = {"kind": "star_decomposition", **self.evidence.to_dict()}
        elif isinstance(self.evidence, TreeCertificate):
            ev = {"kind": "certificate", **self.evidence.to_dict()}
        else:
            ev = {
                "kind": "exhaustion",
                "gamma_t_sets": self.evidence.gamma_t_sets,
                "partitions": self.evidence.partitions,
            }
        return {
            "gamma_t": self.gamma_t,
            "chi_td": self.chi_td,
            "tier": self.tier.value,
            "evidence": ev,
            "coloring": list(self.witness.colors),
            "exact_chi_td": self.exact_chi_td,
        }


class ClassificationMismatch(AssertionError):
    pass


def classify_tree(
    t: Graph,
    cross_check_max_n: int = CROSS_CHECK_MAX_N,
    certificate_max_n: int = CERTIFICATE_MAX_N,
) -> TreeClassification:
    _require_tree(t)
    if t.n < 2:
        raise NotATreeError("a tree with at least two vertices is required")
    gamma = gamma_t_exact(t)
    dec = is_in_family_T(t)
    if dec is not None:
        tier, evidence, witness = Tier.GAMMA_T, dec, coloring_from_stars(t, dec)
    else:
        if t.n > certificate_max_n:
            raise BudgetExceeded(f"certificate search is limited to n <= {certificate_max_n}")
        cert, report = _search_certificate(t)
        if cert is not None:
            tier, evidence, witness = Tier.GAMMA_T_PLUS_1, cert, coloring_from_certificate(t, cert)
        else:
            tier, evidence = Tier.GAMMA_T_PLUS_2, report
            witness = coloring_gamma_plus_2(t, gamma.witness)
    chi = gamma.gamma_t + tier.offset
    if witness.num_colors != chi or not is_td_coloring(t, witness):
        raise ClassificationMismatch(f"evidence coloring does not certify chi_td = {chi}")
    exact = None
    if t.n <= cross_check_max_n:
        exact = chi_td_exact(t).value
        if exact != chi:
            raise ClassificationMismatch(f"classifier says {chi}, exact search says {exact}")
    return TreeClassification(gamma.gamma_t, chi, tier, evidence, witness, exact)


# -- leaf normalization --------------------------------------------------------


def _recolored(c: Coloring, changes: dict[int, int]) -> list[int]:
    colors = list(c.colors)
    for v, col in changes.items():
        colors[v] = col
    return colors


def _checked(t: Graph, colors: list[int], k: int, step: str) -> Coloring:
    out = Coloring.normalized(colors)
    if out.num_colors != k or not is_td_coloring(t, out):
        raise AssertionError(f"{step} broke the coloring")
    return out


def _same_color_per_support(t: Graph, c: Coloring) -> Coloring:
    k = c.num_colors
    for u in support_vertices(t):
        lv = [v for v in t.adj[u] if t.degree(v) == 1]
        if len({c.colors[v] for v in lv}) <= 1:
            continue
        target = c.class_masks
        dominated = [i for i, m in enumerate(target, start=1) if m & ~t.masks[u] == 0]
        leaf_cols = {c.colors[v] for v in lv}
        pick = next((i for i in dominated if i in leaf_cols), None)
        if pick is None:
            pick = c.colors[lv[0]]
        c = _checked(t, _recolored(c, {v: pick for v in lv}), k, "support-leaf merge")
    return c


def _free_coloring(t: Graph, c: Coloring) -> tuple[Coloring, int]:
    free = analyze(t, c).free_classes()
    if free:
        return c, free[0]
    for other in iter_td_colorings(t, c.num_colors):
        free = analyze(t, other).free_classes()
        if free:
            return other, free[0]
    raise AssertionError("no optimal TD-coloring with a free class")


def normalize_leaf_colors(t: Graph, c: Coloring, check_optimal: bool = True) -> Coloring:
    """Optimal TD-coloring where leaves of each support vertex share a color;
    for trees outside family T all leaves share one color."""
    _require_tree(t)
    require_isolate_free(t)
    if not is_td_coloring(t, c):
        raise ValueError("input is not a TD-coloring")
    if check_optimal and c.num_colors != chi_td_exact(t).value:
        raise ValueError("input TD-coloring is not optimal")
    if t.n < 3:
        return c
    k = c.num_colors
    c = _same_color_per_support(t, c)
    if is_in_family_T(t) is not None:
        return c
    c, r = _free_coloring(t, c)
    for u in support_vertices(t):
        lv = [v for v in t.adj[u] if t.degree(v) == 1]
        if all(c.colors[v] == r for v in lv):
            continue
        masks = c.class_masks
        s = next(i for i, m in enumerate(masks, start=1) if m & ~t.masks[u] == 0 and i != r)
        inner = [w for w in t.adj[u] if t.degree(w) > 1]
        changes = {v: r for v in lv}
        if not any(c.colors[w] == s for w in inner):
            changes[inner[0]] = s
        c = _checked(t, _recolored(c, changes), k, "leaf recoloring")
    return c
