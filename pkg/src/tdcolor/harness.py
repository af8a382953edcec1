"""Class-dispatching solver and the fast-versus-exact oracle comparison."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field

from .classes import (
    Rejection,
    chi_td_chain,
    chi_td_cograph,
    chi_td_split,
    recognize_chain,
    recognize_cograph,
    recognize_split,
)
from .coloring import Coloring
from .domination import require_isolate_free
from .exact import BudgetExceeded, chi_td_exact
from .generators import GenSpec, generate
from .graph import Graph, to_graph6
from .trees import classify_tree

AUTO_ORDER = ("cograph", "chain", "split", "tree")
FAST_CLASSES = AUTO_ORDER


@dataclass(frozen=True)
class Solution:
    chi_td: int
    cls: str
    method: str
    coloring: Coloring
    recognized: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "chi_td": self.chi_td,
            "class": self.cls,
            "method": self.method,
            "recognized": list(self.recognized),
            "coloring": list(self.coloring.colors),
        }


def recognized_classes(g: Graph) -> tuple[str, ...]:
    found = []
    if not isinstance(recognize_cograph(g), Rejection):
        found.append("cograph")
    if not isinstance(recognize_chain(g), Rejection):
        found.append("chain")
    if g.is_connected() and not isinstance(recognize_split(g), Rejection):
        found.append("split")
    if g.is_tree():
        found.append("tree")
    return tuple(found)


def solve_with_class(g: Graph, cls: str, budget: int | None = None) -> tuple[int, Coloring, str]:
    if cls == "cograph":
        value, coloring = chi_td_cograph(g)
        return value, coloring, "cograph-formula"
    if cls == "chain":
        value, coloring = chi_td_chain(g)
        return value, coloring, "chain-partition"
    if cls == "split":
        value, coloring = chi_td_split(g, budget)
        return value, coloring, "split-dominator-equivalence"
    if cls == "tree":
        result = classify_tree(g, cross_check_max_n=0)
        return result.chi_td, result.witness, "tree-classifier"
    raise ValueError(f"no fast solver for class {cls!r}")


def solve(g: Graph, method: str = "auto", budget: int | None = None) -> Solution:
    """``auto`` tries cograph, chain, split, tree in that order, then exact search;
    ``class`` does the same without the exact fallback."""
    require_isolate_free(g)
    recognized = recognized_classes(g)
    if method == "exact":
        r = chi_td_exact(g, budget)
        return Solution(r.value, recognized[0] if recognized else "general", "exact-search", r.witness, recognized)
    if method not in ("auto", "class"):
        raise ValueError(f"unknown method {method!r}")
    for cls in AUTO_ORDER:
        if cls in recognized:
            try:
                value, coloring, how = solve_with_class(g, cls, budget)
            except BudgetExceeded:
                if cls != "tree":
                    raise
                continue
            return Solution(value, cls, how, coloring, recognized)
    if method == "class":
        raise ValueError("graph is in none of the supported classes")
    r = chi_td_exact(g, budget)
    return Solution(r.value, "general", "exact-search", r.witness, recognized)


@dataclass
class Report:
    instance_id: int
    graph6: str
    n: int
    detected_class: str
    method: str
    value: int | None
    oracle_value: int | None
    agree: bool
    wall_time: float
    witness_path: str | None = None
    detail: dict = field(default_factory=dict)
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def oracle_compare(
    cls: str,
    count: int,
    max_n: int,
    seed: int,
    budget: int | None = None,
    min_n: int | None = None,
) -> list[Report]:
    """Generate ``count`` instances of ``cls`` and compare its fast solver
    with exact search; instance ``i`` depends only on (seed, i)."""
    if cls not in FAST_CLASSES:
        raise ValueError(f"class {cls!r} has no fast solver to compare")
    lo = min_n if min_n is not None else 2
    master = random.Random(seed)
    reports = []
    for i in range(count):
        n = master.randint(lo, max_n)
        spec = GenSpec(cls, n, master.getrandbits(63))
        g = generate(spec)
        start = time.perf_counter()
        detected = cls if cls in recognized_classes(g) else "unrecognized"
        detail: dict = {}
        value = oracle = None
        error = None
        how = "tree-classifier" if cls == "tree" else "?"
        try:
            if cls == "tree":
                result = classify_tree(g, cross_check_max_n=0)
                value = result.chi_td
                detail = {"gamma_t": result.gamma_t, "tier": result.tier.value}
            else:
                value, _, how = solve_with_class(g, cls, budget)
            oracle = chi_td_exact(g, budget).value
        except BudgetExceeded as exc:
            error = f"budget exceeded: {exc}"
        reports.append(
            Report(
                instance_id=i,
                graph6=to_graph6(g),
                n=n,
                detected_class=detected,
                method=how,
                value=value,
                oracle_value=oracle,
                agree=detected == cls and value is not None and value == oracle,
                wall_time=round(time.perf_counter() - start, 6),
                detail=detail,
                error=error,
            )
        )
    return reports


def disagreements(reports: list[Report]) -> list[Report]:
    return [r for r in reports if r.error is None and not r.agree]
