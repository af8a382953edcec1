from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from oracles import is_independent, load_g6, naive_chi
from strategies import graphs
from tdcolor.classes import (
    Rejection,
    chain_coloring,
    chi_td_chain,
    chi_td_cograph,
    chi_td_split,
    cotree_chromatic_number,
    omega_plus_one_coloring,
    recognize_bipartite,
    recognize_chain,
    recognize_cograph,
    recognize_split,
)
from tdcolor.coloring import analyze, is_td_coloring
from tdcolor.exact import chi_d_exact, chi_td_exact
from tdcolor.generators import GenSpec, generate
from tdcolor.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)

ALL_SMALL = load_g6("isolate_free_n2-7.g6")


def _is_induced_p4(g, quad):
    a, b, c, d = quad
    want = {(a, b), (b, c), (c, d)}
    pairs = {(u, v) for u, v in combinations(quad, 2) if g.has_edge(u, v)}
    return {tuple(sorted(e)) for e in pairs} == {tuple(sorted(e)) for e in want}


def _naive_cograph(g):
    return not any(
        _is_induced_p4(g, q) for s in combinations(range(g.n), 4) for q in _orders(s)
    )


def _orders(s):
    a, b, c, d = s
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d), (a, c, d, b), (a, d, b, c), (a, d, c, b),
            (b, a, c, d), (b, a, d, c), (b, c, a, d), (b, d, a, c), (c, a, b, d), (c, b, a, d)]


def _naive_split(g):
    for r in range(g.n + 1):
        for k in combinations(range(g.n), r):
            rest = [v for v in range(g.n) if v not in k]
            if all(g.has_edge(u, v) for u, v in combinations(k, 2)) and is_independent(g, rest):
                return True
    return False


def _naive_chain(g):
    if not g.is_connected() or isinstance(recognize_bipartite(g), Rejection):
        return False
    # bipartite and 2K_2-free
    for e, f in combinations(sorted(g.edges), 2):
        quad = set(e) | set(f)
        if len(quad) == 4 and sum(g.has_edge(u, v) for u, v in combinations(quad, 2)) == 2:
            return False
    return True


def test_recognizers_against_definitions_exhaustively():
    for g in ALL_SMALL:
        tree = recognize_cograph(g)
        assert (not isinstance(tree, Rejection)) == _naive_cograph(g)
        if isinstance(tree, Rejection):
            assert _is_induced_p4(g, tree.certificate)
        else:
            assert tree.is_canonical() and tree.evaluate(g.n) == g
            assert cotree_chromatic_number(tree) == naive_chi(g)
        assert (not isinstance(recognize_split(g), Rejection)) == _naive_split(g)
        assert (not isinstance(recognize_chain(g), Rejection)) == _naive_chain(g)


def test_cograph_examples():
    assert recognize_cograph(path_graph(4)).certificate == (0, 1, 2, 3)
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert chi_td_cograph(two_k2).value == 4
    assert chi_td_cograph(disjoint_union(complete_graph(3), complete_graph(2))).value == 5
    assert chi_td_cograph(complete_bipartite(2, 2)).value == 2


@given(st.integers(0, 10**6), st.integers(2, 10))
def test_random_cographs_match_exact(seed, n):
    g = generate(GenSpec("cograph", n, seed))
    value, c = chi_td_cograph(g)
    assert value == chi_td_exact(g).value and is_td_coloring(g, c)
    if g.is_connected():
        assert len(analyze(g, c).c_0) == 2


def test_chain_examples():
    assert recognize_chain(complete_bipartite(2, 3)).k == 1
    p4 = recognize_chain(path_graph(4))
    assert p4.k == 2 and p4.x == frozenset({0, 2})
    assert recognize_chain(cycle_graph(6)) == Rejection("neighborhoods not nested", (0, 2))
    assert chi_td_chain(path_graph(4)).value == 3


@given(st.integers(0, 10**6), st.integers(2, 12))
def test_random_chains_match_exact(seed, n):
    g = generate(GenSpec("chain", n, seed))
    part = recognize_chain(g)
    assert not part.problems(g)
    value, c = chi_td_chain(g)
    assert value == {1: 2, 2: 3}.get(part.k, 4) == chi_td_exact(g).value
    assert c == chain_coloring(g, part) and is_td_coloring(g, c)


def test_split_examples():
    assert recognize_split(star_graph(3)).clique == frozenset({0, 1})
    assert isinstance(recognize_split(cycle_graph(4)), Rejection)
    assert chi_td_split(star_graph(3)).value == 2


@given(st.integers(0, 10**6), st.integers(2, 9))
def test_random_splits_match_exact(seed, n):
    g = generate(GenSpec("split", n, seed))
    part = recognize_split(g)
    value, c = chi_td_split(g)
    assert part.omega <= value <= part.omega + 1
    assert value == chi_td_exact(g).value == chi_d_exact(g).value
    assert is_td_coloring(g, c) and is_td_coloring(g, omega_plus_one_coloring(g, part))


@given(graphs(min_n=1, max_n=12))
def test_bipartite_certificates(g):
    r = recognize_bipartite(g)
    if isinstance(r, Rejection):
        cyc = r.certificate
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc) and cyc[0] == min(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    else:
        assert is_independent(g, r.x) and is_independent(g, r.y)
