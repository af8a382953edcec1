import pytest
from hypothesis import given

from oracles import load_g6, naive_family_T
from strategies import trees
from tdcolor.coloring import Coloring, analyze, is_td_coloring
from tdcolor.domination import gamma_t_exact, private_neighbors
from tdcolor.exact import BudgetExceeded, chi_td_exact, iter_td_colorings
from tdcolor.graph import Graph, cycle_graph, parse_graph6, path_graph, star_graph
from tdcolor.trees import (
    NotATreeError,
    Tier,
    TreeCertificate,
    bad_vertices,
    certificate_problems,
    classify_tree,
    coloring_from_certificate,
    coloring_from_stars,
    coloring_gamma_plus_2,
    find_gamma_plus_1_certificate,
    is_in_family_T,
    leaves,
    normalize_leaf_colors,
    support_vertices,
)

TREES = load_g6("trees_n2-12.g6")
T_STAR = parse_graph6("GhE?GC")
SPIDER = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def test_family_T_anchors():
    assert is_in_family_T(path_graph(2)) is not None
    dec = is_in_family_T(path_graph(6))
    assert dec.centers == (1, 4) and dec.connectors == ((2, 3),)
    assert is_in_family_T(path_graph(11)) is None
    with pytest.raises(NotATreeError):
        is_in_family_T(cycle_graph(4))


def test_family_T_matches_definition_search():
    for t in TREES:
        if t.n <= 9:
            assert (is_in_family_T(t) is not None) == naive_family_T(t), t.sorted_edges()


@given(trees(max_n=12))
def test_family_T_decomposition_coloring(t):
    dec = is_in_family_T(t)
    if dec is not None:
        c = coloring_from_stars(t, dec)
        assert is_td_coloring(t, c) and c.num_colors == gamma_t_exact(t).gamma_t


def test_certificates_on_paths():
    for n, k in [(11, 7), (4, 3)]:
        t = path_graph(n)
        cert = find_gamma_plus_1_certificate(t)
        assert cert is not None and not certificate_problems(t, cert)
        c = coloring_from_certificate(t, cert)
        assert is_td_coloring(t, c) and c.num_colors == k
        assert TreeCertificate.from_json(cert.to_json()) == cert


def test_invalid_certificate_rejected():
    t = path_graph(11)
    cert = find_gamma_plus_1_certificate(t)
    broken = TreeCertificate(cert.d, cert.d1 | cert.d2, cert.d2, cert.s)
    assert certificate_problems(t, broken)
    with pytest.raises(ValueError):
        coloring_from_certificate(t, broken)


def test_t_star_is_the_first_gamma_plus_2_tree():
    first = next(t for t in TREES if chi_td_exact(t).value == gamma_t_exact(t).gamma_t + 2)
    assert first == T_STAR and T_STAR.n == 8
    assert find_gamma_plus_1_certificate(T_STAR) is None
    r = classify_tree(T_STAR)
    assert r.tier == Tier.GAMMA_T_PLUS_2 and r.to_dict()["evidence"]["kind"] == "exhaustion"


def test_classify_examples():
    assert classify_tree(path_graph(6)).tier == Tier.GAMMA_T
    assert classify_tree(path_graph(6)).chi_td == 4
    r = classify_tree(path_graph(11))
    assert r.tier == Tier.GAMMA_T_PLUS_1 and r.chi_td == 7 and is_td_coloring(path_graph(11), r.witness)


def test_certificate_search_refuses_family_T_and_large_trees():
    with pytest.raises(ValueError):
        find_gamma_plus_1_certificate(path_graph(6))
    with pytest.raises(BudgetExceeded):
        find_gamma_plus_1_certificate(path_graph(25), max_n=18)


def test_bad_vertices_examples():
    assert bad_vertices(path_graph(5), {1, 2, 3}, set()) == frozenset()
    assert bad_vertices(star_graph(3), {0, 1}, {0, 1}) == frozenset()
    assert bad_vertices(path_graph(5), {1, 2, 3}, {1, 3}) == frozenset({2})
    with pytest.raises(ValueError):
        bad_vertices(path_graph(5), {1, 2, 3}, {4})


def test_gamma_plus_2_construction():
    d = gamma_t_exact(T_STAR).witness
    c = coloring_gamma_plus_2(T_STAR, d)
    assert is_td_coloring(T_STAR, c) and c.num_colors == len(d) + 2


def test_support_vertices_are_solitary_in_every_optimal_coloring():
    for t in TREES:
        if t.n > 8:
            break
        k = chi_td_exact(t).value
        sup = support_vertices(t)
        for c in iter_td_colorings(t, k):
            sizes = [len(cls) for cls in c.classes()]
            assert all(sizes[c.colors[s] - 1] == 1 for s in sup), (t.sorted_edges(), c)


def test_single_non_dominated_class_after_normalizing():
    for t in TREES:
        if t.n > 10:
            break
        r = classify_tree(t)
        if r.tier == Tier.GAMMA_T_PLUS_1:
            c = normalize_leaf_colors(t, r.witness)
            assert len(analyze(t, c).c_g) == 1, t.sorted_edges()


def _check_normalized(t, c):
    out = normalize_leaf_colors(t, c)
    assert is_td_coloring(t, out) and out.num_colors == c.num_colors
    for s in support_vertices(t):
        assert len({out.colors[v] for v in t.adj[s] if t.degree(v) == 1}) == 1
    if is_in_family_T(t) is None:
        assert len({out.colors[v] for v in leaves(t)}) == 1
    return out


def test_normalize_examples():
    seven = Coloring((7, 1, 2, 7, 6, 5, 6, 7, 3, 4, 7))
    out = _check_normalized(path_graph(11), seven)
    assert out.colors[0] == out.colors[10]
    k2 = Coloring((1, 2))
    assert normalize_leaf_colors(path_graph(2), k2) == k2
    k = chi_td_exact(SPIDER).value
    for c in iter_td_colorings(SPIDER, k):
        _check_normalized(SPIDER, c)


def test_normalize_rejects_suboptimal():
    with pytest.raises(ValueError):
        normalize_leaf_colors(path_graph(4), Coloring((1, 2, 3, 4)))


@given(trees(max_n=10))
def test_normalize_every_optimal_coloring(t):
    k = chi_td_exact(t).value
    for i, c in enumerate(iter_td_colorings(t, k)):
        if i == 20:
            break
        _check_normalized(t, c)


def test_private_neighbor_sizes_on_certificate():
    t = path_graph(11)
    cert = find_gamma_plus_1_certificate(t)
    pn = private_neighbors(t, cert.d)
    assert all(len(pn[x]) == 1 for x in cert.d2)
