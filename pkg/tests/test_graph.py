import networkx as nx
import pytest
from hypothesis import given

from oracles import load_g6
from strategies import graphs
from tdcolor.graph import (
    Graph,
    GraphFormatError,
    complete_bipartite,
    components,
    cycle_graph,
    disjoint_union,
    max_clique,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graph,
    to_edge_list,
    to_graph6,
)


def test_edge_list_parses_header_comments_and_duplicates():
    g = parse_edge_list("# a path\n3 3\n0 1\n1 2\n2 1\n")
    assert g.n == 3 and g.sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "header"),
        ("3\n", "line 1"),
        ("3 1\n0 3\n", "line 2"),
        ("3 2\n0 1\n", "2"),
        ("3 1\n1 1\n", "line 2"),
        ("3 1\n0 x\n", "line 2"),
    ],
)
def test_edge_list_errors_name_the_problem(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_edge_list(text)


@pytest.mark.parametrize("bad", ["", "\x01", "A", "B~~~", "~??"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_known_strings():
    assert parse_graph6("A_").sorted_edges() == [(0, 1)]
    assert to_graph6(path_graph(4)) == "Ch"
    assert parse_graph6(">>graph6<<Bw").sorted_edges() == [(0, 1), (0, 2), (1, 2)]


def test_graph6_large_header_round_trip():
    g = cycle_graph(70)
    s = to_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g
    assert nx.utils.graphs_equal(nx.from_graph6_bytes(s.encode()), nx.cycle_graph(70))


@given(graphs(min_n=0, max_n=20))
def test_graph6_matches_networkx(g):
    s = to_graph6(g)
    assert parse_graph6(s) == g
    h = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in h.edges) == g.sorted_edges()
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == s


@given(graphs(min_n=0, max_n=12))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert read_graph(to_edge_list(g)) == g


def test_exhaustive_enumeration_round_trips():
    gs = load_g6("isolate_free_n2-7.g6")
    assert len(gs) == 1043  # isolate-free graphs on 2..7 vertices
    assert all(parse_graph6(to_graph6(g)) == g for g in gs)
    assert all(min(g.degree(v) for v in range(g.n)) > 0 for g in gs)


def test_components_in_order_of_smallest_vertex():
    g = disjoint_union(path_graph(3), complete_bipartite(1, 1)).relabel([4, 0, 2, 1, 3])
    parts = components(g)
    assert [m for _, m in parts] == [(0, 2, 4), (1, 3)]
    assert parts[0][0].sorted_edges() == [(0, 1), (0, 2)]


@given(graphs(min_n=1, max_n=10))
def test_max_clique_matches_networkx(g):
    h = nx.Graph(g.sorted_edges())
    h.add_nodes_from(range(g.n))
    q = max_clique(g)
    assert len(q) == max(len(c) for c in nx.find_cliques(h))
    assert all(g.has_edge(u, v) for u in q for v in q if u < v)


def test_from_edges_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
