import pytest
from hypothesis import given

from oracles import (
    load_g6,
    naive_chi,
    naive_chi_d,
    naive_chi_td,
    naive_optimal_td_partitions,
)
from strategies import graphs
from tdcolor.coloring import is_dominator_coloring, is_proper, is_td_coloring
from tdcolor.domination import IsolatedVertexError
from tdcolor.exact import (
    BudgetExceeded,
    chi_d_exact,
    chi_exact,
    chi_td_exact,
    feasible_td_coloring,
    iter_td_colorings,
)
from tdcolor.graph import empty_graph, path_graph


def test_against_partition_oracle():
    for g in load_g6("isolate_free_n2-7.g6"):
        assert chi_td_exact(g).value == naive_chi_td(g), g.sorted_edges()
        assert chi_exact(g).value == naive_chi(g), g.sorted_edges()
        assert chi_d_exact(g).value == naive_chi_d(g), g.sorted_edges()


@given(graphs(min_n=2, max_n=9, isolate_free=True))
def test_witnesses_are_valid_and_optimal(g):
    td, d, c = chi_td_exact(g), chi_d_exact(g), chi_exact(g)
    assert is_td_coloring(g, td.witness) and td.witness.num_colors == td.value
    assert is_dominator_coloring(g, d.witness) and d.witness.num_colors == d.value
    assert is_proper(g, c.witness) and c.witness.num_colors == c.value
    assert feasible_td_coloring(g, td.value - 1) is None if td.value > 1 else True
    assert c.value <= d.value <= td.value


@given(graphs(min_n=2, max_n=6, isolate_free=True))
def test_optimal_enumeration_is_complete(g):
    k = chi_td_exact(g).value
    got = {frozenset(c.classes()) for c in iter_td_colorings(g, k)}
    assert got == set(naive_optimal_td_partitions(g))


def test_p11_feasibility():
    assert feasible_td_coloring(path_graph(11), 6) is None
    assert is_td_coloring(path_graph(11), feasible_td_coloring(path_graph(11), 7))


def test_deterministic_witness():
    g = load_g6("isolate_free_n2-7.g6")[-200]
    assert chi_td_exact(g).witness == chi_td_exact(g).witness


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        chi_td_exact(path_graph(14), budget=10)


def test_isolated_vertex_rejected():
    with pytest.raises(IsolatedVertexError):
        chi_td_exact(empty_graph(2))
