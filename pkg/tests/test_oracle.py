import itertools

import networkx as nx
import pytest
from hypothesis import given

from chromabound.errors import BudgetExceeded, ScaleLimit
from chromabound.graph import Graph, complete, cycle
from chromabound.oracle import (
    OracleBudget,
    chromatic_number,
    clique_number,
    dsatur_greedy,
    is_perfect,
    k_colorable,
    max_clique,
    max_stable_set,
    two_color,
)

from conftest import graphs, to_nx


@given(graphs(max_n=11))
def test_clique_number_agrees_with_networkx(g):
    expect = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique_number(g) == expect
    k = max_clique(g)
    assert len(k) == expect and g.is_clique(k)


@given(graphs(max_n=9))
def test_max_clique_is_lexicographically_least(g):
    w = clique_number(g)
    least = next((c for c in itertools.combinations(range(g.n), w) if g.is_clique(c)), ())
    assert max_clique(g) == least


@given(graphs(max_n=10))
def test_chromatic_number_is_optimal(g):
    chi, col = chromatic_number(g)
    assert col.is_proper(g) and col.palette_size == chi
    if chi > 0:
        assert k_colorable(g, chi - 1) is None


@given(graphs(max_n=10))
def test_dsatur_is_proper(g):
    assert dsatur_greedy(g).is_proper(g)


def test_fixed_values():
    assert chromatic_number(cycle(7).complement())[0] == 4
    assert chromatic_number(Graph.empty(0))[0] == 0
    assert max_stable_set(cycle(5)) == (0, 2)
    assert two_color(cycle(4)).colors == (0, 1, 0, 1)
    assert two_color(complete(3)) is None
    assert k_colorable(complete(4), 3) is None


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        chromatic_number(cycle(9).complement(), OracleBudget(node_limit=3))
    with pytest.raises(ValueError):
        OracleBudget(node_limit=0)


def _perfect_by_definition(g: Graph) -> bool:
    for r in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            h, _ = g.induced_subgraph(s)
            if chromatic_number(h)[0] != clique_number(h):
                return False
    return True


@given(graphs(max_n=7))
def test_perfection_matches_definition(g):
    assert is_perfect(g) == _perfect_by_definition(g)


def test_perfection_scale_limit():
    with pytest.raises(ScaleLimit):
        is_perfect(Graph.empty(50))
    assert is_perfect(Graph.empty(50), tier_n=60)
