import pytest
from hypothesis import given

from chromabound.errors import EmptyGraph, ImproperColoring, IndexOutOfRange, OverlappingSets, SelfLoop
from chromabound.graph import Coloring, Graph, bits, complete, cycle, mask_of, path

from conftest import graphs


def test_edge_list_roundtrip_and_order():
    g = Graph.from_edge_list(4, [(2, 1), (0, 3), (1, 0)])
    assert g.edges() == [(0, 1), (0, 3), (1, 2)]
    assert g.m == 3
    assert Graph.from_edge_list(4, g.edges()) == g


def test_construction_errors():
    with pytest.raises(SelfLoop):
        Graph.from_edge_list(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        Graph.from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_empty_graph_min_degree():
    with pytest.raises(EmptyGraph):
        Graph.empty(0).min_degree_vertex()


def test_min_degree_ties_lowest_index():
    g = path(4)
    assert g.min_degree_vertex() == (0, 1)


def test_large_graphs_use_wide_rows():
    g = cycle(100)
    assert g.degree(99) == 2 and g.has_edge(99, 0)
    assert g.complement().degree(50) == 97


def test_induced_subgraph_mapping():
    g = cycle(6)
    h, keep = g.induced_subgraph([5, 0, 1, 3])
    assert keep == [0, 1, 3, 5]
    assert h.edges() == [(0, 1), (0, 3)]


def test_set_predicates():
    g = complete(4)
    assert g.is_clique([0, 1, 2, 3]) and not g.is_stable_set([0, 1])
    assert not g.is_special([0, 1], [2, 3])
    assert not g.are_graded([0, 1], [2, 3])
    two = Graph.from_edge_list(4, [(0, 1), (2, 3), (0, 2)])
    assert two.are_graded([0, 1], [2, 3])
    assert two.anticomplete([1], [2, 3]) and not two.anticomplete([0], [2])
    assert complete(4).complete_between(mask_of([0, 1]), [2, 3])
    with pytest.raises(OverlappingSets):
        g.is_special([0, 1], [1, 2])


def test_bits_and_masks():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001


def test_coloring_checks():
    g = cycle(5)
    good = Coloring((0, 1, 0, 1, 2))
    assert good.is_proper(g) and good.palette_size == 3
    bad = Coloring((0, 1, 0, 1, 0))
    assert bad.conflict(g) == (0, 4)
    with pytest.raises(ImproperColoring):
        bad.check_proper(g)
    assert Coloring((5, 2, 5)).normalized() == Coloring((0, 1, 0))


@given(graphs())
def test_complement_is_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2


@given(graphs(min_n=1))
def test_relabel_preserves_degrees(g):
    order = list(reversed(range(g.n)))
    h = g.relabel(order)
    assert sorted(h.degree(v) for v in range(h.n)) == sorted(g.degree(v) for v in range(g.n))
    assert all(h.has_edge(i, j) == g.has_edge(order[i], order[j]) for i in range(g.n) for j in range(g.n) if i != j)
