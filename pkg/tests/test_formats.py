import networkx as nx
import pytest
from hypothesis import given

from chromabound.errors import FormatError
from chromabound.formats import (
    from_dimacs,
    from_edge_list_text,
    from_graph6,
    read_graphs,
    to_edge_list_text,
    to_graph6,
)
from chromabound.graph import Graph, complete, cycle

from conftest import graphs, to_nx


def test_known_graph6_strings():
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(complete(4)) == "C~"
    assert to_graph6(cycle(5)) == "Dhc"


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    text = to_graph6(g)
    assert nx.to_graph6_bytes(to_nx(g), header=False).strip().decode() == text
    assert from_graph6(text) == g


def test_graph6_long_order_field():
    g = cycle(70)
    assert from_graph6(to_graph6(g)) == g
    assert to_graph6(g).startswith("~")


def test_graph6_header_and_errors():
    assert from_graph6(">>graph6<<C~") == complete(4)
    with pytest.raises(FormatError):
        from_graph6(":Fa@x^")
    with pytest.raises(FormatError):
        from_graph6("C~~")


def test_edge_list_text():
    g = cycle(4)
    assert from_edge_list_text(to_edge_list_text(g)) == g
    with pytest.raises(FormatError):
        from_edge_list_text("3 2\n0 1\n")


def test_dimacs_is_one_based():
    g = from_dimacs("c tri\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)


def test_read_by_suffix(tmp_path):
    (tmp_path / "a.g6").write_text("C~\nDhc\n")
    assert read_graphs(tmp_path / "a.g6") == [complete(4), cycle(5)]
    (tmp_path / "b.zz").write_text("")
    with pytest.raises(FormatError):
        read_graphs(tmp_path / "b.zz")
