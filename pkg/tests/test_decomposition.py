import pytest
from hypothesis import given

from chromabound.decomposition import (
    TRACE_NOTE,
    check_properties,
    decompose_c5,
    decompose_c7,
    structural_flags,
)
from chromabound.errors import ForbiddenTrace, NotACycle, UnclassifiableVertex
from chromabound.generators import class_corpus
from chromabound.graph import Graph, cycle
from chromabound.patterns import ClassId, find_c5

from conftest import graphs

C5 = tuple(range(5))


def extend(base: Graph, traces: list[list[int]], extra: list[tuple[int, int]] = ()) -> Graph:
    n = base.n
    edges = base.edges() + [(c, n + k) for k, t in enumerate(traces) for c in t] + list(extra)
    return Graph.from_edge_list(n + len(traces), edges)


def label(trace: list[int]) -> str:
    return decompose_c5(extend(cycle(5), [trace]), C5).label_of(5)


def test_trace_table_examples():
    assert label([]) == "T"
    assert label([2]) == "A3"
    assert label([0, 1]) == "B1"
    assert label([4, 0]) == "B5"
    assert label([4, 1]) == "D1"
    assert label([3, 0, 2]) == "Z1"


def test_b3_type_vertex_seeing_v1_is_z1():
    d = decompose_c5(extend(cycle(5), [[0, 2, 3]]), C5)
    assert d.Z[0] == (5,) and 5 in d.X(2)
    assert "Z1" in TRACE_NOTE


def test_every_trace_is_classified_or_forbidden():
    allowed = forbidden = 0
    for mask in range(32):
        trace = [i for i in range(5) if mask >> i & 1]
        g = extend(cycle(5), [trace])
        try:
            decompose_c5(g, C5)
            allowed += 1
        except ForbiddenTrace as e:
            forbidden += 1
            assert e.vertex == 5
            # four vertices spanning five edges is exactly K4-e
            assert len(set(e.witness)) == 4 and g.induced_subgraph(e.witness)[0].m == 5
    assert (allowed, forbidden) == (21, 11)


def test_not_a_cycle():
    with pytest.raises(NotACycle):
        decompose_c5(cycle(6), (0, 1, 2, 3, 4))
    with pytest.raises(NotACycle):
        decompose_c5(cycle(5), (0, 2, 1, 3, 4))


def test_report_lines_and_failure_witness():
    g = extend(cycle(5), [[4, 1], [4, 1]], [(5, 6)])
    rep = check_properties(g, decompose_c5(g, C5), "O")
    assert "O1[i=1] FAIL witness=5,6" in rep.lines()
    assert "O1[i=3] PASS" in rep.lines()
    assert not rep.all_pass


def test_levels():
    g = cycle(5)
    d = decompose_c5(g, C5)
    assert len(check_properties(g, d, "O").results) == 15
    assert len(check_properties(g, d, "M").results) == 30
    assert len(check_properties(g, d, "L").results) == 55
    with pytest.raises(ValueError):
        check_properties(g, d, "Q")


def test_structural_flags():
    assert structural_flags(decompose_c5(extend(cycle(5), [[]]), C5)) == {"HAS_C5K1"}
    assert "HAS_F2" in structural_flags(decompose_c5(extend(cycle(5), [[0], [1]]), C5))
    assert "HAS_F3" in structural_flags(decompose_c5(extend(cycle(5), [[0, 1], [2, 3], [4, 0]]), C5))
    assert "HAS_F4" in structural_flags(decompose_c5(extend(cycle(5), [[0, 1], [2, 3], [4]]), C5))
    assert "HAS_F1" in structural_flags(decompose_c5(extend(cycle(5), [[2], [2, 3]]), C5))
    assert structural_flags(decompose_c5(cycle(5), C5)) == frozenset()


def test_c7_partition():
    c7 = tuple(range(7))
    p = decompose_c7(extend(cycle(7), [[0, 1]]), c7)
    assert p.A[0] == (7,)
    with pytest.raises(UnclassifiableVertex):
        decompose_c7(extend(cycle(7), [[0]]), c7)
    with pytest.raises(UnclassifiableVertex):
        decompose_c7(extend(cycle(7), [[0, 1], [0, 1]]), c7)


@given(graphs(min_n=5, max_n=10))
def test_partition_is_exact(g):
    emb = find_c5(g)
    if emb is None:
        return
    try:
        d = decompose_c5(g, emb.hosts)
    except ForbiddenTrace:
        return
    outside = [v for v in range(g.n) if v not in emb.hosts]
    placed = sorted(d.T + tuple(v for name in "ABDZ" for part in d.family(name) for v in part))
    assert placed == outside
    for i in range(5):
        assert sorted(d.X(i)) == sorted(d.B[i] + d.Z[(i - 2) % 5])


@pytest.mark.parametrize("cls,level", [(ClassId.P12P2_K4E, "O"), (ClassId.TWOP1P3_K4E, "M"), (ClassId.THREEP1P2_K4E, "L")])
def test_properties_hold_on_members(cls, level):
    seen = 0
    for _, g in class_corpus(cls, 120, seed=7):
        emb = find_c5(g)
        if emb is None:
            continue
        seen += 1
        for orient in (emb.hosts, tuple(reversed(emb.hosts))):
            rep = check_properties(g, decompose_c5(g, orient), level)
            assert rep.all_pass, rep.failures
    assert seen > 0
