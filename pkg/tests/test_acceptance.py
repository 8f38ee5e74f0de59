"""Acceptance gate: one recorded pass/fail line per criterion."""

import itertools
import random
import time

import networkx as nx

from chromabound.colorers import FLAG_FALLBACK_NONPERFECT, bound_target, color_in_class, color_p1_2p2
from chromabound.decomposition import check_properties, decompose_c5
from chromabound.errors import PreconditionOmega
from chromabound.formats import to_graph6
from chromabound.generators import class_corpus, omega3_chi4_example, random_good_graph, tight_example
from chromabound.goodgraph import GoodPartition, color_good, color_good_base4, validate_good
from chromabound.graph import Graph, complete, cycle
from chromabound.oracle import chromatic_number, clique_number, max_stable_set
from chromabound.patterns import K4_MINUS_E, P, ClassId, find_c5, in_class

from conftest import to_nx

CORPUS_SIZE = 500
CORPUS_SEED = 0
AUDIT_LEVEL = {ClassId.P12P2_K4E: "O", ClassId.TWOP1P3_K4E: "M", ClassId.THREEP1P2_K4E: "L"}


class Run:
    def __init__(self, cls: ClassId):
        start = time.perf_counter()
        self.cls = cls
        self.items = []
        for gid, g in class_corpus(cls, CORPUS_SIZE, seed=CORPUS_SEED, max_n=18):
            col, cert = color_in_class(g, cls)
            self.items.append((gid, g, col, cert))
        self.seconds = time.perf_counter() - start


_runs: dict[ClassId, Run] = {}


def corpus_run(cls: ClassId) -> Run:
    if cls not in _runs:
        _runs[cls] = Run(cls)
    return _runs[cls]


def test_criterion_1_class1_exactness(record_criterion):
    start = time.perf_counter()
    f = {1: 1, 2: 3, 3: 4}
    bad = []
    for w in range(1, 9):
        g = tight_example(ClassId.P12P2_K4E, w)
        want = f.get(w, w)
        col, _ = color_p1_2p2(g)
        chi = chromatic_number(g)[0]
        if not (in_class(g, ClassId.P12P2_K4E) and clique_number(g) == w and col.is_proper(g)):
            bad.append(f"omega={w}: bad example")
        elif col.palette_size != want or chi != want:
            bad.append(f"omega={w}: palette={col.palette_size} chi={chi} want={want}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record_criterion(1, ok, f"omega 1..8 exact, {elapsed:.1f}s" if ok else f"{bad} {elapsed:.1f}s")
    assert ok, bad


def _bound_suite(k: int, cls: ClassId, record_criterion, limit: float | None = None):
    run = corpus_run(cls)
    bad = []
    maxima: dict[int, int] = {}
    for gid, g, col, cert in run.items:
        w = clique_number(g)
        maxima[w] = max(maxima.get(w, 0), col.palette_size)
        if not col.is_proper(g) or col.palette_size > bound_target(cls, w):
            bad.append(f"{gid} [{to_graph6(g)}] palette={col.palette_size} omega={w}")
        elif chromatic_number(g)[0] > col.palette_size:
            bad.append(f"{gid}: oracle disagrees")
    ok = not bad and len(run.items) == CORPUS_SIZE and (limit is None or run.seconds < limit)
    cells = " ".join(f"w{w}:{m}" for w, m in sorted(maxima.items()))
    record_criterion(k, ok, f"{len(run.items)} graphs, {len(bad)} failures, {run.seconds:.1f}s, max palette {cells}")
    assert ok, bad[:5]


def test_criterion_2_bound_suite_class1(record_criterion):
    _bound_suite(2, ClassId.P12P2_K4E, record_criterion, limit=300)


def test_criterion_3_bound_suite_class2(record_criterion):
    _bound_suite(3, ClassId.TWOP1P3_K4E, record_criterion)


def test_criterion_4_bound_suite_class3(record_criterion):
    _bound_suite(4, ClassId.THREEP1P2_K4E, record_criterion)


def test_criterion_5_good_graph_optimality(record_criterion):
    rng = random.Random(2)
    bad = []
    done = 0
    omegas = set()
    while done < 200:
        sizes = tuple(rng.randint(0, 10) for _ in range(3))
        if max(sizes) < 4:
            continue
        g, p = random_good_graph(sizes, rng.random(), rng.getrandbits(32))
        w = clique_number(g)
        assert g.n <= 30 and w >= 4
        col = color_good(g, p)
        chi = chromatic_number(g)[0]
        if not col.is_proper(g) or col.palette_size != w or chi != w:
            bad.append(f"{to_graph6(g)} palette={col.palette_size} chi={chi} omega={w}")
        omegas.add(w)
        done += 1
    base = 0
    while base < 100:
        sizes = tuple(rng.randint(0, 4) for _ in range(3))
        if 4 not in sizes:
            continue
        g, p = random_good_graph(sizes, rng.random(), rng.getrandbits(32))
        col = color_good_base4(g, p)
        if clique_number(g) != 4 or not col.is_proper(g) or col.palette_size != 4 or chromatic_number(g)[0] != 4:
            bad.append(f"base {to_graph6(g)}")
        base += 1
    ok = not bad
    record_criterion(5, ok, f"200 good graphs omega {min(omegas)}..{max(omegas)} plus 100 base cases, {len(bad)} failures")
    assert ok, bad[:5]


def test_criterion_6_omega3_guard(record_criterion):
    h = omega3_chi4_example()
    p = GoodPartition.of([0, 5, 6], [1, 2, 7], [3, 4, 8])
    facts = bool(validate_good(h, p)) and clique_number(h) == 3 and chromatic_number(h)[0] == 4
    refused = False
    try:
        color_good(h, p)
    except PreconditionOmega as e:
        refused = e.omega == 3
    ok = facts and refused
    record_criterion(6, ok, f"9-vertex good graph omega=3 chi=4 refused={refused}")
    assert ok


def test_criterion_7_property_audit(record_criterion):
    checked = 0
    failures = []
    for cls in ClassId:
        for gid, g, _, _ in corpus_run(cls).items:
            emb = find_c5(g)
            if emb is None:
                continue
            checked += 1
            # levels M and L include the O checks
            rep = check_properties(g, decompose_c5(g, emb.hosts), AUDIT_LEVEL[cls])
            failures += [f"{gid} [{to_graph6(g)}] {r.line()}" for r in rep.failures]
    ok = not failures and checked > 0
    record_criterion(7, ok, f"{checked} members with a 5-hole audited, {len(failures)} violations")
    assert ok, failures[:5]


_NAIVE_PATTERNS = [(K4_MINUS_E.graph, 4), ((P(1).graph.disjoint_union(P(1).graph)).disjoint_union(P(3).graph), 5), (cycle(5), 5)]


def _naive_contains(g: Graph) -> bool:
    h = to_nx(g)
    for pat, size in _NAIVE_PATTERNS:
        pn = to_nx(pat)
        for s in itertools.combinations(range(g.n), size):
            if nx.is_isomorphic(h.subgraph(s), pn):
                return True
    return False


def test_criterion_8_c7_rigidity(record_criterion):
    outcomes = {"violates": 0, "detached": 0}
    bad = []
    for mask in range(128):
        trace = [i for i in range(7) if mask >> i & 1]
        g = Graph.from_edge_list(8, cycle(7).edges() + [(i, 7) for i in trace])
        fast = not (in_class(g, ClassId.TWOP1P3_K4E) and find_c5(g) is None)
        naive = _naive_contains(g)
        if fast != naive:
            bad.append(f"trace {trace}: pattern search {fast} brute force {naive}")
        if naive:
            outcomes["violates"] += 1
        elif not trace:
            outcomes["detached"] += 1
        else:
            bad.append(f"trace {trace}: member with an attached vertex")
    ok = not bad and sum(outcomes.values()) == 128
    record_criterion(8, ok, f"128 traces: {outcomes['violates']} violate, {outcomes['detached']} detached")
    assert ok, bad


def _chi_by_partitions(g: Graph) -> int:
    best = g.n

    def place(v: int, blocks: list[list[int]]):
        nonlocal best
        if len(blocks) >= best:
            return
        if v == g.n:
            best = len(blocks)
            return
        for b in blocks:
            if not any(g.has_edge(v, u) for u in b):
                b.append(v)
                place(v + 1, blocks)
                b.pop()
        blocks.append([v])
        place(v + 1, blocks)
        blocks.pop()

    place(0, [])
    return best


def _omega_by_subsets(g: Graph) -> int:
    return max((r for r in range(g.n + 1) for s in itertools.combinations(range(g.n), r) if g.is_clique(s)), default=0)


def test_criterion_9_oracle_sanity(record_criterion):
    bad = []
    for k in range(2, 6):
        if chromatic_number(cycle(2 * k + 1))[0] != 3:
            bad.append(f"C{2 * k + 1}")
    for t in range(0, 11):
        if chromatic_number(complete(t))[0] != t:
            bad.append(f"K{t}")
    if chromatic_number(cycle(7).complement())[0] != 4:
        bad.append("complement C7")
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(0, 14)
        p = rng.random()
        g = Graph.from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        alpha = len(max_stable_set(g))
        nx_omega_co = max((len(c) for c in nx.find_cliques(to_nx(g.complement()))), default=0)
        if not (alpha == clique_number(g.complement()) == nx_omega_co):
            bad.append(f"duality {to_graph6(g)}")
    atlas = nx.graph_atlas_g()
    for h in atlas:
        g = Graph.from_edge_list(h.number_of_nodes(), h.edges())
        if chromatic_number(g)[0] != _chi_by_partitions(g) or clique_number(g) != _omega_by_subsets(g):
            bad.append(f"atlas {to_graph6(g)}")
    ok = not bad
    record_criterion(9, ok, f"cycles, cliques, complement C7, 200 duality checks, {len(atlas)} atlas graphs; {len(bad)} mismatches")
    assert ok, bad[:5]


def test_criterion_10_no_structure_fallback(record_criterion):
    fired = []
    for cls in (ClassId.TWOP1P3_K4E, ClassId.THREEP1P2_K4E):
        for gid, g, _, cert in corpus_run(cls).items:
            if FLAG_FALLBACK_NONPERFECT in cert.flags:
                fired.append(f"{gid} graph6={to_graph6(g)}")
    ok = not fired
    record_criterion(10, ok, f"{2 * CORPUS_SIZE} class-2/3 members, fallback fired on {len(fired)}")
    assert ok, fired
