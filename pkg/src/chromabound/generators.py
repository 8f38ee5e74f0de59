"""Seeded generation of class members, good graphs and tight examples."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import RepairBudgetExceeded, SearchExhausted
from .goodgraph import GoodPartition
from .graph import Graph, complete, cycle
from .oracle import chromatic_number, clique_number
from .patterns import ClassId, class_violation, in_class


@dataclass(frozen=True)
class GenSpec:
    n: int
    p: float
    cls: ClassId
    seed: int = 0
    max_repair_steps: int = 10_000

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def repair(g: Graph, cls: ClassId, max_steps: int = 10_000) -> Graph:
    """Delete witness edges until ``g`` is in ``cls``.

    Each step takes the least embedded forbidden pattern and deletes the host
    edge of the pattern's first edge (for the union patterns that is an edge
    of a path component).  Every forbidden pattern has an edge, so the loop
    ends at the latest on the edgeless graph.
    """
    edges = set(g.edges())
    for _ in range(max_steps + 1):
        emb = class_violation(g, cls)
        if emb is None:
            return g
        pat = next(p for p in cls.forbidden if p.name == emb.pattern)
        a, b = pat.graph.edges()[0]
        u, v = sorted((emb.hosts[a], emb.hosts[b]))
        edges.discard((u, v))
        g = Graph.from_edge_list(g.n, sorted(edges))
    raise RepairBudgetExceeded(f"still outside {cls.slug} after {max_steps} repairs")


def random_in_class(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    g = repair(gnp(spec.n, spec.p, rng), spec.cls, spec.max_repair_steps)
    assert in_class(g, spec.cls)
    return g


def random_good_graph(
    sizes: tuple[int, int, int], density: float | tuple[float, float, float], seed: int
) -> tuple[Graph, GoodPartition]:
    """Three cliques with a random partial matching between each pair.

    ``density`` is the probability that each candidate pair of a random
    pairing is kept, either one value or one per pair (Q1Q2, Q2Q3, Q3Q1).
    """
    if any(s < 0 for s in sizes):
        raise ValueError("sizes must be non-negative")
    dens = (density,) * 3 if isinstance(density, (int, float)) else tuple(density)
    rng = random.Random(seed)
    start = [0, sizes[0], sizes[0] + sizes[1]]
    parts = [list(range(start[k], start[k] + sizes[k])) for k in range(3)]
    edges = [(u, v) for q in parts for i, u in enumerate(q) for v in q[i + 1 :]]
    for k, (a, b) in enumerate(((0, 1), (1, 2), (2, 0))):
        x, y = parts[a][:], parts[b][:]
        rng.shuffle(x)
        rng.shuffle(y)
        edges += [(u, v) for u, v in zip(x, y) if rng.random() < dens[k]]
    return Graph.from_edge_list(sum(sizes), edges), GoodPartition.of(*parts)


def perturbed_good_member(cls: ClassId, sizes: tuple[int, int, int], density: float, extra: int, seed: int) -> Graph:
    """A good graph with ``extra`` random added edges, repaired back into ``cls``."""
    g, _ = random_good_graph(sizes, density, seed)
    rng = random.Random(seed ^ 0x5EED)
    non = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    add = rng.sample(non, min(extra, len(non)))
    return repair(Graph.from_edge_list(g.n, g.edges() + add), cls)


def class_corpus(cls: ClassId, count: int, seed: int = 0, max_n: int = 18) -> list[tuple[str, Graph]]:
    """Deterministic mixed corpus of class members with at most ``max_n`` vertices.

    Every third graph is a repaired random graph over a spread of sizes and
    densities.  The rest start from good graphs with near-balanced, dense
    parts (plain or with a few random extra edges, then repaired), which
    keeps large cliques, 5-holes and high minimum degree in the mix.
    """
    rng = random.Random(seed)
    out = []
    for k in range(count):
        s = rng.getrandbits(63)
        if k % 3 == 0:
            n = rng.randint(1, max_n)
            p = rng.choice((0.2, 0.35, 0.5, 0.7, 0.9))
            out.append((f"{cls.slug}-gnp-{k:04d}", random_in_class(GenSpec(n, p, cls, s))))
            continue
        total = rng.randint(min(9, max_n), max_n)
        base = total // 3
        sizes = [base, base, base]
        for j in range(total - 3 * base):
            sizes[j] += 1
        shift = rng.randint(0, min(2, base))
        a, b = rng.sample(range(3), 2)
        sizes[a] += shift
        sizes[b] -= shift
        extra = 0 if k % 3 == 1 else rng.randint(1, 4)
        g = perturbed_good_member(cls, tuple(sizes), rng.uniform(0.5, 1.0), extra, s)
        out.append((f"{cls.slug}-good-{k:04d}", g))
    return out


# tight examples ------------------------------------------------------


def _partial_matchings(xs: list[int], ys: list[int]):
    """Every partial matching between ``xs`` and ``ys`` as a sorted edge list."""
    if not xs:
        yield []
        return
    x, rest = xs[0], xs[1:]
    yield from _partial_matchings(rest, ys)
    for y in ys:
        for m in _partial_matchings(rest, [z for z in ys if z != y]):
            yield [(x, y)] + m


@lru_cache(maxsize=1)
def omega3_chi4_example() -> Graph:
    """Least nine-vertex good graph with omega 3 and chromatic number 4 in class 1.

    The cliques are {0, 5, 6}, {1, 2, 7} and {3, 4, 8}, so 0..5 always span a
    6-cycle through the fixed cross edges 0-1, 2-3, 4-5; every other cross
    edge is drawn from partial matchings.  No choice keeps that 6-cycle
    induced and reaches chromatic number 4, so chords are allowed.
    """
    q = [(0, 5, 6), (1, 2, 7), (3, 4, 8)]
    fixed = [(0, 1), (2, 3), (4, 5)]
    inside = [(u, v) for t in q for i, u in enumerate(t) for v in t[i + 1 :]]
    options = []
    for k, (a, b) in enumerate(((0, 1), (1, 2), (2, 0))):
        fu, fv = fixed[k]
        xs = [v for v in q[a] if v not in (fu, fv)]
        ys = [v for v in q[b] if v not in (fu, fv)]
        options.append(list(_partial_matchings(xs, ys)))
    for picks in product(*options):
        edges = inside + fixed + [tuple(sorted(e)) for m in picks for e in m]
        g = Graph.from_edge_list(9, edges)
        if clique_number(g) != 3 or not in_class(g, ClassId.P12P2_K4E):
            continue
        if chromatic_number(g)[0] == 4:
            return g
    raise SearchExhausted("no nine-vertex good graph with omega 3 and chromatic number 4")


def tight_example(cls: ClassId, omega: int) -> Graph:
    """Extremal example for class 1; best known small example for the others."""
    if omega < 1:
        raise ValueError("omega must be at least 1")
    if omega == 1:
        return Graph.empty(1)
    if omega == 2:
        return cycle(5)
    if omega == 3:
        g = omega3_chi4_example()
        if in_class(g, cls):
            return g
        return complete(3)
    return complete(omega)
