"""Good graphs: three cliques whose pairwise cross edges are partial matchings.

Colorings here are built constructively: a co-bipartite base from a
maximum matching, a swap-based insertion of the third clique when
``omega == 4``, and stable-set peeling above that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .errors import NotGood, OmegaDidNotDrop, PreconditionOmega, StructuralClaimFailed
from .graph import Coloring, Graph
from .oracle import clique_number


@dataclass(frozen=True)
class GoodPartition:
    Q1: tuple[int, ...]
    Q2: tuple[int, ...]
    Q3: tuple[int, ...]

    @classmethod
    def of(cls, q1: Iterable[int], q2: Iterable[int], q3: Iterable[int]) -> "GoodPartition":
        return cls(tuple(sorted(q1)), tuple(sorted(q2)), tuple(sorted(q3)))

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        return (self.Q1, self.Q2, self.Q3)

    def restrict(self, keep: Sequence[int]) -> "GoodPartition":
        """Partition of ``G[keep]`` in the induced subgraph's own indices."""
        pos = {v: i for i, v in enumerate(keep)}
        return GoodPartition(*(tuple(pos[v] for v in q if v in pos) for q in self.parts))

    def to_lists(self) -> list[list[int]]:
        return [list(q) for q in self.parts]


@dataclass(frozen=True)
class GoodCheck:
    ok: bool
    reason: str = ""
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_good(g: Graph, p: GoodPartition) -> GoodCheck:
    seen: dict[int, int] = {}
    for k, q in enumerate(p.parts):
        for v in q:
            if not 0 <= v < g.n:
                return GoodCheck(False, "vertex out of range", (v,))
            if v in seen:
                return GoodCheck(False, "parts overlap", (v,))
            seen[v] = k
    if len(seen) != g.n:
        missing = tuple(v for v in range(g.n) if v not in seen)
        return GoodCheck(False, "parts do not cover the graph", missing[:1])
    for k, q in enumerate(p.parts):
        for a in range(len(q)):
            for b in range(a + 1, len(q)):
                if not g.has_edge(q[a], q[b]):
                    return GoodCheck(False, f"Q{k + 1} is not a clique", (q[a], q[b]))
    for a, b in ((0, 1), (1, 2), (2, 0)):
        qa, qb = p.parts[a], p.parts[b]
        for src, dst in ((qa, qb), (qb, qa)):
            for v in src:
                hits = [u for u in dst if g.has_edge(v, u)]
                if len(hits) > 1:
                    return GoodCheck(False, f"Q{a + 1},Q{b + 1} not graded", (v, hits[0], hits[1]))
    return GoodCheck(True)


def _require_good(g: Graph, p: GoodPartition) -> None:
    check = validate_good(g, p)
    if not check:
        raise NotGood(check.reason, check.witness)


def co_bipartite_classes(g: Graph, x: Sequence[int], y: Sequence[int]) -> list[list[int]]:
    """Minimum partition of the two cliques ``x`` and ``y`` into stable sets.

    Stable sets have at most one vertex per clique, so a maximum matching
    of non-adjacent cross pairs gives an optimum.  Classes follow ``x`` order,
    then the unmatched vertices of ``y``.
    """
    b = nx.Graph()
    top = [("x", v) for v in x]
    b.add_nodes_from(top)
    b.add_nodes_from(("y", u) for u in y)
    b.add_edges_from((("x", v), ("y", u)) for v in x for u in y if not g.has_edge(v, u))
    match = nx.bipartite.hopcroft_karp_matching(b, top_nodes=top) if b.number_of_edges() else {}
    classes = [[v] + ([match[("x", v)][1]] if ("x", v) in match else []) for v in x]
    classes += [[u] for u in y if ("y", u) not in match]
    return classes


def _classes_to_coloring(classes: Sequence[Iterable[int]]) -> dict[int, int]:
    return {v: c for c, cls in enumerate(classes) for v in cls}


def max_stable_set_good(g: Graph, p: GoodPartition) -> tuple[int, ...]:
    """Lexicographically least maximum stable set (one vertex per part at most)."""
    _require_good(g, p)
    nonempty = [q for q in p.parts if q]
    for size in range(len(nonempty), 0, -1):
        best = None
        for chosen in _choices(nonempty, size):
            if g.is_stable_set(chosen):
                cand = tuple(sorted(chosen))
                if best is None or cand < best:
                    best = cand
        if best is not None:
            return best
    return ()


def _choices(parts: list[tuple[int, ...]], size: int):
    k = len(parts)
    for idx in range(1 << k):
        if bin(idx).count("1") != size:
            continue
        yield from product(*(parts[j] for j in range(k) if idx >> j & 1))


# omega == 4 -----------------------------------------------------------


def _insert_third(g: Graph, sets: list[set[int]], q3: Sequence[int]) -> None:
    """Add the vertices of ``q3`` one at a time to four stable sets.

    Each vertex goes to a free set if one is anticomplete to it.  Otherwise a
    placed Q3 vertex moves into a set with no Q3 vertex and the newcomer takes
    its place (single swap); failing that, two placed Q3 vertices rotate
    (double swap).  Vertices outside Q3 never change sets.
    """

    def clear(v: int, s: Iterable[int]) -> bool:
        return not any(g.has_edge(v, u) for u in s)

    home: dict[int, int] = {}  # placed Q3 vertex -> set index
    for w in q3:
        free = [j for j in range(4) if j not in home.values()]
        target = next((j for j in free if clear(w, sets[j])), None)
        if target is not None:
            sets[target].add(w)
            home[w] = target
            continue
        done = False
        # single swap: w_p leaves T_p for a free set t, w takes its place
        for wp, jp in sorted(home.items(), key=lambda kv: kv[1]):
            for t in free:
                if clear(wp, sets[t]) and clear(w, sets[jp] - {wp}):
                    sets[jp].discard(wp)
                    sets[jp].add(w)
                    sets[t].add(wp)
                    home[wp], home[w] = t, jp
                    done = True
                    break
            if done:
                break
        if not done:
            # double swap: w_p -> free t, w_q -> T_p, w -> T_q
            for (wp, jp), (wq, jq) in product(sorted(home.items(), key=lambda kv: kv[1]), repeat=2):
                if wp == wq:
                    continue
                for t in free:
                    if clear(wp, sets[t]) and clear(wq, sets[jp] - {wp}) and clear(w, sets[jq] - {wq}):
                        sets[jp].discard(wp)
                        sets[jq].discard(wq)
                        sets[t].add(wp)
                        sets[jp].add(wq)
                        sets[jq].add(w)
                        home[wp], home[wq], home[w] = t, jp, jq
                        done = True
                        break
                if done:
                    break
        if not done:
            raise StructuralClaimFailed(f"no swap places vertex {w} among four stable sets")


def color_good_base4(g: Graph, p: GoodPartition) -> Coloring:
    """Four-coloring of a good graph with clique number four."""
    _require_good(g, p)
    omega = clique_number(g)
    if omega != 4:
        raise PreconditionOmega(omega, "omega == 4")
    big = next(k for k, q in enumerate(p.parts) if len(q) == 4)
    rest = sorted((k for k in range(3) if k != big), key=lambda k: (-len(p.parts[k]), k))
    q1, q2, q3 = p.parts[big], p.parts[rest[0]], p.parts[rest[1]]
    base = co_bipartite_classes(g, q1, q2)
    if len(base) != 4:
        raise StructuralClaimFailed(f"co-bipartite base used {len(base)} colors, expected 4")
    sets = [set(c) for c in base]
    _insert_third(g, sets, q3)
    col = Coloring.from_mapping(g.n, _classes_to_coloring(sets))
    col.check_proper(g)
    return col


def color_good(g: Graph, p: GoodPartition) -> Coloring:
    """Optimal coloring of a good graph with clique number at least four."""
    _require_good(g, p)
    omega = clique_number(g)
    if omega <= 3:
        raise PreconditionOmega(omega, "omega >= 4")
    colors: dict[int, int] = {}
    keep = list(range(g.n))
    h, hp = g, p
    fresh = 4
    while omega > 4:
        empty = [q for q in hp.parts if not q]
        if empty:
            x, y = [q for q in hp.parts if q] + [()] * (len(empty) - 1)
            classes = co_bipartite_classes(h, x, y)
            for c, cls in enumerate(classes):
                for v in cls:
                    colors[keep[v]] = fresh + c
            h = Graph.empty(0)
            break
        s = max_stable_set_good(h, hp)
        for v in s:
            colors[keep[v]] = fresh
        fresh += 1
        h, sub = h.remove_vertices(s)
        hp = hp.restrict(sub)
        keep = [keep[v] for v in sub]
        w = clique_number(h)
        if w != omega - 1:
            raise OmegaDidNotDrop(f"omega went from {omega} to {w} after removing {sorted(keep)}")
        omega = w
    if h.n:
        base = color_good_base4(h, hp)
        for v, c in enumerate(base.colors):
            colors[keep[v]] = c
    col = Coloring.from_mapping(g.n, colors).normalized()
    col.check_proper(g)
    return col
