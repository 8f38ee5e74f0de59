"""Induced-subgraph detection for the fixed forbidden configurations.

Detection is plain backtracking over host tuples with bitset candidate sets.
Every search is deterministic: the embedding returned is the
lexicographically least host tuple, read in pattern-vertex order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph, bits, complete, cycle, path, popcount


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph

    def __str__(self) -> str:
        return self.name


def _union(*parts: Graph) -> Graph:
    g = Graph.empty(0)
    for p in parts:
        g = g.disjoint_union(p)
    return g


K1 = Graph.empty(1)
P2 = path(2)
P3 = path(3)

K4_MINUS_E = Pattern("K4-e", Graph.from_edge_list(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]))
P1_PLUS_2P2 = Pattern("P1+2P2", _union(K1, P2, P2))
TWO_P1_PLUS_P3 = Pattern("2P1+P3", _union(K1, K1, P3))
THREE_P1_PLUS_P2 = Pattern("3P1+P2", _union(K1, K1, K1, P2))
C5_PLUS_K1 = Pattern("C5+K1", _union(cycle(5), K1))


@lru_cache(maxsize=None)
def P(k: int) -> Pattern:
    if not 1 <= k <= 7:
        raise ValueError("path patterns are limited to P1..P7")
    return Pattern(f"P{k}", path(k))


@lru_cache(maxsize=None)
def C(k: int) -> Pattern:
    return Pattern(f"C{k}", cycle(k))


@lru_cache(maxsize=None)
def K(k: int) -> Pattern:
    return Pattern(f"K{k}", complete(k))


def custom(g: Graph, name: str = "custom") -> Pattern:
    return Pattern(name, g)


_NAMED = {
    "K4-e": K4_MINUS_E,
    "P1+2P2": P1_PLUS_2P2,
    "2P1+P3": TWO_P1_PLUS_P3,
    "3P1+P2": THREE_P1_PLUS_P2,
    "C5+K1": C5_PLUS_K1,
}


def pattern_by_name(name: str) -> Pattern:
    if name in _NAMED:
        return _NAMED[name]
    kind, num = name[:1], name[1:]
    if num.isdigit():
        return {"P": P, "C": C, "K": K}[kind](int(num))
    raise KeyError(name)


class ClassId(enum.Enum):
    P12P2_K4E = ("p12p2", P1_PLUS_2P2, 4)
    TWOP1P3_K4E = ("2p1p3", TWO_P1_PLUS_P3, 6)
    THREEP1P2_K4E = ("3p1p2", THREE_P1_PLUS_P2, 7)

    def __init__(self, slug: str, pattern: Pattern, constant: int):
        self.slug = slug
        self.pattern = pattern
        self.constant = constant

    @property
    def forbidden(self) -> tuple[Pattern, Pattern]:
        return (self.pattern, K4_MINUS_E)

    @classmethod
    def from_slug(cls, slug: str) -> "ClassId":
        for c in cls:
            if slug in (c.slug, c.name):
                return c
        raise KeyError(slug)

    def __str__(self) -> str:
        return self.slug


@dataclass(frozen=True)
class Embedding:
    """Induced copy of ``pattern`` in a host: pattern vertex ``i`` -> ``hosts[i]``."""

    pattern: str
    hosts: tuple[int, ...]

    @property
    def mapping(self) -> dict[int, int]:
        return dict(enumerate(self.hosts))

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "hosts": list(self.hosts)}


def is_induced_embedding(g: Graph, p: Graph, hosts: Sequence[int]) -> bool:
    """Direct adjacency check that ``hosts`` is an induced copy of ``p``."""
    if len(set(hosts)) != len(hosts) or len(hosts) != p.n:
        return False
    return all(
        g.has_edge(hosts[i], hosts[j]) == p.has_edge(i, j)
        for i in range(p.n)
        for j in range(i + 1, p.n)
    )


@lru_cache(maxsize=256)
def _plan(p: Graph) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Per pattern vertex: adjacency row, nearest earlier twin (or -1), degree.

    Twins (vertices swapped by an automorphism transposition) are forced to
    take increasing host vertices; the least tuple always satisfies this.
    """
    k = p.n
    prev_twin = []
    for j in range(k):
        t = -1
        for i in range(j - 1, -1, -1):
            if p.adj[i] & ~(1 << j) == p.adj[j] & ~(1 << i):
                t = i
                break
        prev_twin.append(t)
    return tuple(p.adj), tuple(prev_twin), tuple(popcount(r) for r in p.adj)


def _search(g: Graph, p: Graph):
    k, n = p.n, g.n
    if k > n:
        return
    if k == 0:
        yield ()
        return
    padj, prev_twin, pdeg = _plan(p)
    gadj = g.adj
    full = g.full_mask
    gdeg = [popcount(r) for r in gadj]
    # host vertices that can stand in for pattern vertex j by degree alone
    allowed = []
    for j in range(k):
        need_non = k - 1 - pdeg[j]
        m = 0
        for v in range(n):
            if gdeg[v] >= pdeg[j] and n - 1 - gdeg[v] >= need_non:
                m |= 1 << v
        allowed.append(m)

    hosts = [0] * k

    def rec(j: int, cand_by_prev: int, used: int):
        cand = cand_by_prev & allowed[j] & ~used
        t = prev_twin[j]
        if t >= 0:
            cand &= full & ~((1 << (hosts[t] + 1)) - 1)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            hosts[j] = v
            if j + 1 == k:
                yield tuple(hosts)
                continue
            nxt = full
            row = padj[j + 1]
            for i in range(j + 1):
                if row >> i & 1:
                    nxt &= gadj[hosts[i]]
                else:
                    nxt &= ~gadj[hosts[i]]
            if nxt:
                yield from rec(j + 1, nxt, used | low)

    yield from rec(0, full, 0)


def find_induced(g: Graph, pattern: Pattern | Graph) -> Embedding | None:
    """Lexicographically least induced embedding of ``pattern`` in ``g``."""
    p = pattern.graph if isinstance(pattern, Pattern) else pattern
    name = pattern.name if isinstance(pattern, Pattern) else "custom"
    for hosts in _search(g, p):
        return Embedding(name, hosts)
    return None


def find_violation(g: Graph, patterns: Iterable[Pattern]) -> Embedding | None:
    """Witness for the first pattern (in the given order) that embeds."""
    for pat in patterns:
        emb = find_induced(g, pat)
        if emb is not None:
            return emb
    return None


def is_free(g: Graph, patterns: Iterable[Pattern]) -> bool:
    return find_violation(g, patterns) is None


def class_violation(g: Graph, cls: ClassId) -> Embedding | None:
    return find_violation(g, cls.forbidden)


def in_class(g: Graph, cls: ClassId) -> bool:
    return class_violation(g, cls) is None


def class_membership(g: Graph) -> set[ClassId]:
    if find_induced(g, K4_MINUS_E) is not None:
        return set()
    return {c for c in ClassId if find_induced(g, c.pattern) is None}


# holes ---------------------------------------------------------------


def find_hole(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically least tuple ``(v1..vk)`` inducing ``C_k``, or None.

    The least tuple always starts at the smallest vertex of its cycle and has
    ``v2 < vk``, so the search only walks induced paths upward from a start
    vertex and closes them in one orientation.
    """
    if k < 3 or k > g.n:
        return None
    adj = g.adj
    full = g.full_mask

    def grow(walk: list[int], block: int, above: int) -> tuple[int, ...] | None:
        # block: closed neighborhoods of every walk vertex except the last
        last = walk[-1]
        if len(walk) == k - 1:
            inner = 1 << walk[0] | 1 << last
            for v in walk[1:-1]:
                inner |= adj[v] | 1 << v
            cand = adj[last] & adj[walk[0]] & above & ~inner & ~((2 << walk[1]) - 1)
            if cand:
                return tuple(walk) + ((cand & -cand).bit_length() - 1,)
            return None
        cand = adj[last] & above & ~block
        nblock = block | adj[last] | 1 << last
        for v in bits(cand):
            walk.append(v)
            found = grow(walk, nblock, above)
            if found:
                return found
            walk.pop()
        return None

    for s in range(g.n):
        found = grow([s], 0, full & ~((2 << s) - 1))
        if found:
            return found
    return None


def find_c5(g: Graph) -> Embedding | None:
    h = find_hole(g, 5)
    return Embedding("C5", h) if h else None


def find_c7(g: Graph) -> Embedding | None:
    h = find_hole(g, 7)
    return Embedding("C7", h) if h else None


def find_odd_hole_or_antihole(g: Graph) -> tuple[Embedding, str] | None:
    """Shortest odd hole or odd antihole (length >= 5).

    Lengths are tried in increasing order; at each length a hole of ``g`` is
    preferred to a hole of the complement.  ``C5`` is self-complementary, so
    length 5 is searched in ``g`` only.  None means ``g`` is perfect.
    """
    comp = None
    for k in range(5, g.n + 1, 2):
        h = find_hole(g, k)
        if h:
            return Embedding(f"C{k}", h), "hole"
        if k > 5:
            if comp is None:
                comp = g.complement()
            h = find_hole(comp, k)
            if h:
                return Embedding(f"C{k}-complement", h), "antihole"
    return None
