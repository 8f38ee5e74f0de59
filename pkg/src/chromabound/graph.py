"""Immutable simple graphs over dense vertex indices, stored as bitset rows.

Vertex sets are Python ints used as bit vectors: bit ``v`` set means vertex
``v`` is a member.  Python ints have no fixed width, so the same code path
serves graphs above 64 vertices; only speed degrades.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptyGraph, ImproperColoring, IndexOutOfRange, OverlappingSets, SelfLoop


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitset of ``v``.  Instances are never mutated;
    every "edit" returns a new graph.  Methods taking a vertex set accept any
    iterable of indices or a bitset int.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise IndexOutOfRange(f"neighbor of {v} outside [0, {self.n})")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge {u}-{v} outside [0, {n})")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    to_edge_list = edges

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v])

    def min_degree_vertex(self) -> tuple[int, int]:
        """Vertex of minimum degree, lowest index on ties."""
        if self.n == 0:
            raise EmptyGraph("minimum degree of the empty graph")
        best = min(range(self.n), key=lambda v: (popcount(self.adj[v]), v))
        return best, popcount(self.adj[best])

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``G[S]`` and the list mapping new index -> old index.

        New indices follow increasing old index.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(keep), tuple(rows)), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        sub, keep = self.induced_subgraph(order)
        if len(order) != self.n or keep != sorted(order):
            raise ValueError("order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edge_list(self.n, [(pos[u], pos[v]) for u, v in self.edges()])

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(r << shift for r in other.adj))

    # set predicates -------------------------------------------------

    def is_clique(self, vertices: Iterable[int]) -> bool:
        s = self._mask(vertices)
        return all((s & ~(1 << v)) & ~self.adj[v] == 0 for v in bits(s))

    def is_stable_set(self, vertices: Iterable[int]) -> bool:
        s = self._mask(vertices)
        return all(self.adj[v] & s == 0 for v in bits(s))

    def is_special(self, a: Iterable[int], b: Iterable[int]) -> bool:
        """Each vertex of ``a`` has at most one neighbor in ``b`` and vice versa."""
        ma, mb = self._disjoint(a, b)
        return all(popcount(self.adj[v] & mb) <= 1 for v in bits(ma)) and all(
            popcount(self.adj[v] & ma) <= 1 for v in bits(mb)
        )

    def are_graded(self, a: Iterable[int], b: Iterable[int]) -> bool:
        ma, mb = self._disjoint(a, b)
        return self.is_special(ma, mb) and self.is_clique(ma) and self.is_clique(mb)

    def anticomplete(self, a: Iterable[int], b: Iterable[int]) -> bool:
        ma, mb = self._disjoint(a, b)
        return all(self.adj[v] & mb == 0 for v in bits(ma))

    def complete_between(self, a: Iterable[int], b: Iterable[int]) -> bool:
        ma, mb = self._disjoint(a, b)
        return all(self.adj[v] & mb == mb for v in bits(ma))

    # helpers ----------------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {self.n})")

    def _mask(self, vertices: Iterable[int]) -> int:
        if isinstance(vertices, int):
            if vertices & ~self.full_mask:
                raise IndexOutOfRange("vertex set outside the graph")
            return vertices
        m = 0
        for v in vertices:
            self._check(v)
            m |= 1 << v
        return m

    def _disjoint(self, a, b) -> tuple[int, int]:
        ma, mb = self._mask(a), self._mask(b)
        if ma & mb:
            raise OverlappingSets(f"sets share vertices {list(bits(ma & mb))}")
        return ma, mb

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def path(k: int) -> Graph:
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return Graph.complete(k)


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex (``colors[v]``)."""

    colors: tuple[int, ...]

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> "Coloring":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"coloring is not total; missing {missing}")
        return cls(tuple(mapping[v] for v in range(n)))

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def conflict(self, g: Graph) -> tuple[int, int] | None:
        """First monochromatic edge, or None."""
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                return (u, v)
        return None

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(c >= 0 for c in self.colors) and self.conflict(g) is None

    def check_proper(self, g: Graph) -> None:
        if len(self.colors) != g.n:
            raise ImproperColoring(None, f"coloring has {len(self.colors)} entries for {g.n} vertices")
        if any(c < 0 for c in self.colors):
            raise ImproperColoring(None, "negative color index")
        bad = self.conflict(g)
        if bad is not None:
            raise ImproperColoring(bad)

    def normalized(self) -> "Coloring":
        """Relabel colors to 0..k-1 in order of first appearance."""
        remap: dict[int, int] = {}
        return Coloring(tuple(remap.setdefault(c, len(remap)) for c in self.colors))
