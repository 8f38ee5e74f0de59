"""Partition of the vertices around an induced 5-cycle (and 7-cycle).

Indices: the cycle is ``C = (v1, ..., v5)`` and every family below is a
5-tuple whose Python index ``i`` (0..4) stands for cycle position ``i + 1``.
All index arithmetic is mod 5.  Membership always comes from the
neighborhood trace on ``C``:

    A_i  trace {v_i}
    B_i  trace {v_i, v_{i+1}}
    D_i  trace {v_{i-1}, v_{i+1}}
    Z_i  trace {v_{i-2}, v_i, v_{i+2}}
    T    empty trace
    X_i  = B_i | Z_{i-2}

Any other trace contains three consecutive cycle vertices, which together
with the vertex induce a K4-e.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ForbiddenTrace, NotACycle, UnclassifiableVertex
from .graph import Graph, bits, mask_of, popcount

# A vertex whose trace is {v1, v3, v4} (a B_3-type vertex that also sees v1)
# is Z_1, so it belongs to X_3 = B_3 | Z_1.  Membership is always read off the
# trace, so relabelled prose never changes the partition.
TRACE_NOTE = (
    "note: trace {v1,v3,v4} is classified Z1 (inside X3 = B3 | Z1); "
    "sets are always computed from neighborhood traces"
)

LEVELS = ("O", "M", "L")


def _trace_table() -> dict[int, tuple[str, int]]:
    table: dict[int, tuple[str, int]] = {0: ("T", -1)}
    for i in range(5):
        table[1 << i] = ("A", i)
        table[1 << i | 1 << (i + 1) % 5] = ("B", i)
        table[1 << (i - 1) % 5 | 1 << (i + 1) % 5] = ("D", i)
        table[1 << (i - 2) % 5 | 1 << i | 1 << (i + 2) % 5] = ("Z", i)
    return table


_TRACES = _trace_table()


def check_induced_cycle(g: Graph, cyc: Sequence[int]) -> None:
    k = len(cyc)
    if len(set(cyc)) != k or any(not 0 <= v < g.n for v in cyc):
        raise NotACycle(f"{tuple(cyc)} is not a set of {k} distinct vertices")
    for a in range(k):
        for b in range(a + 1, k):
            want = (b - a) % k in (1, k - 1)
            if g.has_edge(cyc[a], cyc[b]) != want:
                raise NotACycle(f"{tuple(cyc)} does not induce C{k}")


@dataclass(frozen=True)
class C5Decomposition:
    C: tuple[int, ...]
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    Z: tuple[tuple[int, ...], ...]
    T: tuple[int, ...]

    def X(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(self.B[i % 5] + self.Z[(i - 2) % 5]))

    def v(self, i: int) -> int:
        return self.C[i % 5]

    def family(self, name: str) -> tuple[tuple[int, ...], ...]:
        if name == "X":
            return tuple(self.X(i) for i in range(5))
        return getattr(self, name)

    def union(self, name: str, exclude: int | None = None) -> tuple[int, ...]:
        fam = self.family(name)
        return tuple(sorted(v for i in range(5) if i != exclude for v in fam[i]))

    def label_of(self, v: int) -> str:
        if v in self.C:
            return f"v{self.C.index(v) + 1}"
        if v in self.T:
            return "T"
        for name in "ABDZ":
            for i, part in enumerate(getattr(self, name)):
                if v in part:
                    return f"{name}{i + 1}"
        raise KeyError(v)

    def lines(self) -> list[str]:
        out = ["C " + " ".join(map(str, self.C))]
        for name in "ABDZX":
            fam = self.family(name)
            for i in range(5):
                out.append(f"{name}{i + 1} " + " ".join(map(str, fam[i])))
        out.append("T " + " ".join(map(str, self.T)))
        return [ln.rstrip() for ln in out]


def decompose_c5(g: Graph, cyc: Sequence[int]) -> C5Decomposition:
    cyc = tuple(cyc)
    if len(cyc) != 5:
        raise NotACycle("a C5 decomposition needs five cycle vertices")
    check_induced_cycle(g, cyc)
    fams = {k: [[] for _ in range(5)] for k in "ABDZ"}
    T: list[int] = []
    cmask = mask_of(cyc)
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        trace = 0
        for pos, c in enumerate(cyc):
            if g.adj[v] >> c & 1:
                trace |= 1 << pos
        hit = _TRACES.get(trace)
        if hit is None:
            i = next(i for i in range(5) if all(trace >> ((i + d) % 5) & 1 for d in range(3)))
            raise ForbiddenTrace(v, (cyc[i], cyc[(i + 1) % 5], cyc[(i + 2) % 5], v))
        kind, i = hit
        if kind == "T":
            T.append(v)
        else:
            fams[kind][i].append(v)
    return C5Decomposition(
        cyc,
        *(tuple(tuple(p) for p in fams[k]) for k in "ABDZ"),
        tuple(T),
    )


# property checks ------------------------------------------------------


@dataclass(frozen=True)
class PropertyResult:
    prop: str
    index: int  # cycle position, 1-based
    holds: bool
    witness: tuple[int, ...] | None = None

    def line(self) -> str:
        s = f"{self.prop}[i={self.index}] {'PASS' if self.holds else 'FAIL'}"
        if self.witness is not None:
            s += " witness=" + ",".join(map(str, self.witness))
        return s


@dataclass
class PropertyReport:
    level: str
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.holds]

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def _nonadjacent_pair(g: Graph, s: Sequence[int]) -> tuple[int, int] | None:
    s = sorted(s)
    for a in range(len(s)):
        for b in range(a + 1, len(s)):
            if not g.has_edge(s[a], s[b]):
                return (s[a], s[b])
    return None


def _adjacent_pair(g: Graph, s: Sequence[int]) -> tuple[int, int] | None:
    s = sorted(s)
    for a in range(len(s)):
        for b in range(a + 1, len(s)):
            if g.has_edge(s[a], s[b]):
                return (s[a], s[b])
    return None


def _first_non_edge_between(g: Graph, s: Sequence[int], t: Sequence[int]):
    for u in sorted(s):
        for v in sorted(t):
            if not g.has_edge(u, v):
                return (u, v)
    return None


def _first_edge_between(g: Graph, s: Sequence[int], t: Sequence[int]):
    for u in sorted(s):
        for v in sorted(t):
            if g.has_edge(u, v):
                return (u, v)
    return None


def _graded_witness(g: Graph, s: Sequence[int], t: Sequence[int]):
    w = _nonadjacent_pair(g, s) or _nonadjacent_pair(g, t)
    if w:
        return w
    for a, b in ((s, t), (t, s)):
        mb = mask_of(b)
        for v in sorted(a):
            hit = g.adj[v] & mb
            if popcount(hit) > 1:
                return (v,) + tuple(bits(hit))[:2]
    return None


def _one_empty(*sets: Sequence[int]):
    if all(sets):
        return tuple(min(s) for s in sets)
    return None


def _u(*sets: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(set().union(*sets)))


def _rules(g: Graph, d: C5Decomposition) -> dict[str, Callable[[int], tuple | None]]:
    A, B, D, Z, T, X = d.A, d.B, d.D, d.Z, d.T, d.X

    def a(i):
        return A[i % 5]

    def b(i):
        return B[i % 5]

    def dd(i):
        return D[i % 5]

    def z(i):
        return Z[i % 5]

    def o1(i):
        w = _adjacent_pair(g, dd(i))
        if w:
            return w
        return tuple(z(i)[:2]) if len(z(i)) > 1 else None

    def o3(i):
        other = _u(a(i), a(i + 1), b(i - 1), b(i + 1), d.union("D", (i - 2) % 5), d.union("Z", (i - 2) % 5))
        return _first_edge_between(g, X(i), other)

    def m2(i):
        other = _u(d.union("A", i % 5), b(i + 2), d.union("D", i % 5), z(i))
        return _first_non_edge_between(g, a(i), other)

    def l3(i):
        return _first_non_edge_between(g, a(i), _u(a(i + 2), dd(i + 1))) or _first_non_edge_between(
            g, a(i), _u(a(i - 2), dd(i - 1))
        )

    def l4(i):
        if _u(a(i), dd(i + 1)) and len(X(i - 1)) > 1:
            return (min(_u(a(i), dd(i + 1))),) + X(i - 1)[:2]
        if _u(a(i), dd(i - 1)) and len(X(i)) > 1:
            return (min(_u(a(i), dd(i - 1))),) + X(i)[:2]
        return None

    def l8(i):
        w = _one_empty(z(i), _u(b(i), b(i + 1), z(i - 2)), dd(i + 1))
        if w:
            return w
        big = _u(dd(i + 1), z(i), z(i - 2))
        return big[:3] if len(big) > 2 else None

    return {
        "O1": o1,
        "O2": lambda i: _graded_witness(g, X(i), X(i + 2)),
        "O3": o3,
        "M1": lambda i: _nonadjacent_pair(g, _u(a(i), T)),
        "M2": m2,
        "M3": lambda i: _one_empty(X(i), _u(dd(i - 1), dd(i + 2))),
        "L1": lambda i: tuple(dd(i)[:2]) if len(dd(i)) > 1 else None,
        "L2": lambda i: _nonadjacent_pair(g, _u(a(i), T)),
        "L3": l3,
        "L4": l4,
        "L5": lambda i: _one_empty(_u(a(i), dd(i)), b(i - 1), b(i)),
        "L6": lambda i: _one_empty(a(i), _u(dd(i + 1), dd(i - 1)), z(i)),
        "L7": lambda i: _one_empty(b(i), _u(dd(i + 2), dd(i - 1)), z(i - 2)),
        "L8": l8,
    }


_LEVEL_PROPS = {
    "O": ("O1", "O2", "O3"),
    "M": ("O1", "O2", "O3", "M1", "M2", "M3"),
    "L": ("O1", "O2", "O3", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"),
}


def check_properties(g: Graph, dec: C5Decomposition, level: str = "O") -> PropertyReport:
    """Evaluate every property of ``level`` at every cycle position.

    Level O suits any (K4-e)-free host, M adds the (2P1+P3)-free properties,
    L the (3P1+P2)-free ones.  Failures are report entries, never errors.
    """
    if level not in _LEVEL_PROPS:
        raise ValueError(f"level must be one of {LEVELS}")
    rules = _rules(g, dec)
    report = PropertyReport(level)
    for prop in _LEVEL_PROPS[level]:
        for i in range(5):
            w = rules[prop](i)
            report.results.append(PropertyResult(prop, i + 1, w is None, None if w is None else tuple(w)))
    return report


def structural_flags(dec: C5Decomposition) -> frozenset[str]:
    A, B = dec.A, dec.B
    flags = set()
    for i in range(5):
        if A[i] and dec.X(i):
            flags.add("HAS_F1")
        if A[i] and A[(i + 1) % 5]:
            flags.add("HAS_F2")
        if B[i] and B[(i + 2) % 5] and B[(i + 4) % 5]:
            flags.add("HAS_F3")
        if B[i] and B[(i + 2) % 5] and A[(i + 4) % 5]:
            flags.add("HAS_F4")
    if dec.T:
        flags.add("HAS_C5K1")
    return frozenset(flags)


# 7-cycle ------------------------------------------------------------------


@dataclass(frozen=True)
class C7Partition:
    C: tuple[int, ...]
    A: tuple[tuple[int, ...], ...]


def decompose_c7(g: Graph, cyc: Sequence[int]) -> C7Partition:
    """Place every non-cycle vertex in A_i: sees v_i, v_{i+1}; misses v_{i+2}, v_{i-1}, v_{i-3}.

    In a (3P1+P2, K4-e, C5)-free host every vertex lands in exactly one A_i and
    no A_i holds two vertices; anything else raises UnclassifiableVertex.
    """
    cyc = tuple(cyc)
    if len(cyc) != 7:
        raise NotACycle("a C7 partition needs seven cycle vertices")
    check_induced_cycle(g, cyc)
    parts: list[list[int]] = [[] for _ in range(7)]
    cmask = mask_of(cyc)
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        seen = [bool(g.adj[v] >> c & 1) for c in cyc]
        homes = [
            i
            for i in range(7)
            if seen[i] and seen[(i + 1) % 7] and not (seen[(i + 2) % 7] or seen[(i - 1) % 7] or seen[(i - 3) % 7])
        ]
        if len(homes) != 1:
            trace = [f"v{i + 1}" for i in range(7) if seen[i]]
            raise UnclassifiableVertex(v, "trace {" + ",".join(trace) + "}")
        parts[homes[0]].append(v)
        if len(parts[homes[0]]) > 1:
            raise UnclassifiableVertex(v, f"A{homes[0] + 1} already holds {parts[homes[0]][0]}")
    return C7Partition(cyc, tuple(tuple(p) for p in parts))
