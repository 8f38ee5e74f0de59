"""Near-optimal colorers for the three (F, K4-e)-free classes.

Every colorer returns ``(Coloring, Certificate)``.  The coloring is checked
proper before it is returned and the certificate replays to it exactly.
Bounds that rest on external results are realized by the exact oracle and
then asserted; a failed assertion raises a :class:`Finding` subclass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .certificate import Certificate
from .decomposition import C5Decomposition, decompose_c5
from .errors import (
    BoundAssertionFailed,
    ImproperColoring,
    NotInAnyClass,
    NotInClass,
    StructuralClaimFailed,
)
from .goodgraph import GoodPartition, co_bipartite_classes, color_good, validate_good
from .graph import Coloring, Graph, bits
from .oracle import (
    DEFAULT_BUDGET,
    PERFECT_TIER_N,
    OracleBudget,
    chromatic_number,
    clique_number,
    is_perfect,
    max_clique,
    two_color,
)
from .patterns import ClassId, class_membership, class_violation, find_c5, find_c7, in_class

FALLBACK_REASON = "structure-theorem fallback"
FLAG_FALLBACK_NONPERFECT = "FALLBACK_ON_NONPERFECT"

# minimum-degree threshold under which a vertex is peeled (omega >= 4 branch)
PEEL_DEGREE = {ClassId.TWOP1P3_K4E: 5, ClassId.THREEP1P2_K4E: 6}


@dataclass(frozen=True)
class BoundTarget:
    cls: ClassId
    omega: int

    @property
    def target(self) -> int:
        if self.omega <= 2:
            return 3
        if self.omega == 3:
            return 4 if self.cls is ClassId.P12P2_K4E else 5
        return max(self.cls.constant, self.omega)


def bound_target(cls: ClassId, omega: int) -> int:
    return BoundTarget(cls, omega).target


def _require_member(g: Graph, cls: ClassId) -> None:
    emb = class_violation(g, cls)
    if emb is not None:
        raise NotInClass(emb)


def _exact(g: Graph, budget: OracleBudget) -> tuple[int, Coloring]:
    return chromatic_number(g, budget)


def _lift(col: Iterable[int], ids: Sequence[int], offset: int = 0) -> dict[int, int]:
    return {ids[v]: c + offset for v, c in enumerate(col)}


def _finish(g: Graph, cert: Certificate, colors: dict[int, int]) -> tuple[Coloring, Certificate]:
    col = Coloring.from_mapping(g.n, colors)
    col.check_proper(g)
    if cert.replay(g) != col:
        raise StructuralClaimFailed("certificate replay does not reproduce the coloring")
    return col, cert


def _small_omega_base(g: Graph, cert: Certificate, budget: OracleBudget) -> dict[int, int]:
    chi, col = _exact(g, budget)
    if chi > 3:
        raise BoundAssertionFailed(f"triangle-free member needs {chi} > 3 colors")
    cert.add("ExactBase", dict(enumerate(col.colors)), reason="triangle-free bound", chi=chi)
    return dict(enumerate(col.colors))


def _two_coloring(g: Graph, vertices: Iterable[int], what: str) -> dict[int, int]:
    sub, ids = g.induced_subgraph(vertices)
    col = two_color(sub)
    if col is None:
        raise StructuralClaimFailed(f"{what} is not bipartite")
    return _lift(col.colors, ids)


# class 1 -------------------------------------------------------------


def color_p1_2p2(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[Coloring, Certificate]:
    """Coloring with at most max(4, omega) colors (at most 3 when omega <= 2).

    A maximum clique anchors three vertices v1, v2, v3; the rest splits by
    trace into R_i (sees only v_i), M (sees all three) and M' (sees none).
    """
    cls = ClassId.P12P2_K4E
    _require_member(g, cls)
    omega = clique_number(g, budget)
    cert = Certificate(cls.slug, g.n, omega, bound_target(cls, omega))
    if g.n == 0:
        return _finish(g, cert, {})
    if omega <= 2:
        return _finish(g, cert, _small_omega_base(g, cert, budget))

    K = max_clique(g, budget)
    C = K[:3]
    cert.add("MaxCliqueAnchor", C=list(C))
    R: list[list[int]] = [[], [], []]
    M: list[int] = []
    Mp: list[int] = []
    for v in range(g.n):
        if v in C:
            continue
        trace = [i for i in range(3) if g.has_edge(v, C[i])]
        if not trace:
            Mp.append(v)
        elif len(trace) == 3:
            M.append(v)
        elif len(trace) == 1:
            R[trace[0]].append(v)
        else:
            raise StructuralClaimFailed(f"vertex {v} sees exactly two anchor vertices {trace}")
    rest = sorted(R[0] + R[1] + R[2] + Mp)

    if g.is_clique(rest):
        classes = co_bipartite_classes(g, sorted(C + tuple(M)), rest)
        colors = {v: c for c, cl in enumerate(classes) for v in cl}
        cert.add("CoBipartiteBase", colors, cliques=[sorted(C + tuple(M)), rest])
        return _finish(g, cert, colors)

    ell = next((i for i in range(3) if two_color(g.induced_subgraph(R[i] + Mp)[0]) is not None), None)
    if ell is None:
        raise StructuralClaimFailed("no R_i together with M' induces a bipartite graph")
    cert.add("LFound", ell=ell + 1)
    v1, v2, v3 = C[ell], C[(ell + 1) % 3], C[(ell + 2) % 3]
    r1, r2, r3 = R[ell], R[(ell + 1) % 3], R[(ell + 2) % 3]

    colors: dict[int, int] = {}
    piece1 = _two_coloring(g, r1 + Mp + [v2, v3], "R_1 with M' and v2, v3")
    cert.add("PieceColoring", piece1, piece=1, offset=0)
    colors.update(piece1)
    second = r2 + r3 + [v1]
    others = list(M)
    if omega >= 4:
        u = min(set(K) - set(C))
        second.append(u)
        others.remove(u)
    piece2 = {v: c + 2 for v, c in _two_coloring(g, second, "R_2, R_3 with the anchor").items()}
    cert.add("PieceColoring", piece2, piece=2, offset=2)
    colors.update(piece2)
    if others:
        piece3 = {v: 4 + k for k, v in enumerate(sorted(others))}
        cert.add("PieceColoring", piece3, piece=3, offset=4)
        colors.update(piece3)
    return _finish(g, cert, colors)


# classes 2 and 3 -----------------------------------------------------


def _omega3_base(g: Graph, cert: Certificate, budget: OracleBudget) -> dict[int, int]:
    """Two colors on N(v) (a matching), at most three on the rest."""
    v = 0
    nbrs = list(bits(g.adj[v]))
    colors = _two_coloring(g, nbrs, "neighborhood of the anchor")
    cert.add("PieceColoring", colors, piece=1, offset=0)
    far, ids = g.remove_vertices(nbrs)
    chi, col = _exact(far, budget)
    if chi > 3:
        raise BoundAssertionFailed(f"non-neighborhood needs {chi} > 3 colors")
    piece2 = _lift(col.colors, ids, 2)
    cert.add("ExactBase", piece2, reason="non-neighborhood bound", chi=chi)
    colors.update(piece2)
    return colors


def _rotations(cyc: Sequence[int]) -> list[tuple[int, ...]]:
    out = []
    for seq in (tuple(cyc), tuple(reversed(cyc))):
        for s in range(5):
            out.append(seq[s:] + seq[:s])
    return out


def candidate_partitions(d: C5Decomposition) -> list[tuple[str, tuple[tuple[int, ...], ...]]]:
    """Good-partition shapes read off one C5 decomposition (position 1 is the anchor)."""
    v, A, D, Z, X = d.v, d.A, d.D, d.Z, d.X
    hub = (v(0),) + A[0] + D[1] + D[4] + Z[0]
    return [
        ("hub", (hub, (v(1), v(2)) + X(1), (v(3), v(4)) + X(3))),
        ("pairs-left", ((v(0), v(1)) + X(0), (v(2),) + X(1), (v(3), v(4)) + X(3))),
        ("pairs-right", ((v(0),) + X(0), (v(1), v(2)) + X(1), (v(3), v(4)) + X(3))),
        ("triple", ((v(0), v(1)) + X(0), (v(2), v(3)) + X(2), (v(4),) + X(4))),
    ]


def _try_good(h: Graph, cyc: Sequence[int]):
    for orient in _rotations(cyc):
        d = decompose_c5(h, orient)
        for name, parts in candidate_partitions(d):
            p = GoodPartition.of(*parts)
            if validate_good(h, p):
                return name, orient, p
    return None


def _explicit_six(h: Graph, d: C5Decomposition) -> list[list[int]] | None:
    if any(d.A[i] or d.B[i] for i in range(5)) or d.T:
        return None
    sets = [[d.v(j)] + list(d.D[j]) for j in range(5)] + [d.union("Z")]
    if all(h.is_stable_set(s) for s in sets):
        return sets
    return None


def _color_core(
    h: Graph, ids: Sequence[int], ell: int, cert: Certificate, budget: OracleBudget, tier_n: int
) -> dict[int, int]:
    """Color a graph of minimum degree above the peel threshold with <= ell colors."""
    if h.n == 0:
        return {}
    perfect = is_perfect(h, tier_n) if h.n <= tier_n else None
    if perfect:
        chi, col = _exact(h, budget)
        w = clique_number(h, budget)
        if chi != w or chi > ell:
            raise BoundAssertionFailed(f"perfect core colored with {chi} colors, omega {w}, budget {ell}")
        out = _lift(col.colors, ids)
        cert.add("PerfectBase", out, chi=chi)
        return out

    c5 = find_c5(h)
    if c5 is None:
        c7 = find_c7(h)
        if c7 is not None and h.n == 7:
            out = {ids[c7.hosts[k]]: (k % 2 if k < 6 else 2) for k in range(7)}
            cert.add("C7Isomorphic", out)
            return out
    else:
        found = _try_good(h, c5.hosts)
        if found is not None and clique_number(h, budget) >= 4:
            name, orient, p = found
            out = _lift(color_good(h, p).colors, ids)
            if max(out.values()) >= ell:
                raise BoundAssertionFailed(f"good core needs more than {ell} colors")
            cert.add(
                "GoodPartitionUsed",
                out,
                shape=name,
                cycle=[ids[v] for v in orient],
                Q1=[ids[v] for v in p.Q1],
                Q2=[ids[v] for v in p.Q2],
                Q3=[ids[v] for v in p.Q3],
            )
            return out
        sets = _explicit_six(h, decompose_c5(h, c5.hosts))
        if sets is not None:
            out = {ids[v]: j for j, s in enumerate(sets) for v in s}
            cert.add("ExplicitStableSets", out, sets=[sorted(ids[v] for v in s) for s in sets])
            return out

    chi, col = _exact(h, budget)
    if chi > ell:
        raise BoundAssertionFailed(f"fallback core needs {chi} > {ell} colors")
    out = _lift(col.colors, ids)
    cert.add("ExactBase", out, reason=FALLBACK_REASON, chi=chi, core=sorted(ids))
    if perfect is not True and clique_number(h, budget) >= 4:
        cert.flags.append(FLAG_FALLBACK_NONPERFECT)
    return out


def _color_peeling(
    g: Graph, cls: ClassId, budget: OracleBudget, tier_n: int, debug: bool
) -> tuple[Coloring, Certificate]:
    _require_member(g, cls)
    omega = clique_number(g, budget)
    cert = Certificate(cls.slug, g.n, omega, bound_target(cls, omega))
    if g.n == 0:
        return _finish(g, cert, {})
    if omega <= 2:
        return _finish(g, cert, _small_omega_base(g, cert, budget))
    if omega == 3:
        return _finish(g, cert, _omega3_base(g, cert, budget))

    ell = max(cls.constant, omega)
    threshold = PEEL_DEGREE[cls]
    h, ids = g, list(range(g.n))
    peeled: list[int] = []
    while h.n:
        v, deg = h.min_degree_vertex()
        if deg > threshold:
            break
        cert.add("PeelMinDegree", v=ids[v], degree_bound=threshold)
        peeled.append(ids[v])
        h, sub = h.remove_vertices([v])
        ids = [ids[u] for u in sub]
        if debug and not in_class(h, cls):
            raise StructuralClaimFailed("peeling left the class")

    colors = _color_core(h, ids, ell, cert, budget, tier_n)
    for v in reversed(peeled):
        taken = {colors[u] for u in bits(g.adj[v]) if u in colors}
        c = 0
        while c in taken:
            c += 1
        if c >= ell:
            raise BoundAssertionFailed(f"peeled vertex {v} needs color {c} >= {ell}")
        colors[v] = c
    return _finish(g, cert, colors)


def color_2p1_p3(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, tier_n: int = PERFECT_TIER_N, debug: bool = False
) -> tuple[Coloring, Certificate]:
    """Coloring with at most 3 / 5 / max(6, omega) colors for omega <= 2 / = 3 / >= 4."""
    return _color_peeling(g, ClassId.TWOP1P3_K4E, budget, tier_n, debug)


def color_3p1_p2(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, tier_n: int = PERFECT_TIER_N, debug: bool = False
) -> tuple[Coloring, Certificate]:
    """Coloring with at most 3 / 5 / max(7, omega) colors for omega <= 2 / = 3 / >= 4."""
    return _color_peeling(g, ClassId.THREEP1P2_K4E, budget, tier_n, debug)


def color_in_class(
    g: Graph, cls: ClassId, budget: OracleBudget = DEFAULT_BUDGET, tier_n: int = PERFECT_TIER_N, debug: bool = False
) -> tuple[Coloring, Certificate]:
    if cls is ClassId.P12P2_K4E:
        return color_p1_2p2(g, budget)
    return _color_peeling(g, cls, budget, tier_n, debug)


def color_auto(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, tier_n: int = PERFECT_TIER_N
) -> tuple[ClassId, Coloring, Certificate]:
    """Use the member class with the smallest bound constant."""
    member = class_membership(g)
    if not member:
        raise NotInAnyClass("graph belongs to none of the three classes")
    cls = min(member, key=lambda c: c.constant)
    col, cert = color_in_class(g, cls, budget, tier_n)
    return cls, col, cert


def verify_bound(g: Graph, cls: ClassId, coloring: Coloring, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    if not coloring.is_proper(g):
        bad = coloring.conflict(g) if len(coloring.colors) == g.n else None
        raise ImproperColoring(bad, "coloring is not proper")
    return coloring.palette_size <= bound_target(cls, clique_number(g, budget))
