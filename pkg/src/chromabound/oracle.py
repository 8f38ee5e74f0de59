"""Exact desk-scale ground truth: cliques, stable sets, colorings, perfection.

All searches are single-threaded and deterministic.  When a search runs out
of budget it raises :class:`BudgetExceeded`; it never returns a guess.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded, ScaleLimit
from .graph import Coloring, Graph, bits, popcount
from .patterns import find_odd_hole_or_antihole

PERFECT_TIER_N = 40


@dataclass(frozen=True)
class OracleBudget:
    node_limit: int = 20_000_000
    time_hint: float | None = None

    def __post_init__(self):
        if self.node_limit <= 0 or (self.time_hint is not None and self.time_hint <= 0):
            raise ValueError("budget must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget: OracleBudget):
        self.left = budget.node_limit

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("oracle node budget exhausted")


def _color_bound(adj: tuple[int, ...], p: int) -> int:
    """Number of classes in a greedy sequential coloring of ``p``."""
    k = 0
    while p:
        k += 1
        q = p
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            p &= ~(1 << v)
    return k


def clique_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Size of a maximum clique, by branch and bound with a coloring bound."""
    adj = g.adj
    best = 0
    ctr = _Counter(budget)

    def expand(size: int, p: int) -> None:
        nonlocal best
        ctr.tick()
        # sequential greedy coloring of p; visit vertices by decreasing color
        order: list[tuple[int, int]] = []
        rest = p
        color = 0
        while rest:
            color += 1
            q = rest
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, color))
        for v, c in reversed(order):
            if size + c <= best:
                return
            np = p & adj[v]
            if np:
                expand(size + 1, np)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if g.n:
        expand(0, g.full_mask)
    return best


def _least_clique_of_size(g: Graph, k: int, ctr: _Counter) -> tuple[int, ...] | None:
    adj = g.adj
    chosen: list[int] = []

    def rec(p: int, need: int) -> bool:
        ctr.tick()
        if need == 0:
            return True
        if popcount(p) < need or _color_bound(adj, p) < need:
            return False
        for v in bits(p):
            chosen.append(v)
            if rec(p & adj[v] & ~((2 << v) - 1), need - 1):
                return True
            chosen.pop()
        return False

    if rec(g.full_mask, k):
        return tuple(chosen)
    return None


def max_clique(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Lexicographically least clique of maximum size, as a sorted tuple."""
    w = clique_number(g, budget)
    found = _least_clique_of_size(g, w, _Counter(budget))
    assert found is not None
    return found


def max_stable_set(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ...]:
    return max_clique(g.complement(), budget)


def dsatur_greedy(g: Graph) -> Coloring:
    """Plain DSATUR: most saturated vertex first, smallest free color."""
    n = g.n
    adj = g.adj
    colors = [-1] * n
    nbr_colors = [0] * n  # bitmask of colors seen in the neighborhood
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (popcount(nbr_colors[u]), popcount(adj[u]), -u))
        used = nbr_colors[v]
        c = 0
        while used >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in bits(adj[v]):
            nbr_colors[u] |= 1 << c
    return Coloring(tuple(colors))


def k_colorable(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> Coloring | None:
    """A proper coloring with at most ``k`` colors, or None if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    n = g.n
    if n == 0:
        return Coloring(())
    if k == 0:
        return None
    ctr = _Counter(budget)
    adj = g.adj
    clique = max_clique(g, budget)
    if len(clique) > k:
        return None
    colors = [-1] * n
    classes = [0] * k
    for c, v in enumerate(clique):
        colors[v] = c
        classes[c] |= 1 << v
    uncolored = g.full_mask
    for v in clique:
        uncolored &= ~(1 << v)

    def rec(uncolored: int, used: int) -> bool:
        ctr.tick()
        if not uncolored:
            return True
        # DSATUR choice: fewest available colors, then most uncolored neighbors
        best = -1
        best_key = None
        best_avail = 0
        for v in bits(uncolored):
            row = adj[v]
            avail = 0
            for c in range(used):
                if not row & classes[c]:
                    avail |= 1 << c
            navail = popcount(avail) + (1 if used < k else 0)
            if navail == 0:
                return False
            key = (navail, -popcount(row & uncolored))
            if best_key is None or key < best_key:
                best, best_key, best_avail = v, key, avail
        v = best
        rest = uncolored & ~(1 << v)
        for c in bits(best_avail):
            colors[v] = c
            classes[c] |= 1 << v
            if rec(rest, used):
                return True
            classes[c] &= ~(1 << v)
        if used < k:
            colors[v] = used
            classes[used] |= 1 << v
            if rec(rest, used + 1):
                return True
            classes[used] &= ~(1 << v)
        colors[v] = -1
        return False

    if rec(uncolored, len(clique)):
        return Coloring(tuple(colors))
    return None


def chromatic_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal coloring.

    Iterative deepening from the clique bound up to the DSATUR bound.
    """
    if g.n == 0:
        return 0, Coloring(())
    upper = dsatur_greedy(g)
    ub = upper.palette_size
    lb = clique_number(g, budget)
    for k in range(lb, ub):
        col = k_colorable(g, k, budget)
        if col is not None:
            return col.palette_size, col
    return ub, upper


def two_color(g: Graph) -> Coloring | None:
    """BFS bipartition; None when an odd cycle exists."""
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] >= 0:
            continue
        colors[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if colors[u] < 0:
                    colors[u] = 1 - colors[v]
                    queue.append(u)
                elif colors[u] == colors[v]:
                    return None
    return Coloring(tuple(colors))


def is_perfect(g: Graph, tier_n: int = PERFECT_TIER_N) -> bool:
    """Perfection via odd hole / odd antihole search.

    Raises ScaleLimit above ``tier_n`` vertices rather than guessing.
    """
    if g.n > tier_n:
        raise ScaleLimit(f"perfection is only certified for n <= {tier_n}")
    return find_odd_hole_or_antihole(g) is None
