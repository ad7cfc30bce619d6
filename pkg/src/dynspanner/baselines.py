"""Reference spanner constructions used as correctness baselines.

Both are deliberately simple and slow (full BFS per decision, full rescans
on deletion); they exist to differential-test the incremental engine, not to
compete with it.
"""

from __future__ import annotations

from typing import Iterable

from .audit import shortest_cycle
from .graph import DynamicGraph, Edge, ceil_log2


def static_greedy(edges: Iterable[Edge], n: int, delta: int) -> frozenset[Edge]:
    """Threshold-greedy spanner over a fixed edge list.

    Scans edges in the given order and keeps one exactly when its endpoints
    are more than 2*delta hops apart in what has been kept so far. The
    result has girth > 2*delta and stretch at most 2*delta. Duplicate
    entries in the input are ignored.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    bound = 2 * delta
    h = DynamicGraph(n)
    for e in dict.fromkeys(edges):  # dedupe, keep first-seen order
        h.check_vertex(e.u)
        h.check_vertex(e.v)
        if not h.bfs_distance(e.u, e.v, bound).within(bound):
            h.add_edge(e)
    return h.edges()


def sparsity_bound(n: int, delta: int) -> int:
    """Edge-count ceiling for an n-vertex graph of girth > 2*delta.

    Evaluates ceil(2 * n**(1 + 1/delta)) exactly in integer arithmetic, so
    power-of-two cases never wobble on float rounding.
    """
    if n < 1 or delta < 1:
        raise ValueError(f"need n >= 1 and delta >= 1, got n={n}, delta={delta}")
    # ceil(x) for x = 2 * n**((delta+1)/delta): smallest M with M**delta >= y
    # where y = 2**delta * n**(delta+1).
    y = 2**delta * n ** (delta + 1)
    return _ceil_kth_root(y, delta)


def _ceil_kth_root(y: int, k: int) -> int:
    """Smallest integer M with M**k >= y, for y >= 1."""
    if y <= 1:
        return 1
    hi = 1 << ((y.bit_length() + k - 1) // k)  # hi**k >= y
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= y:
            hi = mid
        else:
            lo = mid + 1
    return lo


def girth_at_least(g: DynamicGraph, k: int) -> bool:
    """True when g contains no cycle of length < k."""
    c = shortest_cycle(g)
    return c is None or c >= k


class LowRecourseSpanner:
    """Distance-threshold spanner maintained the simple way.

    Insertion keeps an edge in H exactly when its endpoints are more than
    2*ceil(log2 n) hops apart in H. Deletion removes the edge from G and H,
    then re-tests every remaining non-spanner edge in ascending canonical
    order. Edges only ever leave H through external deletions, so removals
    from H are bounded by the number of delete calls.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        self.n = n
        self.threshold = 2 * ceil_log2(n)
        self.g = DynamicGraph(n)
        self.h = DynamicGraph(n)
        self.h_additions = 0
        self.h_removals = 0
        self.rule_applications = 0

    def insert(self, e: Edge) -> bool:
        """Add e to G; returns True when e also joined H."""
        self.g.add_edge(e)
        return self._apply_rule(e)

    def delete(self, e: Edge) -> None:
        """Remove e from G (and H), then re-test all non-spanner edges."""
        self.g.remove_edge(e)
        if self.h.has_edge(e):
            self.h.remove_edge(e)
            self.h_removals += 1
        for f in sorted(self.g.edges() - self.h.edges()):
            self._apply_rule(f)

    def _apply_rule(self, e: Edge) -> bool:
        self.rule_applications += 1
        if self.h.bfs_distance(e.u, e.v, self.threshold).within(self.threshold):
            return False
        self.h.add_edge(e)
        self.h_additions += 1
        return True
