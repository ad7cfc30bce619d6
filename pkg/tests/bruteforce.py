"""Deliberately dumb reference computations for deriving expected values.

Everything here is exponential-time enumeration over tiny graphs, written
without reusing any package search code, so tests can check the fast
implementations against an independent route.
"""

from __future__ import annotations

from itertools import combinations


def build_adj(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def simple_path_lengths(n: int, edges, s: int, t: int) -> list[int]:
    """Lengths of every simple s-t path, found by exhaustive DFS."""
    if s == t:
        return [0]
    adj = build_adj(n, edges)
    out: list[int] = []
    stack = [(s, {s}, 0)]
    while stack:
        x, visited, length = stack.pop()
        for w in adj[x]:
            if w == t:
                out.append(length + 1)
            elif w not in visited:
                stack.append((w, visited | {w}, length + 1))
    return out


def exhaustive_distance(n: int, edges, s: int, t: int) -> int | None:
    """Hop distance as the minimum over all simple paths; None if none."""
    lengths = simple_path_lengths(n, edges, s, t)
    return min(lengths) if lengths else None


def exhaustive_girth(n: int, edges) -> int | None:
    """Exact girth by enumerating every simple cycle from its least vertex."""
    adj = build_adj(n, edges)
    best: int | None = None

    def extend(start: int, current: int, visited: set[int], length: int) -> None:
        nonlocal best
        if best is not None and length + 1 >= best:
            return
        for w in adj[current]:
            if w == start and length >= 2:
                best = length + 1
            elif w > start and w not in visited:
                extend(start, w, visited | {w}, length + 1)

    for start in range(n):
        extend(start, start, {start}, 0)
    return best


def all_pairs_exhaustive(n: int, edges) -> dict[tuple[int, int], int | None]:
    return {
        (u, v): exhaustive_distance(n, edges, u, v)
        for u, v in combinations(range(n), 2)
    }
