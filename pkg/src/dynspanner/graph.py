"""Undirected simple graphs on a fixed vertex set, with exact BFS queries.

Vertices are dense integer ids in [0, n) fixed at construction; there is no
vertex insertion or deletion. Edges are canonical unordered pairs (u < v),
so ``Edge(3, 1) == Edge(1, 3)`` and every map keyed on edges has a single
representation per edge.

Breadth-first searches expand the frontier in ascending vertex order, which
makes both distances and returned paths deterministic functions of the
current edge set. Depth-bounded searches distinguish two negative outcomes:
``unreachable`` (the whole component was swept before hitting the bound) and
``beyond cutoff`` (the frontier was still alive at the bound, so the true
distance exceeds it).

Mutations are single-writer; read-only queries may interleave freely between
mutations and the whole structure can be handed to another thread.
"""

from __future__ import annotations

from bisect import insort
from collections import namedtuple
from dataclasses import dataclass
from typing import ClassVar, Iterable


class GraphError(Exception):
    """Base class for graph construction, mutation, and query errors."""


class SelfLoopError(GraphError):
    """Attempt to build an edge whose endpoints coincide."""


class DuplicateEdgeError(GraphError):
    """Attempt to add an edge that is already present."""


class MissingEdgeError(GraphError):
    """Attempt to remove or use an edge that is not present."""


class VertexOutOfRangeError(GraphError):
    """Vertex id outside [0, n)."""


def ceil_log2(n: int) -> int:
    """Smallest k with 2**k >= n, for n >= 1 (ceil_log2(1) == 0)."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


class Edge(namedtuple("Edge", ("u", "v"))):
    """Unordered vertex pair, stored canonically with u < v."""

    __slots__ = ()

    def __new__(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        return super().__new__(cls, u, v)


@dataclass(frozen=True)
class Distance:
    """Outcome of a hop-distance query.

    One of three shapes: ``Distance.exact(h)`` carries the true hop count,
    ``Distance.UNREACHABLE`` means the searched component does not contain
    the target, and ``Distance.beyond(L)`` means the search stopped at depth
    L with the frontier still alive, so the true distance is > L.
    """

    hops: int | None = None
    cutoff: int | None = None

    UNREACHABLE: ClassVar["Distance"]

    @staticmethod
    def exact(hops: int) -> "Distance":
        if hops < 0:
            raise ValueError(f"negative hop count {hops}")
        return Distance(hops=hops)

    @staticmethod
    def beyond(cutoff: int) -> "Distance":
        if cutoff < 0:
            raise ValueError(f"negative cutoff {cutoff}")
        return Distance(cutoff=cutoff)

    @property
    def is_exact(self) -> bool:
        return self.hops is not None

    @property
    def is_beyond_cutoff(self) -> bool:
        return self.cutoff is not None

    @property
    def is_unreachable(self) -> bool:
        return self.hops is None and self.cutoff is None

    def within(self, bound: int) -> bool:
        """True when this is an exact distance of at most ``bound`` hops."""
        return self.hops is not None and self.hops <= bound

    def __str__(self) -> str:
        if self.hops is not None:
            return str(self.hops)
        if self.cutoff is not None:
            return f">{self.cutoff}"
        return "unreachable"


Distance.UNREACHABLE = Distance()


class DynamicGraph:
    """Mutable simple graph on vertex set {0, ..., n-1}.

    Adjacency lists are kept sorted ascending so searches visit neighbors in
    a fixed order; the edge set doubles as the membership index.
    """

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        self._n = n
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._edges: set[Edge] = set()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "DynamicGraph":
        g = cls(n)
        for e in edges:
            g.add_edge(e)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def has_edge(self, e: Edge) -> bool:
        return e in self._edges

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self._n:
            raise VertexOutOfRangeError(f"vertex {u} outside [0, {self._n})")

    def neighbors(self, u: int) -> list[int]:
        self.check_vertex(u)
        return list(self._adj[u])

    def degree(self, u: int) -> int:
        self.check_vertex(u)
        return len(self._adj[u])

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph.__new__(DynamicGraph)
        g._n = self._n
        g._adj = [list(a) for a in self._adj]
        g._edges = set(self._edges)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DynamicGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DynamicGraph(n={self._n}, edges={len(self._edges)})"

    # -- mutation ----------------------------------------------------------

    def add_edge(self, e: Edge) -> None:
        self.check_vertex(e.u)
        self.check_vertex(e.v)
        if e in self._edges:
            raise DuplicateEdgeError(f"edge {e} already present")
        self._edges.add(e)
        insort(self._adj[e.u], e.v)
        insort(self._adj[e.v], e.u)

    def remove_edge(self, e: Edge) -> None:
        if e not in self._edges:
            raise MissingEdgeError(f"edge {e} not present")
        self._edges.remove(e)
        self._adj[e.u].remove(e.v)
        self._adj[e.v].remove(e.u)

    # -- queries -----------------------------------------------------------

    def bfs_distance(self, u: int, v: int, cutoff: int | None = None) -> Distance:
        """Exact hop distance from u to v, searched to ``cutoff`` depth.

        Returns ``Distance.beyond(cutoff)`` when the frontier is still alive
        at the bound, ``Distance.UNREACHABLE`` when u's component was swept
        without finding v.
        """
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return Distance.exact(0)
        adj = self._adj
        seen = bytearray(self._n)
        seen[u] = 1
        frontier = [u]
        depth = 0
        while frontier:
            if cutoff is not None and depth >= cutoff:
                return Distance.beyond(cutoff)
            depth += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if not seen[w]:
                        if w == v:
                            return Distance.exact(depth)
                        seen[w] = 1
                        nxt.append(w)
            frontier = nxt
        return Distance.UNREACHABLE

    def bfs_path(self, u: int, v: int, cutoff: int | None = None) -> list[Edge] | None:
        """Shortest u-v path as an edge list, or None when none within cutoff.

        Ties are broken by ascending vertex order, so the returned path is a
        deterministic function of the edge set. ``bfs_path(u, u)`` is [].
        """
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return []
        adj = self._adj
        parent = [-1] * self._n
        parent[u] = u
        frontier = [u]
        depth = 0
        found = False
        while frontier and not found:
            if cutoff is not None and depth >= cutoff:
                return None
            depth += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if parent[w] < 0:
                        parent[w] = x
                        if w == v:
                            found = True
                            break
                        nxt.append(w)
                if found:
                    break
            frontier = nxt
        if not found:
            return None
        path: list[Edge] = []
        x = v
        while x != u:
            p = parent[x]
            path.append(Edge(p, x))
            x = p
        path.reverse()
        return path

    def bfs_distances_from(self, u: int, cutoff: int | None = None) -> list[int]:
        """Distances from u to every vertex (-1 for unreached), one BFS sweep."""
        self.check_vertex(u)
        dist = [-1] * self._n
        dist[u] = 0
        adj = self._adj
        frontier = [u]
        depth = 0
        while frontier:
            if cutoff is not None and depth >= cutoff:
                break
            depth += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if dist[w] < 0:
                        dist[w] = depth
                        nxt.append(w)
            frontier = nxt
        return dist
