"""Edge-dynamic shortest-path oracles with distance and path reporting.

The interface contract: for a query pair at true distance d (within the
configured cutoff, if any), ``dist`` returns an estimate D with
d <= D <= gamma * d, and ``path`` returns a simple path of length at most D
lying entirely in the oracle's current graph.

Two conforming implementations are provided, both exact (gamma = 1):

* :class:`BoundedBfsOracle` answers each query with one depth-bounded BFS
  and keeps no state beyond the graph itself. This is the production choice.
* :class:`NaiveApspOracle` rebuilds full distance tables from scratch on
  every query and reconstructs paths by descending the table instead of
  following a BFS parent tree. It exists purely as a differential baseline;
  disagreement between the two flags a bug in either.

Cost parameters (amortized update/query time) are not enforced here; the
replay harness measures them externally via :class:`InstrumentedOracle`.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .graph import Distance, DynamicGraph, Edge


class NoPathWithinCutoffError(Exception):
    """Path query for a pair with no finite distance estimate."""


@dataclass(frozen=True)
class OracleConfig:
    """Vertex count, promised approximation factor, optional depth bound."""

    n: int
    gamma: int = 1
    cutoff: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if self.cutoff is not None and self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1 when set, got {self.cutoff}")


class ApspOracle(ABC):
    """Approximate all-pairs shortest paths over an internal dynamic graph."""

    @property
    @abstractmethod
    def config(self) -> OracleConfig: ...

    @abstractmethod
    def add_edge(self, e: Edge) -> None: ...

    @abstractmethod
    def remove_edge(self, e: Edge) -> None: ...

    @abstractmethod
    def dist(self, u: int, v: int) -> Distance:
        """Distance estimate; beyond-cutoff and unreachable both mean > cutoff."""

    @abstractmethod
    def path(self, u: int, v: int) -> list[Edge]:
        """Simple u-v path of length <= dist(u, v); requires a finite dist."""

    @abstractmethod
    def edges(self) -> frozenset[Edge]:
        """Snapshot of the oracle's current edge set."""


class _GraphBackedOracle(ApspOracle):
    """Shared mutation plumbing for oracles that own a DynamicGraph."""

    def __init__(self, config: OracleConfig) -> None:
        self._config = config
        self._graph = DynamicGraph(config.n)

    @property
    def config(self) -> OracleConfig:
        return self._config

    def add_edge(self, e: Edge) -> None:
        self._graph.add_edge(e)

    def remove_edge(self, e: Edge) -> None:
        self._graph.remove_edge(e)

    def edges(self) -> frozenset[Edge]:
        return self._graph.edges()


class BoundedBfsOracle(_GraphBackedOracle):
    """Exact oracle: one depth-bounded BFS per query, no caching."""

    def dist(self, u: int, v: int) -> Distance:
        return self._graph.bfs_distance(u, v, self._config.cutoff)

    def path(self, u: int, v: int) -> list[Edge]:
        p = self._graph.bfs_path(u, v, self._config.cutoff)
        if p is None:
            raise NoPathWithinCutoffError(
                f"no path from {u} to {v} within cutoff {self._config.cutoff}"
            )
        return p


class NaiveApspOracle(_GraphBackedOracle):
    """Differential baseline: full distance tables rebuilt on every query.

    Paths are reconstructed by walking from the source toward the target,
    always stepping to the lowest-id neighbor that is one hop closer. That
    route shares no code with BFS parent trees, which is the point.
    """

    def _table(self, u: int) -> list[int]:
        return self._graph.bfs_distances_from(u)

    def dist(self, u: int, v: int) -> Distance:
        self._graph.check_vertex(u)
        self._graph.check_vertex(v)
        if u == v:
            return Distance.exact(0)
        table = self._table(u)
        d = table[v]
        cutoff = self._config.cutoff
        if d >= 0 and (cutoff is None or d <= cutoff):
            return Distance.exact(d)
        if cutoff is None:
            return Distance.UNREACHABLE
        # Mirror bounded-BFS semantics exactly: the frontier dies before the
        # cutoff iff the source's eccentricity is below it.
        if max(table) < cutoff:
            return Distance.UNREACHABLE
        return Distance.beyond(cutoff)

    def path(self, u: int, v: int) -> list[Edge]:
        d = self.dist(u, v)
        if not d.is_exact:
            raise NoPathWithinCutoffError(
                f"no path from {u} to {v} within cutoff {self._config.cutoff}"
            )
        if u == v:
            return []
        to_v = self._table(v)
        path: list[Edge] = []
        x = u
        while x != v:
            want = to_v[x] - 1
            for w in self._graph.neighbors(x):
                if to_v[w] == want:
                    path.append(Edge(x, w))
                    x = w
                    break
            else:  # pragma: no cover - would mean an inconsistent table
                raise AssertionError("distance table has no descent step")
        return path


class InstrumentedOracle(ApspOracle):
    """Delegating wrapper that counts calls and accumulates wall time.

    add/remove are updates, dist/path are queries; ``edges`` is uncounted.
    """

    def __init__(self, inner: ApspOracle) -> None:
        self._inner = inner
        self.update_calls = 0
        self.query_calls = 0
        self.update_seconds = 0.0
        self.query_seconds = 0.0

    @property
    def config(self) -> OracleConfig:
        return self._inner.config

    def add_edge(self, e: Edge) -> None:
        t0 = time.perf_counter()
        try:
            self._inner.add_edge(e)
        finally:
            self.update_calls += 1
            self.update_seconds += time.perf_counter() - t0

    def remove_edge(self, e: Edge) -> None:
        t0 = time.perf_counter()
        try:
            self._inner.remove_edge(e)
        finally:
            self.update_calls += 1
            self.update_seconds += time.perf_counter() - t0

    def dist(self, u: int, v: int) -> Distance:
        t0 = time.perf_counter()
        try:
            return self._inner.dist(u, v)
        finally:
            self.query_calls += 1
            self.query_seconds += time.perf_counter() - t0

    def path(self, u: int, v: int) -> list[Edge]:
        t0 = time.perf_counter()
        try:
            return self._inner.path(u, v)
        finally:
            self.query_calls += 1
            self.query_seconds += time.perf_counter() - t0

    def edges(self) -> frozenset[Edge]:
        return self._inner.edges()
