"""Dynamic spanner maintenance with witness embeddings and congestion caps.

The state tracks three nested graphs on the same vertex set: the full graph
G, the maintained spanner H, and the uncongested subgraph Hhat of H that is
still eligible to carry new witness paths. Every edge of G owns exactly one
embedding path in H certifying a short detour; spanner edges embed to
themselves. A shortest-path oracle runs over Hhat only.

Insertion queries the oracle: if the endpoints are within the hop threshold
L = 2 * gamma * ceil(log2 n), the reported path becomes the new edge's
embedding, and any path edge whose embedding load reaches the congestion cap
tau = ceil(m / n) (m being the declared insertion budget) is retired from
Hhat, never to carry another witness while it stays in H. Otherwise the edge
joins H and Hhat. Deleting a spanner edge re-inserts exactly the edges whose
witness paths ran through it, in ascending canonical order; re-insertions
share the insertion routine and its counter.

All tie-breaking is deterministic, so equal inputs give bit-identical
counters and final edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    DuplicateEdgeError,
    DynamicGraph,
    Edge,
    MissingEdgeError,
    ceil_log2,
)
from .oracle import ApspOracle, BoundedBfsOracle, OracleConfig


class InvalidBudgetError(ValueError):
    """Rejected (n, m) sizing: need n >= 1 and m >= n."""


class OracleContractViolation(RuntimeError):
    """The oracle returned a path that breaks its own contract.

    Signals a broken oracle implementation, not a caller error: the spanner's
    stretch guarantee is only as strong as the witness paths it stores.
    """


@dataclass(frozen=True)
class Embedded:
    """Insert outcome: the edge was witnessed by a short path in H."""

    path: tuple[Edge, ...]


@dataclass(frozen=True)
class AddedToSpanner:
    """Insert outcome: no short witness existed, so the edge joined H."""


InsertOutcome = Embedded | AddedToSpanner


@dataclass(frozen=True)
class DeleteOutcome:
    """Edges re-inserted because their witness paths broke, in order."""

    reinserted: tuple[Edge, ...]


@dataclass(frozen=True)
class RunMetrics:
    """Counters for auditing amortized bounds on a concrete run.

    Counter fields are bit-exact under replay; wall times and oracle cost
    measurements are informational only.
    """

    external_insertions: int
    external_deletions: int
    insert_calls: int
    recourse_additions: int
    recourse_removals: int
    spanner_edges: int
    uncongested_edges: int
    max_econg: int
    budget_exceeded: bool
    wall_time_seconds: float = 0.0
    oracle_update_calls: int = 0
    oracle_query_calls: int = 0
    oracle_update_seconds: float = 0.0
    oracle_query_seconds: float = 0.0

    def counters(self) -> dict[str, int | bool]:
        """The replay-deterministic subset, for equality comparisons."""
        return {
            "external_insertions": self.external_insertions,
            "external_deletions": self.external_deletions,
            "insert_calls": self.insert_calls,
            "recourse_additions": self.recourse_additions,
            "recourse_removals": self.recourse_removals,
            "spanner_edges": self.spanner_edges,
            "uncongested_edges": self.uncongested_edges,
            "max_econg": self.max_econg,
            "budget_exceeded": self.budget_exceeded,
        }


class SpannerState:
    """Single-owner state machine maintaining H and Hhat under edge updates.

    ``n`` is the vertex count, ``m`` the declared insertion budget (m >= n),
    ``gamma`` the oracle's approximation promise. Exceeding the declared
    budgets (m insertions, n deletions) is tolerated but sets
    ``budget_exceeded``; the audited bounds are only claimed within budget.
    """

    def __init__(
        self,
        n: int,
        m: int,
        gamma: int = 1,
        oracle: ApspOracle | None = None,
    ) -> None:
        if n < 1 or m < n:
            raise InvalidBudgetError(f"need n >= 1 and m >= n, got n={n}, m={m}")
        if gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {gamma}")
        self.n = n
        self.m = m
        self.gamma = gamma
        self.threshold = 2 * gamma * ceil_log2(n)  # L
        self.congestion_cap = -(-m // n)  # tau
        self.g = DynamicGraph(n)
        self.h = DynamicGraph(n)
        self.h_uncongested = DynamicGraph(n)
        if oracle is None:
            # cutoff >= 1 is required by the config; with n == 1 the
            # threshold is 0 but no edge can ever exist, so an unbounded
            # oracle is equivalent.
            cutoff = self.threshold if self.threshold >= 1 else None
            oracle = BoundedBfsOracle(OracleConfig(n=n, gamma=gamma, cutoff=cutoff))
        else:
            if oracle.config.n != n:
                raise ValueError("oracle vertex count does not match")
            if oracle.edges():
                raise ValueError("oracle must start empty")
            c = oracle.config.cutoff
            if c is not None and c < self.threshold:
                raise ValueError(f"oracle cutoff {c} below threshold {self.threshold}")
        self.oracle = oracle
        # embedding: every G-edge -> its witness path in H.
        # usage: every H-edge -> the set of G-edges whose path uses it;
        # len(usage[f]) is the congestion counter econg(f).
        self.embedding: dict[Edge, tuple[Edge, ...]] = {}
        self._usage: dict[Edge, set[Edge]] = {}
        self.external_insertions = 0
        self.external_deletions = 0
        self.insert_calls = 0
        self.recourse_additions = 0
        self.recourse_removals = 0
        self.max_econg = 0
        self.budget_exceeded = False

    # -- updates -----------------------------------------------------------

    def insert_edge(self, e: Edge) -> InsertOutcome:
        """Add e to G: embed it over a short witness path or grow H."""
        self.g.check_vertex(e.u)
        self.g.check_vertex(e.v)
        if self.g.has_edge(e):
            raise DuplicateEdgeError(f"edge {e} already present")
        self.external_insertions += 1
        if self.external_insertions > self.m:
            self.budget_exceeded = True
        return self._insert(e)

    def delete_edge(self, e: Edge) -> DeleteOutcome:
        """Remove e from G; if e carried witness paths, re-embed their owners."""
        if not self.g.has_edge(e):
            raise MissingEdgeError(f"edge {e} not present")
        self.external_deletions += 1
        if self.external_deletions > self.n:
            self.budget_exceeded = True
        self.g.remove_edge(e)
        self._clear_embedding(e)
        if not self.h.has_edge(e):
            return DeleteOutcome(())
        self.h.remove_edge(e)
        self.recourse_removals += 1
        if self.h_uncongested.has_edge(e):
            self.h_uncongested.remove_edge(e)
            self.oracle.remove_edge(e)
        # Owners of broken witness paths. e's own entry is already cleared,
        # and spanner edges self-embed, so these are all non-spanner edges.
        broken = sorted(self._usage.pop(e))
        for f in broken:
            self.g.remove_edge(f)  # temporarily out while re-embedding
            self._clear_embedding(f)
        for f in broken:
            self._insert(f)
        return DeleteOutcome(tuple(broken))

    def _insert(self, e: Edge) -> InsertOutcome:
        self.insert_calls += 1
        self.g.add_edge(e)
        d = self.oracle.dist(e.u, e.v)
        if d.within(self.threshold):
            path = tuple(self.oracle.path(e.u, e.v))
            self._validate_witness(e, path)
            self.embedding[e] = path
            cap = self.congestion_cap
            for f in path:
                users = self._usage[f]
                users.add(e)
                econg = len(users)
                if econg > self.max_econg:
                    self.max_econg = econg
                if econg >= cap:
                    # Retire f from the uncongested subgraph; it stays in H
                    # and is never re-admitted while it remains there.
                    self.h_uncongested.remove_edge(f)
                    self.oracle.remove_edge(f)
            return Embedded(path)
        self.h.add_edge(e)
        self.h_uncongested.add_edge(e)
        self.oracle.add_edge(e)
        self.embedding[e] = (e,)
        self._usage[e] = {e}  # self-embedding counts toward congestion
        if self.max_econg < 1:
            self.max_econg = 1
        self.recourse_additions += 1
        return AddedToSpanner()

    def _clear_embedding(self, e: Edge) -> None:
        path = self.embedding.pop(e)
        usage = self._usage
        for f in path:
            users = usage.get(f)
            # The key is gone exactly when f is the spanner edge currently
            # being deleted (its usage entry was popped by the caller).
            if users is not None:
                users.discard(e)

    def _validate_witness(self, e: Edge, path: tuple[Edge, ...]) -> None:
        if not path:
            raise OracleContractViolation(f"empty witness path for {e}")
        if len(path) > self.threshold:
            raise OracleContractViolation(
                f"witness for {e} has {len(path)} hops, threshold is {self.threshold}"
            )
        cur = e.u
        visited = {cur}
        for f in path:
            if not self.h_uncongested.has_edge(f):
                raise OracleContractViolation(f"witness edge {f} not in oracle graph")
            if cur == f.u:
                cur = f.v
            elif cur == f.v:
                cur = f.u
            else:
                raise OracleContractViolation(f"witness for {e} is not a walk at {f}")
            if cur in visited:
                raise OracleContractViolation(f"witness for {e} revisits vertex {cur}")
            visited.add(cur)
        if cur != e.v:
            raise OracleContractViolation(f"witness for {e} ends at {cur}")

    # -- views -------------------------------------------------------------

    def spanner_snapshot(self) -> tuple[frozenset[Edge], frozenset[Edge]]:
        """Copies of the current H and Hhat edge sets."""
        return self.h.edges(), self.h_uncongested.edges()

    @property
    def congestion_limit(self) -> int:
        """Largest load any H-edge can reach: max(cap, 2).

        A fresh spanner edge already carries its own self-embedding, so with
        cap 1 the first witness use lands on 2 before the eviction check
        fires; for any cap >= 2 eviction catches the edge exactly at the cap.
        """
        return max(self.congestion_cap, 2)

    def congestion(self, f: Edge) -> int:
        """Current embedding load on an H-edge (0 for edges outside H)."""
        return len(self._usage.get(f, ()))

    def congestion_snapshot(self) -> dict[Edge, int]:
        """Stored congestion counters for every H-edge."""
        return {f: len(users) for f, users in self._usage.items()}

    def metrics(self) -> RunMetrics:
        return RunMetrics(
            external_insertions=self.external_insertions,
            external_deletions=self.external_deletions,
            insert_calls=self.insert_calls,
            recourse_additions=self.recourse_additions,
            recourse_removals=self.recourse_removals,
            spanner_edges=self.h.edge_count,
            uncongested_edges=self.h_uncongested.edge_count,
            max_econg=self.max_econg,
            budget_exceeded=self.budget_exceeded,
        )
