"""Brute-force audits for spanner states and finished runs.

Every check here recomputes its quantity from scratch (all-pairs BFS, full
congestion recount, per-edge cycle search) and compares against what the
incremental engine maintains. Audits never mutate what they inspect. A
failed check always carries a concrete witness: the offending vertex pair,
edge, or counter.

Checks have three outcomes: PASS, FAIL, and FLAG. FLAG marks a quantity that
exceeded a tight informational bound while staying inside the hard one; it
does not fail the report.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .graph import DynamicGraph, Edge, ceil_log2

if TYPE_CHECKING:  # pragma: no cover
    from .engine import RunMetrics, SpannerState

PASS = "PASS"
FLAG = "FLAG"
FAIL = "FAIL"


class NotSubgraphError(ValueError):
    """Stretch audit called with H not a subgraph of G."""


class BudgetExceededError(ValueError):
    """Budget audit called on a run that overran its declared budgets."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    measured: object = None
    bound: object = None
    witness: object = None

    def __post_init__(self) -> None:
        if self.status not in (PASS, FLAG, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"failed check {self.name!r} must carry a witness")

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def format(self) -> str:
        line = f"{self.name:<22} {self.status}"
        if self.measured is not None:
            line += f"  measured={self.measured}"
        if self.bound is not None:
            line += f"  bound={self.bound}"
        if self.witness is not None:
            line += f"  witness={self.witness}"
        return line


@dataclass
class AuditReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.failed]

    def flags(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FLAG]

    def extend(self, other: "AuditReport") -> None:
        self.checks.extend(other.checks)

    def format(self) -> str:
        return "\n".join(c.format() for c in self.checks)


# -- cycle search ------------------------------------------------------------


def shortest_cycle(g: DynamicGraph) -> int | None:
    """Exact girth, or None for an acyclic graph.

    Per-edge search: drop an edge, find the shortest alternative path between
    its endpoints; the minimum of (1 + path length) over all edges is the
    girth. The running best prunes later searches.
    """
    best: int | None = None
    work = g.copy()
    for e in sorted(g.edges()):
        work.remove_edge(e)
        cutoff = None if best is None else best - 2
        d = work.bfs_distance(e.u, e.v, cutoff)
        work.add_edge(e)
        if d.is_exact and (best is None or d.hops + 1 < best):
            best = d.hops + 1
            if best == 3:
                break
    return best


# -- size bounds -------------------------------------------------------------


def spanner_size_limit(n: int, gamma: int) -> float:
    """Hard ceiling on |E(H)|: 4*gamma*n*ceil(log2 n) + 2*n**(1 + 1/ceil(log2 n))."""
    k = ceil_log2(n)
    if k == 0:
        return 0.0
    return 4 * gamma * n * k + 2 * n ** (1 + 1 / k)


def spanner_size_tight_limit(n: int, gamma: int) -> float:
    """Informational ceiling with exact (non-integer) logs; FLAG when exceeded."""
    import math

    if n < 2:
        return 0.0
    lg = math.log2(n)
    return 4 * gamma * n * lg + 2 * n ** (1 + 1 / lg)


def spanner_size_ok(edges: int, n: int, gamma: int) -> bool:
    """edges <= spanner_size_limit(n, gamma), decided in exact integer arithmetic."""
    k = ceil_log2(n)
    if k == 0:
        return edges == 0
    t = edges - 4 * gamma * n * k
    # t <= 2 * n**((k+1)/k)  <=>  t**k <= 2**k * n**(k+1)
    return t <= 0 or t**k <= 2**k * n ** (k + 1)


# -- individual audits -------------------------------------------------------


def audit_stretch(
    g: DynamicGraph,
    h: DynamicGraph,
    bound: int,
    sources: Sequence[int] | None = None,
) -> AuditReport:
    """Exact all-pairs stretch check: dist_H <= bound * dist_G for every
    connected pair, restricted to the given BFS sources when sampling."""
    if h.n != g.n or not h.edges() <= g.edges():
        raise NotSubgraphError("H is not a subgraph of G")
    worst = 0.0
    witness = None
    scan = range(g.n) if sources is None else sources
    for u in scan:
        dg = g.bfs_distances_from(u)
        dh = h.bfs_distances_from(u)
        for v in range(g.n):
            d = dg[v]
            if d <= 0:
                continue  # v unreachable in G, or v == u
            if dh[v] < 0:
                witness = (u, v)
                worst = float("inf")
                break
            ratio = dh[v] / d
            if ratio > worst:
                worst = ratio
                if ratio > bound:
                    witness = (u, v)
                    break
        if witness is not None:
            break
    status = PASS if witness is None else FAIL
    return AuditReport(
        [CheckResult("stretch", status, measured=worst, bound=bound, witness=witness)]
    )


def audit_embedding(state: "SpannerState") -> AuditReport:
    """Check the embedding table against its definition.

    Every G-edge owns exactly one path; each path is a simple walk in H
    between the owner's endpoints of length <= L (spanner edges embed to
    themselves); congestion counters recomputed from the table match the
    stored ones exactly.
    """
    checks: list[CheckResult] = []
    g_edges = state.g.edges()
    h_edges = state.h.edges()
    owners = frozenset(state.embedding)

    stray = sorted(owners ^ g_edges)
    checks.append(
        CheckResult(
            "embedding-coverage",
            PASS if not stray else FAIL,
            measured=len(owners),
            bound=len(g_edges),
            witness=stray[0] if stray else None,
        )
    )

    bad_path = None
    bad_self = None
    for e in sorted(owners & g_edges):
        path = state.embedding[e]
        if e in h_edges and path != (e,):
            bad_self = e
        if not _valid_witness(e, path, state.h, state.threshold):
            bad_path = e
        if bad_path and bad_self:
            break
    checks.append(
        CheckResult(
            "embedding-paths",
            PASS if bad_path is None else FAIL,
            measured=len(owners),
            bound=state.threshold,
            witness=bad_path,
        )
    )
    checks.append(
        CheckResult(
            "self-embedding",
            PASS if bad_self is None else FAIL,
            measured=len(h_edges),
            witness=bad_self,
        )
    )

    recomputed = Counter(f for path in state.embedding.values() for f in path)
    stored = state.congestion_snapshot()
    mismatch = None
    for f in set(recomputed) | set(stored):
        if recomputed.get(f, 0) != stored.get(f, 0):
            mismatch = (f, stored.get(f, 0), recomputed.get(f, 0))
            break
    checks.append(
        CheckResult(
            "econg-recompute",
            PASS if mismatch is None else FAIL,
            measured=max(recomputed.values(), default=0),
            witness=mismatch,
        )
    )
    return AuditReport(checks)


def audit_budgets(metrics: "RunMetrics", n: int, m: int, gamma: int) -> AuditReport:
    """Check a run's counters against the amortized bounds.

    Only applicable to runs that stayed within their declared budgets
    (at most m insertions and n deletions); raises otherwise.
    """
    if metrics.budget_exceeded:
        raise BudgetExceededError("trace overran its declared budgets")
    checks = [
        CheckResult(
            "insert-call-budget",
            PASS if metrics.insert_calls <= 2 * m else FAIL,
            measured=metrics.insert_calls,
            bound=2 * m,
            witness=None if metrics.insert_calls <= 2 * m else metrics.insert_calls,
        ),
        CheckResult(
            "spanner-size",
            PASS if spanner_size_ok(metrics.spanner_edges, n, gamma) else FAIL,
            measured=metrics.spanner_edges,
            bound=round(spanner_size_limit(n, gamma), 2),
            witness=(
                None
                if spanner_size_ok(metrics.spanner_edges, n, gamma)
                else metrics.spanner_edges
            ),
        ),
        CheckResult(
            "spanner-size-tight",
            PASS if metrics.spanner_edges <= spanner_size_tight_limit(n, gamma) else FLAG,
            measured=metrics.spanner_edges,
            bound=round(spanner_size_tight_limit(n, gamma), 2),
        ),
        CheckResult(
            "recourse-removals",
            PASS if metrics.recourse_removals <= metrics.external_deletions else FAIL,
            measured=metrics.recourse_removals,
            bound=metrics.external_deletions,
            witness=(
                None
                if metrics.recourse_removals <= metrics.external_deletions
                else metrics.recourse_removals
            ),
        ),
    ]
    cap = max(-(-m // n), 2)  # self-embeddings overshoot a cap of 1 by one
    checks.append(
        CheckResult(
            "econg-cap",
            PASS if metrics.max_econg <= cap else FAIL,
            measured=metrics.max_econg,
            bound=cap,
            witness=None if metrics.max_econg <= cap else metrics.max_econg,
        )
    )
    return AuditReport(checks)


# -- composite ---------------------------------------------------------------


def audit_state(
    state: "SpannerState",
    *,
    stretch: bool = True,
    stretch_sources: Sequence[int] | None = None,
    girth: bool = True,
) -> AuditReport:
    """Full invariant sweep over a live engine state.

    Covers the subgraph chain, the embedding table, the congestion cap, the
    oracle's mirror of the uncongested subgraph, optionally the girth of the
    uncongested subgraph and the stretch of H against G, and the run budgets.
    """
    report = AuditReport()
    g_edges = state.g.edges()
    h_edges = state.h.edges()
    hhat_edges = state.h_uncongested.edges()

    chain_bad = sorted(hhat_edges - h_edges) or sorted(h_edges - g_edges)
    report.checks.append(
        CheckResult(
            "subgraph-chain",
            PASS if not chain_bad else FAIL,
            measured=(len(g_edges), len(h_edges), len(hhat_edges)),
            witness=chain_bad[0] if chain_bad else None,
        )
    )

    report.extend(audit_embedding(state))

    cap = state.congestion_limit
    stored = state.congestion_snapshot()
    over = None
    for f in sorted(stored):
        c = stored[f]
        if c > cap or (c >= cap and f in hhat_edges):
            over = (f, c)
            break
    report.checks.append(
        CheckResult(
            "congestion-cap",
            PASS if over is None else FAIL,
            measured=max(stored.values(), default=0),
            bound=cap,
            witness=over,
        )
    )

    mirror_bad = sorted(state.oracle.edges() ^ hhat_edges)
    report.checks.append(
        CheckResult(
            "oracle-mirror",
            PASS if not mirror_bad else FAIL,
            measured=len(hhat_edges),
            witness=mirror_bad[0] if mirror_bad else None,
        )
    )

    if girth:
        need = 2 * ceil_log2(state.n) + 1
        cyc = shortest_cycle(state.h_uncongested)
        report.checks.append(
            CheckResult(
                "uncongested-girth",
                PASS if cyc is None or cyc >= need else FAIL,
                measured="acyclic" if cyc is None else cyc,
                bound=need,
                witness=None if cyc is None or cyc >= need else cyc,
            )
        )

    if stretch:
        report.extend(
            audit_stretch(state.g, state.h, state.threshold, sources=stretch_sources)
        )

    if state.budget_exceeded:
        report.checks.append(
            CheckResult(
                "declared-budgets",
                FAIL,
                measured=(state.external_insertions, state.external_deletions),
                bound=(state.m, state.n),
                witness=(state.external_insertions, state.external_deletions),
            )
        )
    else:
        report.extend(audit_budgets(state.metrics(), state.n, state.m, state.gamma))
    return report


def _valid_witness(e: Edge, path: tuple[Edge, ...], h: DynamicGraph, limit: int) -> bool:
    if not path:
        return False
    if len(path) > limit and path != (e,):
        return False
    cur = e.u
    visited = {cur}
    for f in path:
        if not h.has_edge(f):
            return False
        if cur == f.u:
            cur = f.v
        elif cur == f.v:
            cur = f.u
        else:
            return False
        if cur in visited:
            return False
        visited.add(cur)
    return cur == e.v
