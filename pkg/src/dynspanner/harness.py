"""Trace replay: drive an algorithm over a trace, audit, and collect metrics.

Audit cadence and sampling defaults scale with the instance: full audits
after every update for n <= 64, every 32 updates above that; stretch checks
sweep all BFS sources up to n = 512 and a fixed-seed sample of sources
beyond; the cycle search over the uncongested subgraph runs in every audit
for n <= 64 and only in the final audit for larger instances.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace

from .audit import FAIL, PASS, AuditReport, CheckResult, audit_state, audit_stretch, shortest_cycle
from .baselines import LowRecourseSpanner
from .engine import RunMetrics, SpannerState
from .graph import Edge, ceil_log2
from .oracle import BoundedBfsOracle, InstrumentedOracle, OracleConfig
from .trace import INSERT, UpdateTrace

ENGINE = "engine"
LOW_RECOURSE = "low-recourse"

FULL_AUDIT_MAX_N = 64
FULL_STRETCH_MAX_N = 512
DEFAULT_STRETCH_SAMPLE = 64


@dataclass(frozen=True)
class RunResult:
    metrics: RunMetrics
    audits: tuple[tuple[int, AuditReport], ...]  # (update index, report)
    final_spanner: frozenset[Edge]
    final_uncongested: frozenset[Edge]

    @property
    def ok(self) -> bool:
        return all(r.ok for _, r in self.audits) and not self.metrics.budget_exceeded


def default_audit_every(n: int) -> int:
    return 1 if n <= FULL_AUDIT_MAX_N else 32


def _stretch_sources(n: int, sample: int | None) -> list[int] | None:
    if sample is None:
        if n <= FULL_STRETCH_MAX_N:
            return None  # all sources
        sample = DEFAULT_STRETCH_SAMPLE
    if sample >= n:
        return None
    return sorted(random.Random(n).sample(range(n), sample))


def run_trace(
    trace: UpdateTrace,
    algorithm: str = ENGINE,
    audit_every: int | None = None,
    stretch_sample: int | None = None,
) -> RunResult:
    """Replay a trace, auditing every ``audit_every`` updates and at the end.

    ``audit_every=0`` audits only once, after the final update. Returns the
    collected metrics (counters are replay-deterministic) and every audit
    report; the run is ok when every audit passed and budgets were respected.
    """
    if algorithm == ENGINE:
        return _run_engine(trace, audit_every, stretch_sample)
    if algorithm == LOW_RECOURSE:
        return _run_low_recourse(trace, audit_every, stretch_sample)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _run_engine(
    trace: UpdateTrace,
    audit_every: int | None,
    stretch_sample: int | None,
) -> RunResult:
    if audit_every is None:
        audit_every = default_audit_every(trace.n)
    sources = _stretch_sources(trace.n, stretch_sample)
    girth_every_audit = trace.n <= FULL_AUDIT_MAX_N
    oracle = InstrumentedOracle(
        BoundedBfsOracle(
            OracleConfig(
                n=trace.n,
                gamma=trace.gamma,
                cutoff=max(2 * trace.gamma * ceil_log2(trace.n), 1),
            )
        )
    )
    state = SpannerState(trace.n, trace.m, trace.gamma, oracle=oracle)
    audits: list[tuple[int, AuditReport]] = []
    t0 = time.perf_counter()
    for idx, op in enumerate(trace.ops, 1):
        if op.kind == INSERT:
            state.insert_edge(op.edge)
        else:
            state.delete_edge(op.edge)
        if audit_every and idx % audit_every == 0 and idx != len(trace.ops):
            audits.append(
                (
                    idx,
                    audit_state(
                        state, stretch_sources=sources, girth=girth_every_audit
                    ),
                )
            )
    audits.append(
        (len(trace.ops), audit_state(state, stretch_sources=sources, girth=True))
    )
    wall = time.perf_counter() - t0
    metrics = replace(
        state.metrics(),
        wall_time_seconds=wall,
        oracle_update_calls=oracle.update_calls,
        oracle_query_calls=oracle.query_calls,
        oracle_update_seconds=oracle.update_seconds,
        oracle_query_seconds=oracle.query_seconds,
    )
    h, hhat = state.spanner_snapshot()
    return RunResult(metrics=metrics, audits=tuple(audits), final_spanner=h, final_uncongested=hhat)


def _run_low_recourse(
    trace: UpdateTrace,
    audit_every: int | None,
    stretch_sample: int | None,
) -> RunResult:
    if audit_every is None:
        audit_every = default_audit_every(trace.n)
    sources = _stretch_sources(trace.n, stretch_sample)
    maintainer = LowRecourseSpanner(trace.n)
    audits: list[tuple[int, AuditReport]] = []
    inserts = deletes = 0
    t0 = time.perf_counter()
    for idx, op in enumerate(trace.ops, 1):
        if op.kind == INSERT:
            maintainer.insert(op.edge)
            inserts += 1
        else:
            maintainer.delete(op.edge)
            deletes += 1
        if audit_every and idx % audit_every == 0 and idx != len(trace.ops):
            audits.append((idx, _audit_low_recourse(maintainer, sources, deletes)))
    audits.append((len(trace.ops), _audit_low_recourse(maintainer, sources, deletes)))
    wall = time.perf_counter() - t0
    metrics = RunMetrics(
        external_insertions=inserts,
        external_deletions=deletes,
        insert_calls=maintainer.rule_applications,
        recourse_additions=maintainer.h_additions,
        recourse_removals=maintainer.h_removals,
        spanner_edges=maintainer.h.edge_count,
        uncongested_edges=0,
        max_econg=0,
        budget_exceeded=inserts > trace.m or deletes > trace.n,
        wall_time_seconds=wall,
    )
    return RunResult(
        metrics=metrics,
        audits=tuple(audits),
        final_spanner=maintainer.h.edges(),
        final_uncongested=frozenset(),
    )


def _audit_low_recourse(
    maintainer: LowRecourseSpanner, sources: list[int] | None, deletes: int
) -> AuditReport:
    report = audit_stretch(
        maintainer.g, maintainer.h, maintainer.threshold, sources=sources
    )
    need = maintainer.threshold + 1
    cyc = shortest_cycle(maintainer.h)
    girth_ok = cyc is None or cyc >= need
    report.checks.append(
        CheckResult(
            "spanner-girth",
            PASS if girth_ok else FAIL,
            measured="acyclic" if cyc is None else cyc,
            bound=need,
            witness=None if girth_ok else cyc,
        )
    )
    removals_ok = maintainer.h_removals <= deletes
    report.checks.append(
        CheckResult(
            "removal-recourse",
            PASS if removals_ok else FAIL,
            measured=maintainer.h_removals,
            bound=deletes,
            witness=None if removals_ok else maintainer.h_removals,
        )
    )
    return report
