"""Dynamic spanner maintenance with witness embeddings, plus the tooling
around it: exact shortest-path oracles, reference baselines, brute-force
audits, and a trace replay harness."""

from .audit import (
    AuditReport,
    BudgetExceededError,
    CheckResult,
    NotSubgraphError,
    audit_budgets,
    audit_embedding,
    audit_state,
    audit_stretch,
    shortest_cycle,
    spanner_size_limit,
    spanner_size_ok,
)
from .baselines import LowRecourseSpanner, girth_at_least, sparsity_bound, static_greedy
from .engine import (
    AddedToSpanner,
    DeleteOutcome,
    Embedded,
    InsertOutcome,
    InvalidBudgetError,
    OracleContractViolation,
    RunMetrics,
    SpannerState,
)
from .graph import (
    Distance,
    DuplicateEdgeError,
    DynamicGraph,
    Edge,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
    ceil_log2,
)
from .harness import ENGINE, LOW_RECOURSE, RunResult, run_trace
from .oracle import (
    ApspOracle,
    BoundedBfsOracle,
    InstrumentedOracle,
    NaiveApspOracle,
    NoPathWithinCutoffError,
    OracleConfig,
)
from .trace import (
    MissingHeaderError,
    TraceError,
    TraceOp,
    TraceSyntaxError,
    TraceValidationError,
    UpdateTrace,
    generate_trace,
    parse_trace,
    serialize_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AddedToSpanner",
    "ApspOracle",
    "AuditReport",
    "BoundedBfsOracle",
    "BudgetExceededError",
    "CheckResult",
    "DeleteOutcome",
    "Distance",
    "DuplicateEdgeError",
    "DynamicGraph",
    "ENGINE",
    "Edge",
    "Embedded",
    "GraphError",
    "InsertOutcome",
    "InstrumentedOracle",
    "InvalidBudgetError",
    "LOW_RECOURSE",
    "LowRecourseSpanner",
    "MissingEdgeError",
    "MissingHeaderError",
    "NaiveApspOracle",
    "NoPathWithinCutoffError",
    "NotSubgraphError",
    "OracleConfig",
    "OracleContractViolation",
    "RunMetrics",
    "RunResult",
    "SelfLoopError",
    "SpannerState",
    "TraceError",
    "TraceOp",
    "TraceSyntaxError",
    "TraceValidationError",
    "UpdateTrace",
    "VertexOutOfRangeError",
    "audit_budgets",
    "audit_embedding",
    "audit_state",
    "audit_stretch",
    "ceil_log2",
    "generate_trace",
    "girth_at_least",
    "parse_trace",
    "run_trace",
    "serialize_trace",
    "shortest_cycle",
    "spanner_size_limit",
    "spanner_size_ok",
    "sparsity_bound",
    "static_greedy",
]
