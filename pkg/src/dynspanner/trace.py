"""Update traces: the line-based workload format, parsing, and generators.

Format::

    spanner-trace v1
    n 8 m 24 gamma 1
    + 0 1
    - 0 1

One operation per line, ``+ u v`` inserts and ``- u v`` deletes; vertices are
0-indexed; lines starting with ``#`` and blank lines are ignored. A trace is
validated on load: every insert must target an absent edge and every delete a
present one. Exceeding the declared budgets (m inserts, n deletes) is not an
error but marks the trace over-budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .engine import InvalidBudgetError, SpannerState
from .graph import Edge, SelfLoopError

HEADER_MAGIC = "spanner-trace v1"

INSERT = "+"
DELETE = "-"


class TraceError(Exception):
    """Base class for trace parsing and validation failures."""


class MissingHeaderError(TraceError):
    """Input does not start with the trace magic and header line."""


class TraceSyntaxError(TraceError):
    """Malformed header or operation line."""


class TraceValidationError(TraceError):
    """Well-formed line that is inconsistent with the running edge set."""


@dataclass(frozen=True)
class TraceOp:
    kind: str  # INSERT or DELETE
    edge: Edge

    def __post_init__(self) -> None:
        if self.kind not in (INSERT, DELETE):
            raise ValueError(f"bad op kind {self.kind!r}")


@dataclass(frozen=True)
class UpdateTrace:
    n: int
    m: int
    gamma: int
    ops: tuple[TraceOp, ...]
    over_budget: bool = field(default=False)

    @property
    def insert_count(self) -> int:
        return sum(1 for op in self.ops if op.kind == INSERT)

    @property
    def delete_count(self) -> int:
        return sum(1 for op in self.ops if op.kind == DELETE)


def parse_trace(text: str) -> UpdateTrace:
    """Parse and validate a trace; errors carry the offending line number."""
    lines = text.splitlines()
    significant = [
        (i + 1, line.strip())
        for i, line in enumerate(lines)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not significant or significant[0][1] != HEADER_MAGIC:
        raise MissingHeaderError(f"first line must be {HEADER_MAGIC!r}")
    if len(significant) < 2:
        raise MissingHeaderError("missing header parameter line")
    lineno, header = significant[1]
    tokens = header.split()
    if len(tokens) != 6 or tokens[0] != "n" or tokens[2] != "m" or tokens[4] != "gamma":
        raise TraceSyntaxError(f"line {lineno}: expected 'n <int> m <int> gamma <int>'")
    try:
        n, m, gamma = int(tokens[1]), int(tokens[3]), int(tokens[5])
    except ValueError:
        raise TraceSyntaxError(f"line {lineno}: header values must be integers") from None
    if n < 1:
        raise TraceValidationError(f"line {lineno}: vertex count must be >= 1")
    if m < 0 or gamma < 1:
        raise TraceValidationError(f"line {lineno}: need m >= 0 and gamma >= 1")

    ops: list[TraceOp] = []
    present: set[Edge] = set()
    for lineno, line in significant[2:]:
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] not in (INSERT, DELETE):
            raise TraceSyntaxError(f"line {lineno}: expected '+ u v' or '- u v'")
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise TraceSyntaxError(f"line {lineno}: vertices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise TraceValidationError(f"line {lineno}: vertex outside [0, {n})")
        try:
            edge = Edge(u, v)
        except SelfLoopError:
            raise TraceValidationError(f"line {lineno}: self-loop ({u}, {v})") from None
        if tokens[0] == INSERT:
            if edge in present:
                raise TraceValidationError(f"line {lineno}: insert of present edge {edge}")
            present.add(edge)
        else:
            if edge not in present:
                raise TraceValidationError(f"line {lineno}: delete of absent edge {edge}")
            present.remove(edge)
        ops.append(TraceOp(tokens[0], edge))

    trace = UpdateTrace(n=n, m=m, gamma=gamma, ops=tuple(ops))
    inserts = trace.insert_count
    deletes = trace.delete_count
    if inserts > m or deletes > n:
        trace = UpdateTrace(n=n, m=m, gamma=gamma, ops=tuple(ops), over_budget=True)
    return trace


def serialize_trace(trace: UpdateTrace) -> str:
    lines = [HEADER_MAGIC, f"n {trace.n} m {trace.m} gamma {trace.gamma}"]
    lines.extend(f"{op.kind} {op.edge.u} {op.edge.v}" for op in trace.ops)
    return "\n".join(lines) + "\n"


def generate_trace(
    n: int,
    m: int,
    deletions: int,
    pattern: str = "random",
    seed: int = 0,
    gamma: int = 1,
) -> UpdateTrace:
    """Build a valid trace with up to m inserts and exactly the requested
    deletions (fewer inserts only when the graph saturates).

    ``random`` interleaves uniform insertions of absent pairs with uniform
    deletions of present edges. ``adversarial`` co-runs the spanner engine on
    the trace as it is generated and always deletes an edge of the current
    spanner, the worst case for recourse.
    """
    if n < 2 or m < n or not 0 <= deletions <= n:
        raise InvalidBudgetError(
            f"need m >= n >= 2 and 0 <= deletions <= n, got n={n}, m={m}, deletions={deletions}"
        )
    if pattern not in ("random", "adversarial"):
        raise ValueError(f"unknown pattern {pattern!r}")
    rng = random.Random(seed)
    engine = SpannerState(n, m, gamma) if pattern == "adversarial" else None

    ops: list[TraceOp] = []
    present: list[Edge] = []  # indexed for O(1) uniform choice
    position: dict[Edge, int] = {}
    present_set: set[Edge] = set()
    inserts_left = m
    deletes_left = deletions
    max_edges = n * (n - 1) // 2

    def pick_absent() -> Edge | None:
        if len(present_set) >= max_edges:
            return None
        while True:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = Edge(u, v)
            if e not in present_set:
                return e

    def do_insert() -> bool:
        e = pick_absent()
        if e is None:
            return False
        ops.append(TraceOp(INSERT, e))
        position[e] = len(present)
        present.append(e)
        present_set.add(e)
        if engine is not None:
            engine.insert_edge(e)
        return True

    def do_delete() -> None:
        if engine is not None:
            spanner = sorted(engine.h.edges())
            e = spanner[rng.randrange(len(spanner))]
        else:
            e = present[rng.randrange(len(present))]
        ops.append(TraceOp(DELETE, e))
        i = position.pop(e)
        last = present.pop()
        if last != e:
            present[i] = last
            position[last] = i
        present_set.remove(e)
        if engine is not None:
            engine.delete_edge(e)

    while inserts_left or deletes_left:
        total = inserts_left + deletes_left
        want_delete = deletes_left and present and rng.randrange(total) < deletes_left
        if want_delete:
            do_delete()
            deletes_left -= 1
        elif inserts_left:
            if do_insert():
                inserts_left -= 1
            elif deletes_left and present:
                do_delete()
                deletes_left -= 1
            else:
                break  # graph saturated with no deletions left to free pairs
        elif present:
            do_delete()
            deletes_left -= 1
        else:
            break

    return UpdateTrace(n=n, m=m, gamma=gamma, ops=tuple(ops))
