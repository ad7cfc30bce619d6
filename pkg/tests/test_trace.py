import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynspanner import (
    Edge,
    InvalidBudgetError,
    MissingHeaderError,
    SpannerState,
    TraceOp,
    TraceSyntaxError,
    TraceValidationError,
    UpdateTrace,
    generate_trace,
    parse_trace,
    serialize_trace,
)
from dynspanner.trace import DELETE, INSERT


SAMPLE = "spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 1\n- 0 1\n"


class TestParse:
    def test_sample(self):
        trace = parse_trace(SAMPLE)
        assert (trace.n, trace.m, trace.gamma) == (4, 8, 1)
        assert trace.ops == (
            TraceOp(INSERT, Edge(0, 1)),
            TraceOp(DELETE, Edge(0, 1)),
        )
        assert trace.insert_count == 1 and trace.delete_count == 1
        assert not trace.over_budget

    def test_comments_and_blanks_ignored(self):
        text = "# generated\nspanner-trace v1\n\nn 4 m 8 gamma 1\n# ops\n+ 2 3\n"
        assert parse_trace(text).ops == (TraceOp(INSERT, Edge(2, 3)),)

    def test_missing_magic(self):
        with pytest.raises(MissingHeaderError):
            parse_trace("n 4 m 8 gamma 1\n+ 0 1\n")

    def test_missing_params(self):
        with pytest.raises(MissingHeaderError):
            parse_trace("spanner-trace v1\n")

    def test_bad_header_tokens(self):
        with pytest.raises(TraceSyntaxError, match="line 2"):
            parse_trace("spanner-trace v1\nn 4 m 8\n")

    def test_bad_op_line_number(self):
        with pytest.raises(TraceSyntaxError, match="line 4"):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 1\n* 1 2\n")

    def test_self_loop_rejected(self):
        with pytest.raises(TraceValidationError, match="self-loop"):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 0\n")

    def test_delete_of_absent_edge(self):
        with pytest.raises(TraceValidationError, match="absent"):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n- 0 1\n")

    def test_insert_of_present_edge(self):
        with pytest.raises(TraceValidationError, match="present"):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 1\n+ 1 0\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(TraceValidationError, match="outside"):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 4\n")

    def test_reinsert_after_delete_allowed(self):
        trace = parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ 0 1\n- 0 1\n+ 0 1\n")
        assert trace.insert_count == 2

    def test_over_budget_flag(self):
        text = "spanner-trace v1\nn 4 m 1 gamma 1\n+ 0 1\n+ 1 2\n"
        trace = parse_trace(text)
        assert trace.over_budget

    def test_bad_numbers(self):
        with pytest.raises(TraceSyntaxError):
            parse_trace("spanner-trace v1\nn x m 8 gamma 1\n")
        with pytest.raises(TraceSyntaxError):
            parse_trace("spanner-trace v1\nn 4 m 8 gamma 1\n+ a b\n")


class TestSerialize:
    def test_sample_round_trip(self):
        trace = parse_trace(SAMPLE)
        assert serialize_trace(trace) == SAMPLE

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_generated_round_trip(self, seed):
        trace = generate_trace(n=8, m=16, deletions=4, seed=seed)
        assert parse_trace(serialize_trace(trace)) == trace


class TestGenerate:
    def test_counts(self):
        trace = generate_trace(n=8, m=24, deletions=8, pattern="random", seed=1)
        assert trace.insert_count == 24
        assert trace.delete_count == 8
        parse_trace(serialize_trace(trace))  # loadable without errors

    def test_budget_validation(self):
        with pytest.raises(InvalidBudgetError):
            generate_trace(n=8, m=24, deletions=9)
        with pytest.raises(InvalidBudgetError):
            generate_trace(n=8, m=4, deletions=0)
        with pytest.raises(InvalidBudgetError):
            generate_trace(n=1, m=4, deletions=0)
        with pytest.raises(ValueError):
            generate_trace(n=8, m=24, deletions=0, pattern="weird")

    def test_deterministic_per_seed(self):
        a = generate_trace(n=16, m=32, deletions=8, seed=9)
        b = generate_trace(n=16, m=32, deletions=8, seed=9)
        c = generate_trace(n=16, m=32, deletions=8, seed=10)
        assert a == b
        assert a != c

    def test_saturation_emits_fewer_inserts(self):
        # n=4 has only 6 pairs; with no deletions the trace saturates early
        trace = generate_trace(n=4, m=10, deletions=0, seed=0)
        assert trace.insert_count == 6
        assert not trace.over_budget

    @pytest.mark.parametrize("seed", range(5))
    def test_adversarial_targets_spanner_edges(self, seed):
        trace = generate_trace(n=16, m=48, deletions=12, pattern="adversarial", seed=seed)
        state = SpannerState(trace.n, trace.m, trace.gamma)
        for op in trace.ops:
            if op.kind == INSERT:
                state.insert_edge(op.edge)
            else:
                assert state.h.has_edge(op.edge), "delete must hit the live spanner"
                state.delete_edge(op.edge)

    def test_adversarial_counts(self):
        trace = generate_trace(n=8, m=24, deletions=8, pattern="adversarial", seed=3)
        assert trace.insert_count == 24
        assert trace.delete_count == 8


def test_update_trace_validation():
    with pytest.raises(ValueError):
        TraceOp("x", Edge(0, 1))
    t = UpdateTrace(n=4, m=8, gamma=1, ops=())
    assert t.insert_count == t.delete_count == 0
