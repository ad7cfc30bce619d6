from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from dynspanner import (
    Distance,
    DuplicateEdgeError,
    DynamicGraph,
    Edge,
    MissingEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
    ceil_log2,
)

from bruteforce import exhaustive_distance, simple_path_lengths


def path_graph(k: int) -> DynamicGraph:
    g = DynamicGraph(k + 1)
    for i in range(k):
        g.add_edge(Edge(i, i + 1))
    return g


def cycle_graph(k: int) -> DynamicGraph:
    g = path_graph(k - 1)
    g.add_edge(Edge(0, k - 1))
    return g


class TestEdge:
    def test_canonical_form(self):
        assert Edge(3, 1) == Edge(1, 3)
        assert Edge(3, 1).u == 1
        assert hash(Edge(3, 1)) == hash(Edge(1, 3))

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            Edge(2, 2)

    def test_sorts_ascending(self):
        assert sorted([Edge(5, 0), Edge(1, 2), Edge(0, 1)]) == [
            Edge(0, 1),
            Edge(0, 5),
            Edge(1, 2),
        ]


class TestMutation:
    def test_add_to_empty(self):
        g = DynamicGraph(4)
        g.add_edge(Edge(0, 1))
        assert g.edges() == {Edge(0, 1)}
        assert g.neighbors(0) == [1]
        assert g.neighbors(1) == [0]

    def test_add_duplicate_reversed(self):
        g = DynamicGraph(4)
        g.add_edge(Edge(0, 1))
        with pytest.raises(DuplicateEdgeError):
            g.add_edge(Edge(1, 0))

    def test_vertex_out_of_range(self):
        g = DynamicGraph(4)
        with pytest.raises(VertexOutOfRangeError):
            g.add_edge(Edge(0, 4))
        with pytest.raises(VertexOutOfRangeError):
            g.bfs_distance(0, 7)

    def test_remove(self):
        g = DynamicGraph(4)
        g.add_edge(Edge(0, 1))
        g.remove_edge(Edge(0, 1))
        assert g.edges() == frozenset()
        assert g.neighbors(0) == []

    def test_remove_missing(self):
        g = DynamicGraph(4)
        with pytest.raises(MissingEdgeError):
            g.remove_edge(Edge(0, 1))

    def test_remove_reversed_form(self):
        g = DynamicGraph(4)
        g.add_edge(Edge(0, 1))
        g.remove_edge(Edge(1, 0))
        assert g.edges() == frozenset()


class TestBfsDistance:
    def test_path_graph(self):
        g = path_graph(3)
        assert g.bfs_distance(0, 3) == Distance.exact(3)

    def test_identity(self):
        g = path_graph(3)
        assert g.bfs_distance(0, 0) == Distance.exact(0)

    def test_cutoff_exceeded(self):
        # 8-edge path; enumeration confirms the only simple 0-8 path has 8 hops
        g = path_graph(8)
        assert exhaustive_distance(9, g.edges(), 0, 8) == 8
        assert g.bfs_distance(0, 8, cutoff=6) == Distance.beyond(6)
        assert g.bfs_distance(0, 8) == Distance.exact(8)

    def test_unreachable(self):
        g = DynamicGraph(4)
        g.add_edge(Edge(0, 1))
        assert g.bfs_distance(0, 3) == Distance.UNREACHABLE

    def test_unreachable_vs_beyond_cutoff(self):
        # component of 0 is exhausted at depth 1, below the cutoff
        g = DynamicGraph(5)
        g.add_edge(Edge(0, 1))
        g.add_edge(Edge(2, 3))
        assert g.bfs_distance(0, 3, cutoff=4) == Distance.UNREACHABLE
        # with cutoff 1 the frontier is still alive when the bound hits
        assert g.bfs_distance(0, 3, cutoff=1) == Distance.beyond(1)

    def test_exact_at_cutoff_boundary(self):
        g = path_graph(4)
        assert g.bfs_distance(0, 4, cutoff=4) == Distance.exact(4)
        assert g.bfs_distance(0, 4, cutoff=3) == Distance.beyond(3)


class TestBfsPath:
    def test_unique_path(self):
        g = path_graph(2)
        assert g.bfs_path(0, 2) == [Edge(0, 1), Edge(1, 2)]

    def test_identity_empty(self):
        g = path_graph(2)
        assert g.bfs_path(0, 0) == []

    def test_cycle_min_length(self):
        # C4: enumeration says the shortest simple 0-2 path has 2 hops
        g = cycle_graph(4)
        assert min(simple_path_lengths(4, g.edges(), 0, 2)) == 2
        p = g.bfs_path(0, 2)
        assert len(p) == 2
        assert p in ([Edge(0, 1), Edge(1, 2)], [Edge(0, 3), Edge(3, 2)])

    def test_absent_when_unreachable(self):
        g = DynamicGraph(3)
        assert g.bfs_path(0, 2) is None

    def test_absent_when_beyond_cutoff(self):
        g = path_graph(5)
        assert g.bfs_path(0, 5, cutoff=3) is None

    def test_deterministic_tiebreak(self):
        # two shortest routes 0-1-3 and 0-2-3; ascending order picks via 1
        g = DynamicGraph(4)
        for e in [Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3)]:
            g.add_edge(e)
        assert g.bfs_path(0, 3) == [Edge(0, 1), Edge(1, 3)]


def test_ceil_log2():
    assert [ceil_log2(n) for n in [1, 2, 3, 4, 5, 8, 9, 1024]] == [
        0,
        1,
        2,
        2,
        3,
        3,
        4,
        10,
    ]
    with pytest.raises(ValueError):
        ceil_log2(0)


@st.composite
def small_graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=2, max_value=max_n))
    possible = [Edge(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(
        st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))
    )
    return n, edges


@given(small_graphs())
def test_symmetry(case):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    for u in range(n):
        for v in range(u, n):
            assert g.bfs_distance(u, v) == g.bfs_distance(v, u)


@given(small_graphs(max_n=8))
@settings(max_examples=50)
def test_triangle_inequality(case):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    dist = [g.bfs_distances_from(u) for u in range(n)]
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if dist[u][v] >= 0 and dist[v][w] >= 0:
                    assert dist[u][w] >= 0
                    assert dist[u][w] <= dist[u][v] + dist[v][w]


@given(small_graphs(), st.integers(min_value=0, max_value=12))
def test_path_distance_consistency(case, cutoff):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    for u in range(n):
        for v in range(n):
            d = g.bfs_distance(u, v, cutoff)
            p = g.bfs_path(u, v, cutoff)
            if d.is_exact:
                assert p is not None and len(p) == d.hops
            else:
                assert p is None


@given(small_graphs())
def test_cutoff_soundness(case):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    for u in range(n):
        for v in range(n):
            full = g.bfs_distance(u, v)
            for cutoff in (1, 2, 4):
                bounded = g.bfs_distance(u, v, cutoff)
                if bounded.is_exact:
                    assert bounded.hops <= cutoff
                    assert bounded == full
                elif bounded.is_beyond_cutoff:
                    assert full.is_unreachable or full.hops > cutoff
                else:
                    assert full.is_unreachable


@given(small_graphs())
def test_bfs_matches_exhaustive_enumeration(case):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    for v in range(n):
        expected = exhaustive_distance(n, edges, 0, v)
        got = g.bfs_distance(0, v)
        if expected is None:
            assert got.is_unreachable
        else:
            assert got == Distance.exact(expected)


@given(small_graphs())
def test_edit_round_trip(case):
    n, edges = case
    g = DynamicGraph.from_edges(n, edges)
    before = g.edges()
    extra = None
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(Edge(u, v)):
                extra = Edge(u, v)
                break
        if extra:
            break
    if extra is None:
        return  # complete graph, nothing to add
    g.add_edge(extra)
    assert g.edges() == before | {extra}
    g.remove_edge(extra)
    assert g.edges() == before
