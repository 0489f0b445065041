"""Graph container, trails, and orientation bookkeeping."""

import pytest
from hypothesis import given, strategies as st

from trailorient import (
    Direction,
    EdgeState,
    MultiGraph,
    Orientation,
    PartitionError,
    Trail,
    TrailPartition,
    apply_orientation,
    check_trails,
    validate_trails,
)
from trailorient.multigraph import contract_vertices, trail_direction_in

from conftest import cycle_graph, k4_graph, singleton_trails


class TestMultiGraph:
    def test_add_and_query_edges(self):
        g = MultiGraph(3)
        e0 = g.add_edge(0, 1)
        e1 = g.add_edge(1, 2)
        loop = g.add_edge(2, 2)
        assert (e0, e1, loop) == (0, 1, 2)
        assert g.endpoints(e1) == (1, 2)
        assert g.edge(loop).is_loop
        assert g.degree(2) == 3  # a loop counts twice
        assert sorted(g.live_edges()) == [0, 1, 2]

    def test_delete_edge_keeps_ids_stable(self):
        g = cycle_graph(4)
        g.delete_edge(2)
        assert not g.is_alive(2)
        assert g.num_live_edges == 3
        assert g.num_edges_ever == 4
        # the record stays readable after deletion; only liveness flips
        assert g.endpoints(2) == (2, 3)
        assert sorted(g.live_edges()) == [0, 1, 3]
        with pytest.raises(ValueError):
            g.delete_edge(2)

    def test_copy_is_independent(self):
        g = cycle_graph(3)
        h = g.copy()
        h.delete_edge(0)
        assert g.is_alive(0) and not h.is_alive(0)

    def test_parallel_edges_are_distinct(self):
        g = MultiGraph(2)
        a = g.add_edge(0, 1)
        b = g.add_edge(0, 1)
        assert a != b
        assert g.degree(0) == 2

    def test_mixed_flags(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        assert not g.is_mixed()
        g.add_edge(1, 0, EdgeState.FIXED_FORWARD)
        assert g.is_mixed()
        assert list(g.undirected_edges()) == [0]
        assert list(g.directed_edges()) == [1]

    def test_contract_vertices(self):
        g = cycle_graph(4)
        h, vmap = contract_vertices(g, [0, 2])
        assert h.n == 3
        assert vmap[0] == vmap[2]
        assert h.num_live_edges == 4


class TestTrail:
    def test_from_edges_infers_walk(self):
        g = cycle_graph(4)
        t = Trail.from_edges(g, [0, 1, 2])
        assert list(t.walk) == [0, 1, 2, 3]
        assert not t.is_closed

    def test_from_edges_closed(self):
        g = cycle_graph(3)
        t = Trail.from_edges(g, [0, 1, 2])
        assert t.is_closed

    def test_from_edges_rejects_disconnected_sequence(self):
        g = cycle_graph(4)
        with pytest.raises(PartitionError):
            Trail.from_edges(g, [0, 2])

    def test_reversed_roundtrip(self):
        g = cycle_graph(4)
        t = Trail.from_edges(g, [0, 1])
        r = t.reversed()
        assert list(r.edges) == [1, 0]
        assert list(r.reversed().edges) == list(t.edges)

    def test_along_direction(self):
        g = MultiGraph(3)
        g.add_edge(0, 1)
        g.add_edge(2, 1)  # stored against the walk below
        t = Trail([0, 1], [0, 1, 2])
        assert t.along_direction(0, g) is Direction.FORWARD
        assert t.along_direction(1, g) is Direction.REVERSED

    def test_walk_edge_mismatch_raises(self):
        with pytest.raises(PartitionError):
            Trail([0, 1], [0, 1])


class TestTrailPartition:
    def test_lookup_tables(self):
        g = cycle_graph(4)
        p = TrailPartition.build(g, [[0, 1], [2, 3]])
        assert p.trail_of(1) == 0
        assert p.position_of(3) == 1
        assert p.is_end_edge(0) and p.is_end_edge(3)
        assert sorted(p.end_edges()) == [0, 1, 2, 3]
        assert list(p.interior_edges()) == []

    def test_interior_edges(self):
        g = cycle_graph(5)
        p = TrailPartition.build(g, [[0, 1, 2, 3, 4]])
        assert sorted(p.interior_edges()) == [1, 2, 3]

    def test_duplicate_edge_rejected(self):
        g = cycle_graph(3)
        with pytest.raises(PartitionError):
            TrailPartition.build(g, [[0, 1], [1, 2]])

    def test_check_trails_flags_gaps(self):
        g = cycle_graph(4)
        p = TrailPartition.build(g, [[0, 1]])
        ok, reason = check_trails(g, p)
        assert not ok
        assert "2" in reason  # the uncovered edge is named
        assert not validate_trails(g, p)

    def test_check_trails_ignores_directed_edges(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        g.add_edge(1, 0, EdgeState.FIXED_FORWARD)
        p = TrailPartition.build(g, [[0]])
        ok, _ = check_trails(g, p)
        assert ok


class TestOrientation:
    def test_assign_and_arc(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        o = Orientation({0: Direction.REVERSED})
        assert o.arc(g, 0) == (1, 0)
        assert o.get(0) is Direction.REVERSED
        assert 0 in o and len(o) == 1

    def test_items_sorted(self):
        o = Orientation({2: Direction.FORWARD, 0: Direction.REVERSED})
        assert [e for e, _ in o.items()] == [0, 2]

    def test_reversed_all(self):
        o = Orientation({0: Direction.FORWARD, 1: Direction.REVERSED})
        r = o.reversed_all()
        assert r.get(0) is Direction.REVERSED
        assert r.get(1) is Direction.FORWARD

    def test_apply_orientation_sets_states(self):
        g = cycle_graph(3)
        o = Orientation({e: Direction.FORWARD for e in g.live_edges()})
        h = apply_orientation(g, o)
        assert all(h.edge(e).state.is_directed for e in h.live_edges())
        assert not any(g.edge(e).state.is_directed for e in g.live_edges())

    def test_trail_direction_in_skips_loops(self):
        g = MultiGraph(2)
        g.add_edge(0, 0)
        g.add_edge(0, 1)
        t = Trail([0, 1], [0, 0, 1])
        o = Orientation({0: Direction.FORWARD})
        assert trail_direction_in(o, g, t) is None
        o.assign(1, Direction.FORWARD)
        assert trail_direction_in(o, g, t) is Direction.FORWARD


@given(st.integers(min_value=3, max_value=9))
def test_singleton_partition_covers_cycle(k):
    g = cycle_graph(k)
    p = singleton_trails(g)
    assert validate_trails(g, p)
    assert p.total_edges() == k


@given(st.integers(min_value=3, max_value=8), st.integers(min_value=0, max_value=7))
def test_trail_reversal_keeps_along_consistency(k, start):
    g = k4_graph() if k == 3 else cycle_graph(k)
    edges = sorted(g.live_edges())[: min(3, k)]
    try:
        t = Trail.from_edges(g, edges)
    except PartitionError:
        return
    r = t.reversed()
    for i, eid in enumerate(t.edges):
        j = len(r) - 1 - i
        assert r.edges[j] == eid
        assert r.along_direction(j, g) is t.along_direction(i, g).flipped()
