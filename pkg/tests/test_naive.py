"""Recursive splitter for fully undirected instances."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trailorient import MultiGraph, Trail, TrailPartition, orient_trails
from trailorient.connectivity import is_two_edge_connected
from trailorient.multigraph import EdgeState, PartitionError
from trailorient.naive import pick_end_edge, split_on_cut
from trailorient.oracle import (
    brute_force_feasible,
    cycle_instance,
    exhaustive_multigraphs,
    path_instance,
    random_bridgeless_multigraph,
    random_connected_multigraph,
    random_trail_partition,
    trail_partitions,
    verify,
)

from conftest import cycle_graph, k4_graph, singleton_trails


class TestKnownInstances:
    def test_cycle_single_trail(self):
        g, p = cycle_instance(6)
        o = orient_trails(g, p)
        assert o is not None
        assert verify(g, p, o)

    def test_path_returns_none(self):
        g, p = path_instance(4)
        assert orient_trails(g, p) is None

    def test_bridge_returns_none(self):
        g = MultiGraph(6)
        for i, j in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]:
            g.add_edge(i, j)
        g.add_edge(2, 3)
        p = singleton_trails(g)
        assert orient_trails(g, p) is None

    def test_k4_singletons(self):
        g = k4_graph()
        p = singleton_trails(g)
        o = orient_trails(g, p)
        assert o is not None
        assert verify(g, p, o)

    def test_two_vertices_double_edge(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        p = singleton_trails(g)
        o = orient_trails(g, p)
        assert o is not None
        assert verify(g, p, o)

    def test_loop_only_extras(self):
        g = cycle_graph(3)
        loop = g.add_edge(1, 1)
        p = TrailPartition.build(g, [[0, 1, 2], [loop]])
        o = orient_trails(g, p)
        assert o is not None
        assert verify(g, p, o)

    def test_rejects_mixed_input(self):
        g = MultiGraph(3)
        g.add_edge(0, 1)
        g.add_edge(1, 2)
        g.add_edge(2, 0, EdgeState.FIXED_FORWARD)
        p = TrailPartition.build(g, [[0], [1]])
        with pytest.raises(ValueError):
            orient_trails(g, p)

    def test_rejects_bad_partition(self):
        g = cycle_graph(3)
        with pytest.raises(PartitionError):
            orient_trails(g, TrailPartition.build(g, [[0], [1]]))


class TestLoopGlueRegression:
    """A split whose two cut edges share an endpoint makes one glue edge a
    loop; the wholesale flip must then follow the stitched trail, not the
    glue.  This instance used to come back oriented but not strongly
    connected."""

    def _instance(self):
        g = MultiGraph(5)
        for u, v in [
            (0, 1),
            (2, 1),
            (1, 2),
            (2, 3),
            (0, 4),
            (1, 0),
            (1, 4),
            (3, 0),
            (1, 4),
        ]:
            g.add_edge(u, v)
        p = TrailPartition(
            [
                Trail([8, 6, 2, 1, 0, 5], [1, 4, 1, 2, 1, 0, 1]),
                Trail([3, 7, 4], [2, 3, 0, 4]),
            ]
        )
        return g, p

    def test_feasible_and_verified(self):
        g, p = self._instance()
        o = orient_trails(g, p)
        assert o is not None
        v = verify(g, p, o)
        assert v, v.reason


class TestSplitMechanics:
    def test_end_edge_is_lowest_live_trail_end(self):
        g = cycle_graph(4)
        p = TrailPartition.build(g, [[0, 1], [2], [3]])
        # trail [0, 1] has end edges 0 and 1; singletons are their own ends
        assert pick_end_edge(g, p) == 0

    def test_closed_trail_still_peelable(self):
        # a closed trail exposes its boundary edges like any other
        g, p = cycle_instance(4)
        assert pick_end_edge(g, p) == 0

    def test_no_live_ends_after_deletion(self):
        g = cycle_graph(3)
        p = TrailPartition.build(g, [[0], [1], [2]])
        for e in range(3):
            g.delete_edge(e)
        assert pick_end_edge(g, p) is None

    def test_split_sides_partition_vertices(self):
        # two triangles sharing no edge, tied by edges 6 and 7 (a 2-cut)
        g = MultiGraph(6)
        for i, j in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]:
            g.add_edge(i, j)
        g.add_edge(2, 3)
        g.add_edge(5, 0)
        p = singleton_trails(g)
        g1, p1, g2, p2, rec = split_on_cut(g, p, 6)
        assert set(rec.sides[0]) | set(rec.sides[1]) == set(range(6))
        assert not set(rec.sides[0]) & set(rec.sides[1])
        assert set(rec.cut) == {6, 7}
        # each side plus its glue is 2-edge-connected and solvable
        for gi, pi in ((g1, p1), (g2, p2)):
            assert is_two_edge_connected(gi)
            o = brute_force_feasible(gi, pi)
            assert o is not None
            assert verify(gi, pi, o)


class TestEquivalence:
    def test_exhaustive_tiny(self):
        for g in exhaustive_multigraphs(3, 4):
            feasible_graph = is_two_edge_connected(g)
            for p in trail_partitions(g, cap=6):
                o = orient_trails(g, p)
                if feasible_graph:
                    assert o is not None
                    assert verify(g, p, o)
                    assert brute_force_feasible(g, p) is not None
                else:
                    assert o is None
                    assert brute_force_feasible(g, p) is None

    def test_random_battery(self):
        rng = random.Random(271)
        for _ in range(150):
            n = rng.randint(2, 9)
            m = rng.randint(n, n + 8)
            g = random_connected_multigraph(n, m, rng)
            p = random_trail_partition(g, rng)
            o = orient_trails(g, p)
            if is_two_edge_connected(g):
                assert o is not None
                v = verify(g, p, o)
                assert v, v.reason
            else:
                assert o is None

    def test_bridgeless_battery(self):
        rng = random.Random(272)
        for _ in range(120):
            n = rng.randint(3, 10)
            m = rng.randint(n + 2, n + 9)
            g = random_bridgeless_multigraph(n, m, rng)
            p = random_trail_partition(g, rng)
            o = orient_trails(g, p)
            assert o is not None
            v = verify(g, p, o)
            assert v, v.reason

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_never_feasible_without_two_edge_connectivity(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        m = rng.randint(n - 1, n + 6)
        g = random_connected_multigraph(n, m, rng)
        p = random_trail_partition(g, rng)
        o = orient_trails(g, p)
        assert (o is not None) == is_two_edge_connected(g)
        if o is not None:
            assert verify(g, p, o)
