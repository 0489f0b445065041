"""Reference checkers and instance generators."""

import random

import pytest

from trailorient import Direction, MultiGraph, Orientation, TrailPartition
from trailorient.connectivity import (
    is_connected,
    is_strongly_connected,
    is_two_edge_connected,
)
from trailorient.multigraph import check_trails
from trailorient.oracle import (
    InstanceSpec,
    brute_force_feasible,
    cycle_instance,
    exhaustive_multigraphs,
    fig_gadget,
    gen_instances,
    path_instance,
    random_bridgeless_multigraph,
    random_connected_multigraph,
    random_cubic,
    random_mixed,
    random_trail_partition,
    singleton_partition,
    trail_partitions,
    verify,
)

from conftest import cycle_graph, singleton_trails


class TestVerify:
    def test_oriented_cycle_passes(self):
        g, p = cycle_instance(4)
        o = Orientation()
        for e in range(4):
            o.assign(e, Direction.FORWARD)
        v = verify(g, p, o)
        assert v
        assert v.reason == ""

    def test_flipped_edge_breaks_strong_connectivity(self):
        g = cycle_graph(4)
        p = singleton_trails(g)
        o = Orientation()
        for e in range(4):
            o.assign(e, Direction.FORWARD)
        o.assign(2, Direction.REVERSED)
        v = verify(g, p, o)
        assert not v
        assert "strongly connected" in v.reason

    def test_mixed_trail_direction_rejected(self):
        g, p = cycle_instance(4)
        o = Orientation()
        for e in range(4):
            o.assign(e, Direction.FORWARD)
        o.assign(2, Direction.REVERSED)
        v = verify(g, p, o)
        assert not v
        assert "mixes directions" in v.reason

    def test_unassigned_edge_rejected(self):
        g, p = cycle_instance(3)
        o = Orientation()
        o.assign(0, Direction.FORWARD)
        o.assign(1, Direction.FORWARD)
        v = verify(g, p, o)
        assert not v
        assert "unoriented" in v.reason

    def test_stray_assignment_rejected(self):
        g, p = cycle_instance(3)
        o = Orientation()
        for e in range(3):
            o.assign(e, Direction.FORWARD)
        o.assign(77, Direction.FORWARD)
        assert not verify(g, p, o)


class TestBruteForce:
    def test_cycle_first_hit_is_all_forward(self):
        g, p = cycle_instance(5)
        o = brute_force_feasible(g, p)
        assert o is not None
        assert all(d is Direction.FORWARD for _, d in o.items())

    def test_path_is_infeasible(self):
        g, p = path_instance(3)
        assert brute_force_feasible(g, p) is None

    def test_cap_enforced(self):
        g = cycle_graph(6)
        p = singleton_trails(g)
        with pytest.raises(ValueError):
            brute_force_feasible(g, p, cap=3)

    def test_two_parallel_edges(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        p = singleton_trails(g)
        o = brute_force_feasible(g, p)
        assert o is not None
        assert verify(g, p, o)


class TestFigGadget:
    def test_shape(self):
        g, p = fig_gadget()
        assert is_strongly_connected(g)
        assert is_two_edge_connected(g)
        assert len(p.trails) == 1

    def test_infeasible_by_brute_force(self):
        g, p = fig_gadget()
        assert brute_force_feasible(g, p) is None


class TestGenerators:
    def test_connected_generator_certified(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(2, 8)
            m = rng.randint(n - 1, n + 6)
            g = random_connected_multigraph(n, m, rng)
            assert g.n == n
            assert g.num_live_edges == m
            assert is_connected(g)

    def test_bridgeless_generator_certified(self):
        rng = random.Random(12)
        for _ in range(30):
            n = rng.randint(2, 8)
            m = rng.randint(n + 2, n + 8)
            g = random_bridgeless_multigraph(n, m, rng)
            assert is_two_edge_connected(g)

    def test_cubic_generator(self):
        for seed in range(5):
            g = random_cubic(10, seed=seed)
            assert all(g.degree(v) == 3 for v in range(g.n))
            assert is_two_edge_connected(g)

    def test_cubic_deterministic(self):
        a = random_cubic(12, seed=4)
        b = random_cubic(12, seed=4)
        assert [a.endpoints(e) for e in a.live_edges()] == [
            b.endpoints(e) for e in b.live_edges()
        ]

    def test_cubic_rejects_odd(self):
        with pytest.raises(ValueError):
            random_cubic(7, seed=0)

    def test_random_partition_covers(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(2, 8)
            m = rng.randint(n, n + 7)
            g = random_connected_multigraph(n, m, rng)
            p = random_trail_partition(g, rng)
            ok, why = check_trails(g, p)
            assert ok, why

    def test_singleton_partition(self):
        g = cycle_graph(5)
        p = singleton_partition(g)
        assert len(p.trails) == 5
        assert check_trails(g, p)[0]

    def test_random_mixed_partition_skips_arcs(self):
        rng = random.Random(14)
        g, p = random_mixed(6, 9, 0.5, rng)
        covered = {e for t in p.trails for e in t.edges}
        assert covered == set(g.undirected_edges())
        assert check_trails(g, p)[0]


class TestExhaustive:
    def test_counts_two_vertices_two_edges(self):
        assert sum(1 for _ in exhaustive_multigraphs(2, 2)) == 3
        assert sum(1 for _ in exhaustive_multigraphs(2, 2, connected_only=False)) == 6
        assert sum(1 for _ in exhaustive_multigraphs(2, 2, loops=False)) == 1

    def test_all_distinct(self):
        seen = set()
        for g in exhaustive_multigraphs(3, 3, connected_only=False):
            key = tuple(sorted(tuple(sorted(g.endpoints(e))) for e in g.live_edges()))
            assert key not in seen
            seen.add(key)


class TestTrailPartitionEnumeration:
    def test_triangle_count(self):
        assert sum(1 for _ in trail_partitions(cycle_graph(3))) == 5

    def test_square_count(self):
        assert sum(1 for _ in trail_partitions(cycle_graph(4))) == 12

    def test_all_valid_and_distinct(self):
        g = MultiGraph(3)
        g.add_edge(0, 1)
        g.add_edge(1, 2)
        g.add_edge(2, 0)
        g.add_edge(0, 1)
        g.add_edge(1, 1)
        seen = set()
        for p in trail_partitions(g):
            ok, why = check_trails(g, p)
            assert ok, why
            key = frozenset(
                min(tuple(t.edges), tuple(reversed(t.edges))) for t in p.trails
            )
            assert key not in seen
            seen.add(key)
        assert len(seen) > 10

    def test_deterministic_and_capped(self):
        g = cycle_graph(4)
        full = [
            [tuple(t.edges) for t in p.trails] for p in trail_partitions(g)
        ]
        again = [
            [tuple(t.edges) for t in p.trails] for p in trail_partitions(g)
        ]
        head = [
            [tuple(t.edges) for t in p.trails] for p in trail_partitions(g, cap=5)
        ]
        assert full == again
        assert head == full[:5]


class TestGenInstances:
    def test_named_kinds(self):
        for kind in ("fig-gadget", "path", "cycle"):
            out = list(gen_instances(InstanceSpec(kind=kind, n=4)))
            assert len(out) == 1
            g, p = out[0]
            assert check_trails(g, p)[0]

    def test_random_batch_reproducible(self):
        spec = InstanceSpec(kind="random", n=5, m=7, count=4, seed=9)
        a = list(gen_instances(spec))
        b = list(gen_instances(spec))
        assert len(a) == 4
        for (ga, pa), (gb, pb) in zip(a, b):
            assert [ga.endpoints(e) for e in ga.live_edges()] == [
                gb.endpoints(e) for e in gb.live_edges()
            ]
            assert [tuple(t.edges) for t in pa.trails] == [
                tuple(t.edges) for t in pb.trails
            ]

    def test_exhaustive_kind_caps_partitions(self):
        spec = InstanceSpec(kind="exhaustive", n=3, m=3, partition_cap=2)
        out = list(gen_instances(spec))
        assert out
        for g, p in out:
            assert check_trails(g, p)[0]
