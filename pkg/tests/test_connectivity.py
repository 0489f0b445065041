"""Bridges, edge connectivity levels, and the cut-pair cactus."""

import itertools
import random

import networkx as nx
import pytest

from trailorient import (
    MultiGraph,
    find_bridges,
    is_connected,
    is_strongly_connected,
    is_three_edge_connected,
    is_two_edge_connected,
    three_edge_components,
)
from trailorient.multigraph import EdgeState
from trailorient.oracle import random_connected_multigraph

from conftest import cycle_graph, k4_graph, theta_graph


class TestBridges:
    def test_path_is_all_bridges(self):
        g = MultiGraph(4)
        for i in range(3):
            g.add_edge(i, i + 1)
        assert find_bridges(g) == [0, 1, 2]
        assert not is_two_edge_connected(g)

    def test_cycle_has_none(self):
        assert find_bridges(cycle_graph(5)) == []
        assert is_two_edge_connected(cycle_graph(5))

    def test_parallel_pair_is_not_a_bridge(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        assert find_bridges(g) == []

    def test_loop_is_never_a_bridge(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        g.add_edge(1, 1)
        assert find_bridges(g) == [0]

    def test_skip_reveals_hidden_bridges(self):
        g = cycle_graph(4)
        assert find_bridges(g, skip=0) == [1, 2, 3]
        assert not is_two_edge_connected(g, skip=0)

    def test_barbell(self):
        g = MultiGraph(6)
        for i, j in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]:
            g.add_edge(i, j)
        bar = g.add_edge(2, 3)
        assert find_bridges(g) == [bar]

    def test_disconnected_is_not_2ec(self):
        g = MultiGraph(4)
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        g.add_edge(2, 3)
        g.add_edge(2, 3)
        assert not is_connected(g)
        assert not is_two_edge_connected(g)


class TestStrongConnectivity:
    def test_directed_cycle(self):
        g = MultiGraph(3)
        for i in range(3):
            g.add_edge(i, (i + 1) % 3, EdgeState.FIXED_FORWARD)
        assert is_strongly_connected(g)

    def test_opposed_arc_breaks_it(self):
        g = MultiGraph(3)
        g.add_edge(0, 1, EdgeState.FIXED_FORWARD)
        g.add_edge(1, 2, EdgeState.FIXED_FORWARD)
        g.add_edge(0, 2, EdgeState.FIXED_FORWARD)
        assert not is_strongly_connected(g)

    def test_undirected_edges_count_both_ways(self):
        g = MultiGraph(3)
        g.add_edge(0, 1, EdgeState.FIXED_FORWARD)
        g.add_edge(1, 2, EdgeState.FIXED_FORWARD)
        g.add_edge(0, 2)
        assert is_strongly_connected(g)


def _pair_edge_connectivity(g: MultiGraph, s: int, t: int) -> int:
    """Max number of edge-disjoint s-t paths, via a unit-capacity flow net."""
    d = nx.DiGraph()
    d.add_nodes_from(range(g.n))
    for e in g.live_edges():
        u, v = g.endpoints(e)
        if u == v:
            continue
        for a, b in ((u, v), (v, u)):
            if d.has_edge(a, b):
                d[a][b]["capacity"] += 1
            else:
                d.add_edge(a, b, capacity=1)
    return int(nx.maximum_flow_value(d, s, t))


def _three_ec_partition_oracle(g: MultiGraph) -> set[frozenset[int]]:
    """3ECC vertex classes by pairwise max-flow, the slow way."""
    classes: list[set[int]] = []
    for v in range(g.n):
        placed = False
        for cls in classes:
            u = next(iter(cls))
            if _pair_edge_connectivity(g, u, v) >= 3:
                cls.add(v)
                placed = True
                break
        if not placed:
            classes.append({v})
    return {frozenset(c) for c in classes}


class TestThreeEdgeComponents:
    def test_triangle_cactus_is_one_cycle(self):
        c = three_edge_components(cycle_graph(3))
        assert len(c.node_members) == 3
        assert len(c.cycles) == 1
        assert sorted(c.cycles[0]) == [0, 1, 2]

    def test_k4_is_single_node(self):
        c = three_edge_components(k4_graph())
        assert len(c.node_members) == 1
        assert c.cycles == ()
        assert is_three_edge_connected(k4_graph())

    def test_theta_hubs_merge(self):
        # both hubs have pairwise edge connectivity 3 while every edge sits
        # in a two-edge cut, so naive non-cut flooding would separate them
        g = theta_graph((2, 2, 2))
        c = three_edge_components(g)
        hub_node = c.vertex_to_node[0]
        assert c.vertex_to_node[1] == hub_node
        assert len(c.node_members[hub_node]) == 2

    def test_theta_with_direct_edge(self):
        g = theta_graph((1, 2, 2))
        c = three_edge_components(g)
        assert c.vertex_to_node[0] == c.vertex_to_node[1]

    def test_cactus_shape_invariants(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 9)
            m = rng.randint(n, n + 10)
            g = random_connected_multigraph(n, m, rng)
            if not is_two_edge_connected(g):
                continue
            c = three_edge_components(g)
            k = len(c.node_members)
            # every vertex in exactly one node
            assert sorted(v for mem in c.node_members for v in mem) == list(range(g.n))
            # a cactus on k nodes has at most 2(k-1) edges
            assert len(c.cactus_edges) <= max(0, 2 * (k - 1))
            # each cut edge sits in exactly one cycle
            seen: dict[int, int] = {}
            for cyc in c.cycles:
                for e in cyc:
                    seen[e] = seen.get(e, 0) + 1
            assert sorted(seen) == sorted(ce.edge for ce in c.cactus_edges)
            assert all(x == 1 for x in seen.values())

    def test_partition_matches_max_flow_oracle(self):
        rng = random.Random(9)
        done = 0
        while done < 40:
            n = rng.randint(2, 8)
            m = rng.randint(n, n + 9)
            g = random_connected_multigraph(n, m, rng)
            if not is_two_edge_connected(g):
                continue
            done += 1
            got = {frozenset(mem) for mem in three_edge_components(g).node_members}
            assert got == _three_ec_partition_oracle(g)

    def test_requires_two_edge_connected(self):
        g = MultiGraph(2)
        g.add_edge(0, 1)
        with pytest.raises(ValueError):
            three_edge_components(g)


class TestIsThreeEdgeConnected:
    def test_cycle_is_not(self):
        assert not is_three_edge_connected(cycle_graph(4))

    def test_triple_bond_is(self):
        g = MultiGraph(2)
        for _ in range(3):
            g.add_edge(0, 1)
        assert is_three_edge_connected(g)

    def test_agrees_with_enumeration(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(2, 6)
            m = rng.randint(n, n + 7)
            g = random_connected_multigraph(n, m, rng)
            if not is_two_edge_connected(g):
                continue
            want = all(
                is_connected(_without(g, a), skip=b)
                for a, b in itertools.combinations(list(g.live_edges()), 2)
            )
            assert is_three_edge_connected(g) == want


def _without(g: MultiGraph, eid: int) -> MultiGraph:
    h = g.copy()
    h.delete_edge(eid)
    return h
