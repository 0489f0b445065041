"""Shared builders for the test suite."""

import random

import pytest

from trailorient import (
    MultiGraph,
    Trail,
    TrailPartition,
)
from trailorient.oracle import random_trail_partition


def cycle_graph(k: int) -> MultiGraph:
    g = MultiGraph(k)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
    return g


def theta_graph(path_lengths=(1, 2, 2)) -> MultiGraph:
    """Two hubs joined by one internally disjoint path per entry."""
    g = MultiGraph(2)
    for length in path_lengths:
        prev = 0
        for _ in range(length - 1):
            v = g.add_vertex()
            g.add_edge(prev, v)
            prev = v
        g.add_edge(prev, 1)
    return g


def k4_graph() -> MultiGraph:
    g = MultiGraph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            g.add_edge(u, v)
    return g


def partitioned(g: MultiGraph, seed: int = 0) -> TrailPartition:
    return random_trail_partition(g, random.Random(seed))


def singleton_trails(g: MultiGraph) -> TrailPartition:
    return TrailPartition(
        [Trail.from_edges(g, [e]) for e in g.undirected_edges()]
    )


@pytest.fixture
def k4():
    return k4_graph()


@pytest.fixture
def c4():
    return cycle_graph(4)
