"""Ground-truth checking and instance generation.

The verifier here is deliberately independent of the solver modules: it
re-derives reachability with its own searches and checks trail consistency
straight from the walks.  Tests compare solver output against it rather
than letting an algorithm grade itself.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .multigraph import (
    Direction,
    EdgeState,
    MultiGraph,
    Orientation,
    PartitionError,
    Trail,
    TrailPartition,
    check_trails,
    orient_partition,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification; falsy iff something failed."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _arc_lists(g: MultiGraph, o: Orientation) -> tuple[list[list[int]], list[list[int]]]:
    """Forward and backward adjacency under ``o`` plus pre-directed edges."""
    fwd: list[list[int]] = [[] for _ in range(g.n)]
    bwd: list[list[int]] = [[] for _ in range(g.n)]
    for eid in g.live_edges():
        rec = g.edge(eid)
        if rec.state is EdgeState.UNDIRECTED:
            d = o.get(eid)
            src, dst = (rec.tail, rec.head) if d is Direction.FORWARD else (rec.head, rec.tail)
        elif rec.state is EdgeState.ORIENTED_REVERSED:
            src, dst = rec.head, rec.tail
        else:
            src, dst = rec.tail, rec.head
        fwd[src].append(dst)
        bwd[dst].append(src)
    return fwd, bwd


def _covers_all(adj: list[list[int]], n: int) -> bool:
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    k = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                k += 1
                stack.append(w)
    return k == n


def verify(g: MultiGraph, p: TrailPartition, o: Orientation) -> Verdict:
    """Full audit of a proposed orientation.

    Checks, in order: the partition matches the graph, the assignment covers
    exactly the undirected live edges, every trail is oriented consistently
    one way or the other, and the resulting digraph is strongly connected.
    """
    ok, why = check_trails(g, p)
    if not ok:
        return Verdict(False, f"bad partition: {why}")

    undirected = set(g.undirected_edges())
    assigned = {eid for eid, _ in o.items()}
    missing = undirected - assigned
    extra = assigned - undirected
    if missing:
        return Verdict(False, f"edges left unoriented: {sorted(missing)[:5]}")
    if extra:
        return Verdict(False, f"orientation names non-orientable edges: {sorted(extra)[:5]}")

    for ti, t in enumerate(p.trails):
        fwd_ok = True
        rev_ok = True
        for i, eid in enumerate(t.edges):
            tail, head = g.endpoints(eid)
            if tail == head:
                continue  # a loop matches either traversal
            along = t.along_direction(i, g)
            if o.get(eid) is not along:
                fwd_ok = False
            if o.get(eid) is not along.flipped():
                rev_ok = False
        if not (fwd_ok or rev_ok):
            return Verdict(False, f"trail {ti} mixes directions")

    fwd, bwd = _arc_lists(g, o)
    if not _covers_all(fwd, g.n):
        return Verdict(False, "not strongly connected (forward reach fails)")
    if not _covers_all(bwd, g.n):
        return Verdict(False, "not strongly connected (backward reach fails)")
    return Verdict(True)


def brute_force_feasible(
    g: MultiGraph, p: TrailPartition, cap: int = 20
) -> Orientation | None:
    """Try every per-trail direction vector; first hit wins.

    Vectors enumerate as ascending binary masks, bit i = trail i, zero
    meaning forward, so results are deterministic.  Raises if the trail
    count exceeds ``cap``.
    """
    k = len(p.trails)
    if k > cap:
        raise ValueError(f"{k} trails exceeds brute-force cap {cap}")
    for mask in range(1 << k):
        dirs = [
            Direction.REVERSED if (mask >> i) & 1 else Direction.FORWARD
            for i in range(k)
        ]
        o = orient_partition(g, p, dirs)
        if verify(g, p, o):
            return o
    return None


# ---------------------------------------------------------------------------
# generators


def fig_gadget() -> tuple[MultiGraph, TrailPartition]:
    """Smallest known mixed instance that is strongly connected with a
    2-edge-connected underlying graph yet admits no trail orientation.

    One two-edge trail whose two edges are forced in conflicting directions
    by the surrounding arcs.
    """
    g = MultiGraph(5)
    g.add_edge(0, 1)                            # trail edge
    g.add_edge(1, 2)                            # trail edge
    g.add_edge(0, 3, EdgeState.FIXED_FORWARD)
    g.add_edge(3, 1, EdgeState.FIXED_FORWARD)
    g.add_edge(2, 4, EdgeState.FIXED_FORWARD)
    g.add_edge(4, 1, EdgeState.FIXED_FORWARD)
    p = TrailPartition.build(g, [[0, 1]])
    return g, p


def path_instance(k: int) -> tuple[MultiGraph, TrailPartition]:
    """A bare path of ``k`` edges as a single trail; never orientable for
    k >= 1 (every edge is a bridge).  Handy as a guaranteed-infeasible case."""
    if k < 1:
        raise ValueError("need at least one edge")
    g = MultiGraph(k + 1)
    for i in range(k):
        g.add_edge(i, i + 1)
    p = TrailPartition.build(g, [list(range(k))])
    return g, p


def cycle_instance(k: int) -> tuple[MultiGraph, TrailPartition]:
    """A k-cycle covered by one closed trail."""
    if k < 1:
        raise ValueError("need at least one edge")
    g = MultiGraph(k)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
    p = TrailPartition.build(g, [list(range(k))])
    return g, p


def random_multigraph(
    n: int,
    m: int,
    rng: random.Random,
    loops: bool = True,
    parallel: bool = True,
) -> MultiGraph:
    g = MultiGraph(n)
    seen: set[tuple[int, int]] = set()
    tries = 0
    while g.num_live_edges < m and tries < 50 * m + 100:
        tries += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and not loops:
            continue
        key = (min(u, v), max(u, v))
        if not parallel and key in seen:
            continue
        seen.add(key)
        g.add_edge(u, v)
    return g


def random_connected_multigraph(
    n: int, m: int, rng: random.Random, loops: bool = True
) -> MultiGraph:
    """Random tree backbone plus m - (n-1) extra edges."""
    if m < n - 1:
        raise ValueError("too few edges to connect")
    g = MultiGraph(n)
    order = list(range(1, n))
    rng.shuffle(order)
    placed = [0]
    for v in order:
        g.add_edge(v, rng.choice(placed))
        placed.append(v)
    while g.num_live_edges < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and not loops:
            continue
        g.add_edge(u, v)
    return g


def random_bridgeless_multigraph(
    n: int, m: int, rng: random.Random, max_tries: int = 2000
) -> MultiGraph:
    """Resample connected multigraphs until one is 2-edge-connected."""
    from .connectivity import is_two_edge_connected

    for _ in range(max_tries):
        g = random_connected_multigraph(n, max(m, n), rng, loops=False)
        if is_two_edge_connected(g):
            return g
    raise RuntimeError("failed to sample a bridgeless graph; raise m or tries")


def random_cubic(n: int, seed: int) -> MultiGraph:
    """Random 2-edge-connected cubic multigraph on ``n`` vertices (n even).

    Configuration model: pair up 3n stubs, resample on self-loops or on a
    bridge.  Deterministic for a given (n, seed): each retry advances an
    internal counter, never the caller's clock.
    """
    if n % 2 != 0 or n < 2:
        raise ValueError("cubic graphs need an even vertex count >= 2")
    attempt = 0
    while True:
        # integer-derived seed: tuple seeding would depend on hash randomization
        rng = random.Random(1_000_003 * seed + attempt)
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        ok = True
        pairs = []
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            pairs.append((u, v))
        attempt += 1
        if not ok:
            continue
        g = MultiGraph(n)
        for u, v in pairs:
            g.add_edge(u, v)
        from .connectivity import is_two_edge_connected

        if is_two_edge_connected(g):
            return g


def random_trail_partition(g: MultiGraph, rng: random.Random) -> TrailPartition:
    """Greedy random maximal trails over the undirected edges.

    Picks a random unused edge, then extends both ends with random unused
    incident edges until stuck.  Maximal but not length-favoring, so plenty
    of short trails show up too.
    """
    unused = set(g.undirected_edges())
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for eid in unused:
        u, v = g.endpoints(eid)
        incident[u].append(eid)
        if v != u:
            incident[v].append(eid)

    def take_at(v: int) -> int | None:
        cands = [e for e in incident[v] if e in unused]
        if not cands:
            return None
        return cands[rng.randrange(len(cands))]

    trails: list[Trail] = []
    order = sorted(unused)
    rng.shuffle(order)
    for e0 in order:
        if e0 not in unused:
            continue
        unused.discard(e0)
        t0, h0 = g.endpoints(e0)
        right_e: list[int] = []
        right_w: list[int] = [h0]
        while True:
            nxt = take_at(right_w[-1])
            if nxt is None:
                break
            unused.discard(nxt)
            right_e.append(nxt)
            right_w.append(g.edge(nxt).other(right_w[-1]))
        left_e: list[int] = []
        left_w: list[int] = [t0]
        while True:
            nxt = take_at(left_w[-1])
            if nxt is None:
                break
            unused.discard(nxt)
            left_e.append(nxt)
            left_w.append(g.edge(nxt).other(left_w[-1]))
        edges = list(reversed(left_e)) + [e0] + right_e
        walk = list(reversed(left_w)) + right_w
        trails.append(Trail(edges, walk))
    return TrailPartition(trails)


def singleton_partition(g: MultiGraph) -> TrailPartition:
    """Every undirected edge its own trail."""
    return TrailPartition.build(g, [[e] for e in g.undirected_edges()])


def random_mixed(
    n: int, m: int, p_directed: float, rng: random.Random
) -> tuple[MultiGraph, TrailPartition]:
    """Random connected mixed multigraph plus a random partition of its
    undirected part.  No feasibility guarantee.  Arc directions come from
    the already-random endpoint order at creation."""
    g = random_connected_multigraph(n, m, rng)
    for eid in list(g.live_edges()):
        if rng.random() < p_directed:
            g.edge(eid).state = EdgeState.FIXED_FORWARD
    return g, random_trail_partition(g, rng)


def exhaustive_multigraphs(
    n: int, m: int, loops: bool = True, connected_only: bool = True
) -> Iterator[MultiGraph]:
    """Every labeled multigraph on exactly ``n`` vertices and ``m`` edges.

    Edges enumerate as non-decreasing (u, v) multisets so each multigraph
    appears once.  Intended for small n and m only; counts explode fast.
    """
    from .connectivity import is_connected

    pairs = [(u, v) for u in range(n) for v in range(u if loops else u + 1, n)]
    for combo in itertools.combinations_with_replacement(pairs, m):
        g = MultiGraph(n)
        for u, v in combo:
            g.add_edge(u, v)
        if connected_only and not is_connected(g):
            continue
        yield g


def trail_partitions(
    g: MultiGraph, cap: int | None = None
) -> Iterator[TrailPartition]:
    """Deterministic, exhaustive enumeration of trail partitions.

    Each partition of the undirected edges into trails appears exactly once
    (trails compared up to reversal).  The recursion anchors the next trail
    at the smallest uncovered edge id; that trail is enumerated through all
    decompositions "left part + anchor + right part", so the anchor may sit
    anywhere inside it.  ``cap`` truncates the stream deterministically.
    """
    emitted = 0

    def extensions(
        tip: int, used: frozenset[int], unused: set[int]
    ) -> Iterator[tuple[list[int], list[int]]]:
        """All edge-walks out of ``tip``, shortest first; includes empty."""
        yield [], [tip]
        cands = sorted(
            eid for eid, _ in g.incident(tip) if eid in unused and eid not in used
        )
        for eid in dict.fromkeys(cands):
            w = g.edge(eid).other(tip)
            for sub_e, sub_w in extensions(w, used | {eid}, unused):
                yield [eid] + sub_e, [tip] + sub_w

    def canon(seq: tuple[int, ...], closed: bool) -> tuple[int, ...]:
        """Dedup key: reversal-invariant, and rotation-invariant when closed
        (a closed trail re-anchored at another edge is still the same trail)."""
        rev = tuple(reversed(seq))
        if not closed:
            return min(seq, rev)
        rots = [seq[i:] + seq[:i] for i in range(len(seq))]
        rots += [rev[i:] + rev[:i] for i in range(len(rev))]
        return min(rots)

    def anchored_trails(anchor: int, unused: set[int]) -> Iterator[Trail]:
        t0, h0 = g.endpoints(anchor)
        dirs = [(t0, h0)] if t0 == h0 else [(t0, h0), (h0, t0)]
        seen: set[tuple[int, ...]] = set()
        for a, b in dirs:
            for right_e, right_w in extensions(b, frozenset({anchor}), unused):
                taken = frozenset({anchor, *right_e})
                for left_e, left_w in extensions(a, taken, unused):
                    seq = tuple(reversed(left_e)) + (anchor,) + tuple(right_e)
                    walk = list(reversed(left_w)) + right_w
                    key = canon(seq, walk[0] == walk[-1])
                    if key in seen:
                        continue
                    seen.add(key)
                    yield Trail(seq, walk)

    def rec(unused: set[int], acc: list[Trail]) -> Iterator[TrailPartition]:
        nonlocal emitted
        if cap is not None and emitted >= cap:
            return
        if not unused:
            emitted += 1
            yield TrailPartition(list(acc))
            return
        anchor = min(unused)
        for t in anchored_trails(anchor, unused - {anchor}):
            if cap is not None and emitted >= cap:
                return
            acc.append(t)
            yield from rec(unused - set(t.edges), acc)
            acc.pop()

    yield from rec(set(g.undirected_edges()), [])


@dataclass
class InstanceSpec:
    """Reproducible recipe for a batch of (graph, partition) instances.

    kind: one of "exhaustive", "random", "random-bridgeless", "random-cubic",
    "random-mixed", "fig-gadget", "path", "cycle".
    """

    kind: str
    n: int = 4
    m: int = 5
    count: int = 1
    seed: int = 0
    p_directed: float = 0.0
    partition_cap: int = 8
    loops: bool = True


def gen_instances(spec: InstanceSpec) -> Iterator[tuple[MultiGraph, TrailPartition]]:
    if spec.kind == "fig-gadget":
        yield fig_gadget()
        return
    if spec.kind == "path":
        yield path_instance(spec.n)
        return
    if spec.kind == "cycle":
        yield cycle_instance(spec.n)
        return
    if spec.kind == "exhaustive":
        for g in exhaustive_multigraphs(spec.n, spec.m, loops=spec.loops):
            for p in trail_partitions(g, cap=spec.partition_cap):
                yield g, p
        return
    rng = random.Random(spec.seed)
    if spec.kind == "random":
        for _ in range(spec.count):
            g = random_connected_multigraph(spec.n, spec.m, rng, loops=spec.loops)
            yield g, random_trail_partition(g, rng)
        return
    if spec.kind == "random-bridgeless":
        for _ in range(spec.count):
            g = random_bridgeless_multigraph(spec.n, spec.m, rng)
            yield g, random_trail_partition(g, rng)
        return
    if spec.kind == "random-cubic":
        for i in range(spec.count):
            g = random_cubic(spec.n, seed=spec.seed + i)
            prng = random.Random(7_777_777 * spec.seed + 13 * i + 5)
            yield g, random_trail_partition(g, prng)
        return
    if spec.kind == "random-mixed":
        for _ in range(spec.count):
            yield random_mixed(spec.n, spec.m, spec.p_directed, rng)
        return
    raise ValueError(f"unknown instance kind {spec.kind!r}")
