"""Mutable multigraph model shared by all orientation algorithms.

Vertices are dense integers ``0..n-1``.  Edges are records with stable
integer ids assigned in insertion order; deleting an edge marks the record
dead and unlinks it from the incidence lists, the id is never reused.
Parallel edges and self-loops are first class citizens throughout.

The model also carries the trail vocabulary: a :class:`Trail` is an edge
sequence together with its vertex walk, a :class:`TrailPartition` covers
every live undirected edge exactly once, and an :class:`Orientation` maps
edge ids to a traversal direction relative to the stored (tail, head) pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Raised when an edge-sequence collection is not a valid trail partition."""


class EdgeState(enum.Enum):
    """Life-cycle state of a single edge."""

    UNDIRECTED = "undirected"
    FIXED_FORWARD = "fixed"            # pre-directed input edge, never flips
    ORIENTED_FORWARD = "oriented+"     # algorithm chose tail -> head
    ORIENTED_REVERSED = "oriented-"    # algorithm chose head -> tail

    @property
    def is_directed(self) -> bool:
        return self is not EdgeState.UNDIRECTED


class Direction(enum.Enum):
    """Traversal direction relative to an edge's stored (tail, head) pair."""

    FORWARD = 1
    REVERSED = -1

    def flipped(self) -> "Direction":
        return Direction.REVERSED if self is Direction.FORWARD else Direction.FORWARD


@dataclass(slots=True)
class EdgeRecord:
    tail: int
    head: int
    state: EdgeState = EdgeState.UNDIRECTED
    alive: bool = True

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def other(self, v: int) -> int:
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise ValueError(f"vertex {v} is not an endpoint of this edge")


class MultiGraph:
    """Undirected or mixed multigraph with stable edge ids.

    Incidence lists hold ``(edge_id, end)`` pairs where ``end`` is 0 at the
    stored tail and 1 at the stored head; a self-loop appears twice in its
    vertex's list.  Deletion unlinks eagerly so ``degree`` stays O(1).
    """

    __slots__ = ("n", "_edges", "_adj", "_live")

    def __init__(self, n: int = 0):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self._edges: list[EdgeRecord] = []
        self._adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self._live = 0

    # -- construction -----------------------------------------------------

    def add_vertex(self) -> int:
        self._adj.append([])
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, state: EdgeState = EdgeState.UNDIRECTED) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) references a missing vertex")
        eid = len(self._edges)
        self._edges.append(EdgeRecord(u, v, state))
        self._adj[u].append((eid, 0))
        self._adj[v].append((eid, 1))
        self._live += 1
        return eid

    def delete_edge(self, eid: int) -> None:
        rec = self._edges[eid]
        if not rec.alive:
            raise ValueError(f"edge {eid} is already deleted")
        rec.alive = False
        self._live -= 1
        self._adj[rec.tail] = [p for p in self._adj[rec.tail] if p[0] != eid]
        if rec.head != rec.tail:
            self._adj[rec.head] = [p for p in self._adj[rec.head] if p[0] != eid]

    def copy(self) -> "MultiGraph":
        g = MultiGraph.__new__(MultiGraph)
        g.n = self.n
        g._edges = [EdgeRecord(r.tail, r.head, r.state, r.alive) for r in self._edges]
        g._adj = [list(a) for a in self._adj]
        g._live = self._live
        return g

    # -- queries ----------------------------------------------------------

    @property
    def num_edges_ever(self) -> int:
        """Total ids handed out, including dead ones."""
        return len(self._edges)

    @property
    def num_live_edges(self) -> int:
        return self._live

    def edge(self, eid: int) -> EdgeRecord:
        return self._edges[eid]

    def endpoints(self, eid: int) -> tuple[int, int]:
        rec = self._edges[eid]
        return rec.tail, rec.head

    def is_alive(self, eid: int) -> bool:
        return self._edges[eid].alive

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def incident(self, v: int) -> Iterator[tuple[int, int]]:
        """Yield ``(edge_id, other_endpoint)``; self-loops yield twice."""
        for eid, end in self._adj[v]:
            rec = self._edges[eid]
            yield eid, (rec.head if end == 0 else rec.tail)

    def incident_slots(self, v: int) -> list[tuple[int, int]]:
        """Raw ``(edge_id, end)`` incidence pairs in insertion order."""
        return list(self._adj[v])

    def live_edges(self) -> Iterator[int]:
        for eid, rec in enumerate(self._edges):
            if rec.alive:
                yield eid

    def undirected_edges(self) -> Iterator[int]:
        for eid, rec in enumerate(self._edges):
            if rec.alive and rec.state is EdgeState.UNDIRECTED:
                yield eid

    def directed_edges(self) -> Iterator[int]:
        for eid, rec in enumerate(self._edges):
            if rec.alive and rec.state.is_directed:
                yield eid

    def is_mixed(self) -> bool:
        return any(True for _ in self.directed_edges())

    def check(self) -> None:
        """Internal consistency audit, raises AssertionError on corruption."""
        live = 0
        for eid, rec in enumerate(self._edges):
            if not rec.alive:
                continue
            live += 1
            assert (eid, 0) in self._adj[rec.tail], f"edge {eid} missing at tail"
            assert (eid, 1) in self._adj[rec.head], f"edge {eid} missing at head"
        assert live == self._live, "live count drifted"
        listed = sum(len(a) for a in self._adj)
        expect = sum(2 for r in self._edges if r.alive)
        assert listed == expect, "incidence lists hold stale entries"

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, live_edges={self._live})"


def contract_vertices(g: MultiGraph, block: Iterable[int]) -> tuple[MultiGraph, list[int]]:
    """Merge ``block`` into one vertex, preserving edge ids.

    Returns ``(h, vmap)`` where ``vmap[v]`` is v's vertex in ``h``.  The
    merged vertex takes the dense slot the smallest block member would have
    had; edges with both endpoints inside the block come back dead (their
    ids still exist, so id-based bookkeeping survives the contraction).
    """
    block = set(block)
    if not block:
        raise ValueError("cannot contract an empty block")
    for v in block:
        if not (0 <= v < g.n):
            raise ValueError(f"block names missing vertex {v}")
    lead = min(block)
    shift = [-1] * g.n
    nxt = 0
    for v in range(g.n):
        if v not in block or v == lead:
            shift[v] = nxt
            nxt += 1
    for v in block:
        shift[v] = shift[lead]
    h = MultiGraph(nxt)
    for eid, rec in enumerate(g._edges):
        u2, v2 = shift[rec.tail], shift[rec.head]
        new_id = h.add_edge(u2, v2, rec.state)
        assert new_id == eid
        if not rec.alive or (rec.tail in block and rec.head in block):
            h.delete_edge(eid)
    return h, shift


class Trail:
    """An edge sequence whose consecutive edges share a vertex, no edge repeated.

    ``walk`` lists the vertices visited: ``walk[i]`` and ``walk[i+1]`` are the
    endpoints of ``edges[i]`` (equal for a self-loop).  The walk pins down the
    traversal even through parallel edges and loops.
    """

    __slots__ = ("edges", "walk")

    def __init__(self, edges: Sequence[int], walk: Sequence[int]):
        if len(walk) != len(edges) + 1:
            raise PartitionError("walk length must be edge count + 1")
        if len(set(edges)) != len(edges):
            raise PartitionError("a trail may not repeat an edge")
        self.edges = tuple(edges)
        self.walk = tuple(walk)

    @classmethod
    def from_edges(cls, g: MultiGraph, edges: Sequence[int]) -> "Trail":
        """Infer the walk.  The traversal is forced once the start vertex is
        chosen, so we try the first edge's tail and then its head."""
        if not edges:
            raise PartitionError("empty trail")
        for eid in edges:
            if not g.is_alive(eid):
                raise PartitionError(f"trail uses dead edge {eid}")
        if len(set(edges)) != len(edges):
            raise PartitionError("a trail may not repeat an edge")
        t0, h0 = g.endpoints(edges[0])
        for start in (t0, h0):
            walk = [start]
            ok = True
            for eid in edges:
                rec = g.edge(eid)
                here = walk[-1]
                if rec.tail == here:
                    walk.append(rec.head)
                elif rec.head == here:
                    walk.append(rec.tail)
                else:
                    ok = False
                    break
            if ok:
                return cls(edges, walk)
        raise PartitionError(f"edge sequence {list(edges)} is not a trail")

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    @property
    def is_closed(self) -> bool:
        return len(self.walk) > 1 and self.walk[0] == self.walk[-1]

    def reversed(self) -> "Trail":
        return Trail(tuple(reversed(self.edges)), tuple(reversed(self.walk)))

    def along_direction(self, i: int, g: MultiGraph) -> Direction:
        """Direction of ``edges[i]`` when the trail is traversed walk-order.

        A self-loop traversal matches either stored direction; FORWARD is
        returned for it by convention.
        """
        eid = self.edges[i]
        tail, head = g.endpoints(eid)
        if tail == head:
            return Direction.FORWARD
        if (self.walk[i], self.walk[i + 1]) == (tail, head):
            return Direction.FORWARD
        return Direction.REVERSED

    def directed(self, g: MultiGraph, d: Direction) -> list[tuple[int, Direction]]:
        """Edge directions realizing this trail traversed in direction ``d``."""
        out = []
        for i, eid in enumerate(self.edges):
            a = self.along_direction(i, g)
            out.append((eid, a if d is Direction.FORWARD else a.flipped()))
        return out

    def __repr__(self) -> str:
        return f"Trail(edges={list(self.edges)}, walk={list(self.walk)})"


class TrailPartition:
    """A set of trails covering each live undirected edge exactly once."""

    __slots__ = ("trails", "_owner")

    def __init__(self, trails: Sequence[Trail]):
        self.trails = tuple(trails)
        self._owner: dict[int, tuple[int, int]] = {}
        for ti, t in enumerate(self.trails):
            for pos, eid in enumerate(t.edges):
                if eid in self._owner:
                    raise PartitionError(f"edge {eid} appears in two trails")
                self._owner[eid] = (ti, pos)

    @classmethod
    def build(cls, g: MultiGraph, seqs: Iterable[Sequence[int]]) -> "TrailPartition":
        return cls([Trail.from_edges(g, s) for s in seqs])

    def __len__(self) -> int:
        return len(self.trails)

    def __iter__(self) -> Iterator[Trail]:
        return iter(self.trails)

    def covers(self, eid: int) -> bool:
        return eid in self._owner

    def trail_of(self, eid: int) -> int:
        return self._owner[eid][0]

    def position_of(self, eid: int) -> int:
        return self._owner[eid][1]

    def is_end_edge(self, eid: int) -> bool:
        ti, pos = self._owner[eid]
        return pos == 0 or pos == len(self.trails[ti]) - 1

    def end_edges(self) -> Iterator[int]:
        for t in self.trails:
            if len(t) == 1:
                yield t.edges[0]
            elif len(t) > 1:
                yield t.edges[0]
                yield t.edges[-1]

    def interior_edges(self) -> Iterator[int]:
        """Edges that are not at either end of their trail."""
        for t in self.trails:
            for eid in t.edges[1:-1]:
                yield eid

    def total_edges(self) -> int:
        return len(self._owner)


def check_trails(g: MultiGraph, p: TrailPartition) -> tuple[bool, str]:
    """Diagnose a partition against a graph; returns (ok, reason)."""
    seen: set[int] = set()
    for ti, t in enumerate(p.trails):
        if len(t) == 0:
            return False, f"trail {ti} is empty"
        for i, eid in enumerate(t.edges):
            if eid < 0 or eid >= g.num_edges_ever:
                return False, f"trail {ti} names unknown edge {eid}"
            rec = g.edge(eid)
            if not rec.alive:
                return False, f"trail {ti} uses deleted edge {eid}"
            if rec.state is not EdgeState.UNDIRECTED:
                return False, f"trail {ti} uses pre-directed edge {eid}"
            if eid in seen:
                return False, f"edge {eid} covered twice"
            seen.add(eid)
            a, b = t.walk[i], t.walk[i + 1]
            if {a, b} != {rec.tail, rec.head} and not (
                rec.tail == rec.head and a == b == rec.tail
            ):
                return False, f"trail {ti} walk disagrees with edge {eid}"
    for eid in g.undirected_edges():
        if eid not in seen:
            return False, f"undirected edge {eid} is uncovered"
    return True, ""


def validate_trails(g: MultiGraph, p: TrailPartition) -> bool:
    ok, _ = check_trails(g, p)
    return ok


def require_valid_trails(g: MultiGraph, p: TrailPartition) -> None:
    ok, why = check_trails(g, p)
    if not ok:
        raise PartitionError(why)


class Orientation:
    """Assignment of a Direction to some set of edge ids."""

    __slots__ = ("_dir",)

    def __init__(self, assignment: dict[int, Direction] | None = None):
        self._dir = dict(assignment) if assignment else {}

    def assign(self, eid: int, d: Direction) -> None:
        self._dir[eid] = d

    def get(self, eid: int) -> Direction:
        return self._dir[eid]

    def __contains__(self, eid: int) -> bool:
        return eid in self._dir

    def __len__(self) -> int:
        return len(self._dir)

    def items(self) -> Iterator[tuple[int, Direction]]:
        return iter(sorted(self._dir.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._dir == other._dir

    def __hash__(self):
        raise TypeError("Orientation is not hashable")

    def copy(self) -> "Orientation":
        return Orientation(self._dir)

    def reversed_all(self) -> "Orientation":
        return Orientation({e: d.flipped() for e, d in self._dir.items()})

    def arc(self, g: MultiGraph, eid: int) -> tuple[int, int]:
        """The (from, to) vertex pair this assignment gives edge ``eid``."""
        tail, head = g.endpoints(eid)
        if self._dir[eid] is Direction.FORWARD:
            return tail, head
        return head, tail

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{e}:{'+' if d is Direction.FORWARD else '-'}" for e, d in self.items()
        )
        return f"Orientation({{{parts}}})"


def reverse_all(o: Orientation) -> Orientation:
    """Pure flip of every assigned direction."""
    return o.reversed_all()


def apply_orientation(g: MultiGraph, o: Orientation) -> MultiGraph:
    """Copy of ``g`` with the assigned undirected edges turned into arcs.

    Every assigned id must name a live undirected edge; partial assignments
    are allowed, unassigned edges stay undirected.
    """
    h = g.copy()
    for eid, d in o.items():
        rec = h.edge(eid)
        if not rec.alive:
            raise ValueError(f"orientation names dead edge {eid}")
        if rec.state is not EdgeState.UNDIRECTED:
            raise ValueError(f"orientation reassigns pre-directed edge {eid}")
        rec.state = (
            EdgeState.ORIENTED_FORWARD
            if d is Direction.FORWARD
            else EdgeState.ORIENTED_REVERSED
        )
    return h


def orient_partition(g: MultiGraph, p: TrailPartition, dirs: Sequence[Direction]) -> Orientation:
    """Total orientation from one Direction per trail."""
    if len(dirs) != len(p.trails):
        raise ValueError("need exactly one direction per trail")
    o = Orientation()
    for t, d in zip(p.trails, dirs):
        for eid, ed in t.directed(g, d):
            o.assign(eid, ed)
    return o


def trail_direction_in(o: Orientation, g: MultiGraph, t: Trail) -> Direction | None:
    """Which way ``t`` is traversed according to ``o``, if determinable.

    Self-loops are direction-agnostic, so a trail whose assigned edges are
    all loops (or which has no assigned edges) reports None.
    """
    for i, eid in enumerate(t.edges):
        if eid not in o:
            continue
        tail, head = g.endpoints(eid)
        if tail == head:
            continue
        along = t.along_direction(i, g)
        return Direction.FORWARD if o.get(eid) is along else Direction.REVERSED
    return None
