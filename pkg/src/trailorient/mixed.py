"""Trail orientation when some edges arrive pre-directed.

Necessary conditions: the underlying graph must be 2-edge-connected and the
mixed graph strongly connected (undirected edges count both ways).  Those
are not sufficient once trails tie edges together, so the solver walks a
forced-choice loop: while some undirected edge cannot be dropped without
breaking strong connectivity, its whole trail must be committed now, and
only the committed direction that preserves strong connectivity can survive.
When no edge is forced, any one trail may be oriented freely.  One trail is
settled per round, so the loop runs exactly once per trail.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .connectivity import is_strongly_connected, is_two_edge_connected
from .multigraph import (
    Direction,
    EdgeState,
    MultiGraph,
    Orientation,
    TrailPartition,
    require_valid_trails,
)


class ForcedKind(enum.Enum):
    EITHER = "either"          # both single-edge directions keep the graph strong
    FORWARD_ONLY = "forward"
    REVERSED_ONLY = "reversed"
    NEITHER = "neither"        # no direction works; instance is dead


@dataclass(frozen=True)
class ForcedStatus:
    edge: int
    kind: ForcedKind


def _try_single(g: MultiGraph, eid: int, d: Direction) -> bool:
    rec = g.edge(eid)
    assert rec.state is EdgeState.UNDIRECTED
    rec.state = (
        EdgeState.ORIENTED_FORWARD if d is Direction.FORWARD else EdgeState.ORIENTED_REVERSED
    )
    ok = is_strongly_connected(g)
    rec.state = EdgeState.UNDIRECTED
    return ok


def forced_edges(g: MultiGraph) -> list[ForcedStatus]:
    """Single-edge commitment test for every undirected edge, ascending.

    An edge's kind says which of its two directions, committed alone with
    everything else left as-is, preserve strong connectivity.
    """
    w = g.copy()
    out = []
    for eid in sorted(w.undirected_edges()):
        f = _try_single(w, eid, Direction.FORWARD)
        r = _try_single(w, eid, Direction.REVERSED)
        if f and r:
            kind = ForcedKind.EITHER
        elif f:
            kind = ForcedKind.FORWARD_ONLY
        elif r:
            kind = ForcedKind.REVERSED_ONLY
        else:
            kind = ForcedKind.NEITHER
        out.append(ForcedStatus(eid, kind))
    return out


def check_robust(g: MultiGraph) -> bool:
    """True when no single undirected edge is load-bearing.

    Concretely: the underlying graph is 2-edge-connected, the mixed graph is
    strongly connected, and it stays strongly connected after removing any
    one undirected edge.  On such graphs any one trail may be oriented in
    either direction and a full trail orientation still exists.
    """
    if not is_two_edge_connected(g):
        return False
    if not is_strongly_connected(g):
        return False
    for eid in g.undirected_edges():
        if not is_strongly_connected(g, skip=eid):
            return False
    return True


def _apply_trail(w: MultiGraph, g: MultiGraph, p: TrailPartition, ti: int, d: Direction) -> None:
    for eid, ed in p.trails[ti].directed(g, d):
        w.edge(eid).state = (
            EdgeState.ORIENTED_FORWARD
            if ed is Direction.FORWARD
            else EdgeState.ORIENTED_REVERSED
        )


def _clear_trail(w: MultiGraph, p: TrailPartition, ti: int) -> None:
    for eid in p.trails[ti].edges:
        w.edge(eid).state = EdgeState.UNDIRECTED


def orient_mixed(g: MultiGraph, p: TrailPartition) -> Orientation | None:
    """Orientation of the undirected edges, one direction per trail, keeping
    the mixed graph strongly connected.  None when impossible.

    ``p`` must cover exactly the undirected edges.  Fully directed inputs
    (empty partition) are fine; the answer is then just the strong
    connectivity gate.
    """
    require_valid_trails(g, p)
    if not is_two_edge_connected(g):
        return None
    if not is_strongly_connected(g):
        return None

    w = g.copy()
    remaining = list(range(len(p.trails)))
    while remaining:
        forced: int | None = None
        for eid in w.undirected_edges():
            if not is_strongly_connected(w, skip=eid):
                forced = eid
                break
        if forced is not None:
            ti = p.trail_of(forced)
            assert ti in remaining, "forced edge belongs to an already-settled trail"
            placed = False
            for d in (Direction.FORWARD, Direction.REVERSED):
                _apply_trail(w, g, p, ti, d)
                if is_strongly_connected(w):
                    placed = True
                    break
                _clear_trail(w, p, ti)
            if not placed:
                return None
        else:
            ti = remaining[0]
            _apply_trail(w, g, p, ti, Direction.FORWARD)
        remaining.remove(ti)

    o = Orientation()
    for eid in g.undirected_edges():
        st = w.edge(eid).state
        assert st is not EdgeState.UNDIRECTED
        o.assign(
            eid,
            Direction.FORWARD
            if st is EdgeState.ORIENTED_FORWARD
            else Direction.REVERSED,
        )
    return o
