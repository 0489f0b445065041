"""Recursive strong trail orientation of undirected multigraphs.

The driver repeatedly takes the lowest-id edge ``e`` that ends some trail.
If the graph stays 2-edge-connected without ``e``, recurse on the rest and
give ``e`` the direction its trail already has.  Otherwise ``e`` shares a
two-edge cut with some bridge ``b`` of the remainder; the graph splits into
the two cut sides, each side gets a glue edge standing in for the far side,
the halves are solved independently, and a half is flipped wholesale if its
stitched trail came out the wrong way.  Quadratic-ish; the linear pipeline
exists for big inputs, this one is the readable reference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import find_bridges, is_two_edge_connected
from .multigraph import (
    Direction,
    MultiGraph,
    Orientation,
    PartitionError,
    Trail,
    TrailPartition,
    require_valid_trails,
    trail_direction_in,
)


def pick_end_edge(g: MultiGraph, p: TrailPartition) -> int | None:
    """Lowest live edge id sitting at either end of its trail."""
    best = None
    for eid in p.end_edges():
        if g.is_alive(eid) and (best is None or eid < best):
            best = eid
    return best


@dataclass
class SplitRecord:
    """Bookkeeping for one two-cut split.

    ``cut`` is (e, b) in original ids.  Side 0 contains e's tail.  The glue
    edge of side i is that side's highest edge id and is stored with tail
    u_i (e's endpoint in the side) and head w_i (b's endpoint); a combined
    solution must send the side-0 glue u->w and the side-1 glue w->u.  The
    stitched trail of side i walks its glue from u_i to w_i, so the driver
    enforces this by requiring trail direction FORWARD on side 0 and
    REVERSED on side 1.  Checking the stitched trail rather than the glue
    edge alone matters when e and b share an endpoint: the glue is then a
    loop on one side, and a loop's direction constrains nothing.

    ``edge_maps[i]`` maps each side-i edge id to its original id, with None
    for the glue.  ``merged[i]`` is the index of side i's stitched trail.
    ``trail_surgery`` maps each original trail index either to
    ("moved", side, new_index) or to ("merged", side0_index, side1_index)
    for the one or two trails that carried the cut edges.
    """

    cut: tuple[int, int]
    sides: tuple[frozenset[int], frozenset[int]]
    vertex_maps: tuple[dict[int, int], dict[int, int]]
    edge_maps: tuple[list[int | None], list[int | None]]
    glue: tuple[int, int]
    merged: tuple[int, int]
    trail_surgery: dict[int, tuple]


@dataclass
class _Piece:
    """A contiguous fragment of a trail: edges plus matching walk."""

    edges: list[int]
    walk: list[int]

    def reversed(self) -> "_Piece":
        return _Piece(list(reversed(self.edges)), list(reversed(self.walk)))

    @property
    def empty(self) -> bool:
        return not self.edges


def _piece_concat(parts: list["_Piece"]) -> "_Piece":
    """Join fragments whose walks meet end-to-start."""
    parts = [p for p in parts if not p.empty]
    assert parts, "merged trail cannot be empty"
    edges = list(parts[0].edges)
    walk = list(parts[0].walk)
    for p in parts[1:]:
        assert walk[-1] == p.walk[0], "fragment walks do not meet"
        edges.extend(p.edges)
        walk.extend(p.walk[1:])
    return _Piece(edges, walk)


def split_on_cut(
    g: MultiGraph, p: TrailPartition, e: int
) -> tuple[MultiGraph, TrailPartition, MultiGraph, TrailPartition, SplitRecord]:
    """Split along the two-cut {e, b} where b is the lowest bridge of g - e.

    Requires: g 2-edge-connected, e a trail-end edge, and g - e not
    2-edge-connected.  Each side receives the induced subgraph plus one glue
    edge; the trails carrying e and b lose them and their remnants fuse with
    the glue into one new trail per side (possibly just the glue itself).
    """
    rec_e = g.edge(e)
    assert not rec_e.is_loop, "a loop can never force a split"
    bridges = find_bridges(g, skip=e)
    if not bridges:
        raise ValueError("graph minus e is still 2-edge-connected; no cut to split on")
    b = bridges[0]

    # cut sides: reachability without e and b
    side0: set[int] = set()
    stack = [rec_e.tail]
    while stack:
        v = stack.pop()
        if v in side0:
            continue
        side0.add(v)
        for eid, w in g.incident(v):
            if eid != e and eid != b and w not in side0:
                stack.append(w)
    side1 = set(range(g.n)) - side0
    rec_b = g.edge(b)
    assert rec_e.head in side1, "e does not cross the cut"
    assert (rec_b.tail in side0) != (rec_b.head in side0), "b does not cross the cut"

    u = (rec_e.tail, rec_e.head)  # u[i] = e's endpoint in side i
    w = (
        (rec_b.tail, rec_b.head)
        if rec_b.tail in side0
        else (rec_b.head, rec_b.tail)
    )

    # subgraphs: induced edges ascending, then the glue edge last
    sides = (sorted(side0), sorted(side1))
    vmaps: list[dict[int, int]] = []
    graphs: list[MultiGraph] = []
    emaps: list[list[int | None]] = []
    rev_emaps: list[dict[int, int]] = []
    glue_ids: list[int] = []
    for i in (0, 1):
        vm = {v: k for k, v in enumerate(sides[i])}
        h = MultiGraph(len(sides[i]))
        em: list[int | None] = []
        rev: dict[int, int] = {}
        for eid in g.live_edges():
            if eid in (e, b):
                continue
            t0, h0 = g.endpoints(eid)
            if t0 in vm and h0 in vm:
                sub = h.add_edge(vm[t0], vm[h0])
                em.append(eid)
                rev[eid] = sub
        glue = h.add_edge(vm[u[i]], vm[w[i]])
        em.append(None)
        glue_ids.append(glue)
        vmaps.append(vm)
        graphs.append(h)
        emaps.append(em)
        rev_emaps.append(rev)

    # trail surgery
    te_idx = p.trail_of(e)
    tb_idx = p.trail_of(b)
    t_e = p.trails[te_idx]
    if t_e.edges[-1] == e:
        t_e = t_e.reversed()
    assert t_e.edges[0] == e, "e must end its trail"
    rest_e = _Piece(list(t_e.edges[1:]), list(t_e.walk[1:]))  # attaches to e at walk[1]
    att_e = t_e.walk[1]

    side_of = lambda v: 0 if v in side0 else 1

    # pieces of b's trail on each side, positioned to start at w[i]
    b_piece: list[_Piece] = [_Piece([], []), _Piece([], [])]
    if tb_idx == te_idx:
        j = rest_e.edges.index(b)
        piece_a = _Piece(rest_e.edges[:j], rest_e.walk[: j + 1])
        piece_b = _Piece(rest_e.edges[j + 1 :], rest_e.walk[j + 1 :])
        x = rest_e.walk[j]      # b's endpoint on piece_a's side
        y = rest_e.walk[j + 1]  # b's endpoint on piece_b's side
        assert side_of(x) != side_of(y)
        e_piece: list[_Piece] = [_Piece([], []), _Piece([], [])]
        e_piece[side_of(att_e)] = piece_a.reversed() if not piece_a.empty else _Piece([], [])
        if piece_a.empty:
            # b directly follows e; nothing between them
            assert x == att_e
        b_piece[side_of(y)] = piece_b
        # piece_a doubles as the e-side fragment; b gets nothing extra there
    else:
        t_b = p.trails[tb_idx]
        k = t_b.edges.index(b)
        alpha = _Piece(list(t_b.edges[:k]), list(t_b.walk[: k + 1]))
        beta = _Piece(list(t_b.edges[k + 1 :]), list(t_b.walk[k + 1 :]))
        x = t_b.walk[k]
        y = t_b.walk[k + 1]
        assert side_of(x) != side_of(y)
        e_piece = [_Piece([], []), _Piece([], [])]
        if not rest_e.empty:
            e_piece[side_of(att_e)] = rest_e.reversed()
        if not alpha.empty:
            b_piece[side_of(x)] = alpha.reversed()
        if not beta.empty:
            b_piece[side_of(y)] = beta

    parts: list[TrailPartition] = []
    surgery: dict[int, tuple] = {}
    merged_pos: list[int] = []
    for i in (0, 1):
        vm = vmaps[i]
        rev = rev_emaps[i]
        trails_i: list[Trail] = []
        for ti, t in enumerate(p.trails):
            if ti in (te_idx, tb_idx):
                continue
            if t.edges[0] in rev:
                assert all(eid in rev for eid in t.edges), "trail straddles the cut"
                trails_i.append(
                    Trail([rev[eid] for eid in t.edges], [vm[v] for v in t.walk])
                )
                surgery[ti] = ("moved", i, len(trails_i) - 1)
        ep = e_piece[i]
        glue_piece = _Piece([glue_ids[i]], [vm[u[i]], vm[w[i]]])
        mapped_parts = []
        for piece in (ep, None, b_piece[i]):
            if piece is None:
                mapped_parts.append(glue_piece)
            elif not piece.empty:
                mapped_parts.append(
                    _Piece([rev[eid] for eid in piece.edges], [vm[v] for v in piece.walk])
                )
        merged = _piece_concat(mapped_parts)
        trails_i.append(Trail(merged.edges, merged.walk))
        merged_pos.append(len(trails_i) - 1)
        parts.append(TrailPartition(trails_i))
    surgery[te_idx] = ("merged", merged_pos[0], merged_pos[1])
    if tb_idx != te_idx:
        surgery[tb_idx] = ("merged", merged_pos[0], merged_pos[1])

    record = SplitRecord(
        cut=(e, b),
        sides=(frozenset(side0), frozenset(side1)),
        vertex_maps=(vmaps[0], vmaps[1]),
        edge_maps=(emaps[0], emaps[1]),
        glue=(glue_ids[0], glue_ids[1]),
        merged=(merged_pos[0], merged_pos[1]),
        trail_surgery=surgery,
    )
    return graphs[0], parts[0], graphs[1], parts[1], record


def _drop_end_edge(p: TrailPartition, e: int) -> TrailPartition:
    """Partition with end edge ``e`` removed from its trail."""
    ti = p.trail_of(e)
    out: list[Trail] = []
    for i, t in enumerate(p.trails):
        if i != ti:
            out.append(t)
            continue
        if len(t) == 1:
            continue
        if t.edges[0] == e:
            out.append(Trail(t.edges[1:], t.walk[1:]))
        else:
            assert t.edges[-1] == e
            out.append(Trail(t.edges[:-1], t.walk[:-1]))
    return TrailPartition(out)


def _solve(g: MultiGraph, p: TrailPartition) -> dict[int, Direction]:
    if g.num_live_edges == 0:
        return {}
    e = pick_end_edge(g, p)
    assert e is not None
    if is_two_edge_connected(g, skip=e):
        g2 = g.copy()
        g2.delete_edge(e)
        sub = _solve(g2, _drop_end_edge(p, e))
        t = p.trails[p.trail_of(e)]
        d = trail_direction_in(Orientation(sub), g, t)
        along = t.along_direction(p.position_of(e), g)
        sub[e] = along if d in (None, Direction.FORWARD) else along.flipped()
        return sub
    g1, p1, g2, p2, rec = split_on_cut(g, p, e)
    o1 = _solve(g1, p1)
    o2 = _solve(g2, p2)
    want = (Direction.FORWARD, Direction.REVERSED)
    halves = []
    for i, (o, gi, pi) in enumerate(((o1, g1, p1), (o2, g2, p2))):
        d = trail_direction_in(Orientation(o), gi, pi.trails[rec.merged[i]])
        if d is not None and d is not want[i]:
            o = {k: v.flipped() for k, v in o.items()}
        halves.append(o)
    o1, o2 = halves
    out: dict[int, Direction] = {}
    for o, emap in ((o1, rec.edge_maps[0]), (o2, rec.edge_maps[1])):
        for sub_eid, orig in enumerate(emap):
            if orig is not None:
                out[orig] = o[sub_eid]
    e_id, b_id = rec.cut
    # e runs side0 -> side1, b runs side1 -> side0, closing the loop
    out[e_id] = (
        Direction.FORWARD if g.edge(e_id).tail in rec.sides[0] else Direction.REVERSED
    )
    out[b_id] = (
        Direction.FORWARD if g.edge(b_id).tail in rec.sides[1] else Direction.REVERSED
    )
    return out


def orient_trails(g: MultiGraph, p: TrailPartition) -> Orientation | None:
    """Strong orientation of ``g`` consistent with the trails of ``p``.

    Returns None exactly when ``g`` is not 2-edge-connected.  Raises
    PartitionError for an invalid partition and ValueError if ``g`` carries
    pre-directed edges (the mixed solver handles those).
    """
    require_valid_trails(g, p)
    if g.is_mixed():
        raise ValueError("graph has pre-directed edges; use the mixed solver")
    if not is_two_edge_connected(g):
        return None
    return Orientation(_solve(g, p))
