"""Trail orientation by repeated contraction (reference implementation).

The pipeline that keeps total work near-linear:

1. blow the graph up into a cubic one (each vertex becomes a cycle of
   stubs), carrying the trails along;
2. build a spanning tree that contains every trail-interior edge;
3. throw away non-tree edges greedily while 2-edge-connectivity survives,
   leaving a minimal 2-edge-connected subgraph H (the deleted edges are
   trail ends and get reinserted at the very end, following their trail);
4. split H into its 3-edge-connected components; the two-edge cuts arrange
   themselves into the cycles of a cactus;
5. replace, per component, each incident cut by one new edge joining the
   two attachment points, stitching the trails through (a contracted view
   of the rest of the graph); recurse on each multi-vertex component;
6. combine: component orientations may be flipped wholesale, cut edges get
   oriented so every cactus cycle becomes a directed cycle, and both are
   forced into agreement by walking the cactus.

Everything here is the plain-object reference path; ``fastpath`` implements
the same contract on flat arrays for large inputs, and the two are held to
byte-identical outputs in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .connectivity import Cactus, is_two_edge_connected, three_edge_components
from .multigraph import (
    Direction,
    MultiGraph,
    Orientation,
    Trail,
    TrailPartition,
    orient_partition,
    require_valid_trails,
    trail_direction_in,
)


def is_pipeline_cubic(g: MultiGraph) -> bool:
    """Every vertex degree 3 and no self-loops: ready to skip the blow-up."""
    for eid in g.live_edges():
        if g.edge(eid).is_loop:
            return False
    return all(g.degree(v) == 3 for v in range(g.n))


# ---------------------------------------------------------------------------
# step 1: cubic blow-up


@dataclass
class ReductionMap:
    """How a graph was blown up into its cubic form.

    Original edge ids survive unchanged (edge i of the cubic graph is the
    image of edge i), so orientations pull back by plain restriction.
    ``cycle_of_vertex[v]`` lists the vertex-cycle edge ids that replaced
    vertex v, in cycle order; ``orig_edge_of[j]`` maps a cubic edge to its
    original edge, None for vertex-cycle edges; ``host_vertex_of[s]`` names
    the original vertex each stub came from; ``trail_map[t]`` gives the
    original trail index or None for the singleton trails of leftover
    cycle edges.
    """

    orig_edge_of: tuple[int | None, ...]
    cycle_of_vertex: tuple[tuple[int, ...], ...]
    host_vertex_of: tuple[int, ...]
    trail_map: tuple[int | None, ...]


def reduce_to_cubic(
    g: MultiGraph, p: TrailPartition
) -> tuple[MultiGraph, TrailPartition, ReductionMap]:
    """Expand each vertex into a cycle of stubs, one per edge-end.

    Result: 2m vertices, 3m edges (m edge images + 2m cycle edges), every
    degree exactly 3, no loops.  A trail through a vertex consumes the cycle
    edge between its entry and exit stubs, which works because the stub
    cycle is laid out so each trail's stub pair sits adjacent.  Leftover
    cycle edges become singleton trails.

    Requires every vertex to have degree >= 2 (true in any 2-edge-connected
    graph with at least one cycle) and no dead edge ids.
    """
    require_valid_trails(g, p)
    if g.is_mixed():
        raise ValueError("blow-up handles undirected graphs only")
    if g.num_live_edges != g.num_edges_ever:
        raise ValueError("graph has deleted edge ids; rebuild it densely first")
    for v in range(g.n):
        if g.degree(v) < 2:
            raise ValueError(f"vertex {v} has degree < 2; graph cannot be 2-edge-connected")

    m = g.num_live_edges

    # slot = one edge-end; slot id of (eid, end) is 2*eid + end
    def slot(eid: int, end: int) -> int:
        return 2 * eid + end

    def slot_at(eid: int, v: int, entering: bool) -> int:
        rec = g.edge(eid)
        if rec.is_loop:
            return slot(eid, 0 if entering else 1)
        return slot(eid, 0 if rec.tail == v else 1)

    partner = [-1] * (2 * m)
    for t in p.trails:
        for i in range(len(t) - 1):
            w = t.walk[i + 1]
            s_out = slot_at(t.edges[i], w, entering=False)
            s_in = slot_at(t.edges[i + 1], w, entering=True)
            assert partner[s_out] == -1 and partner[s_in] == -1
            partner[s_out] = s_in
            partner[s_in] = s_out

    # per-vertex slot lists in incidence order
    slots_of: list[list[int]] = [[] for _ in range(g.n)]
    for eid in range(m):
        rec = g.edge(eid)
        slots_of[rec.tail].append(slot(eid, 0))
        slots_of[rec.head].append(slot(eid, 1))

    # cyclic layout per vertex: paired slots adjacent, otherwise incidence order
    stub_of_slot = [-1] * (2 * m)
    host_vertex_of: list[int] = []
    order_of_vertex: list[list[int]] = []
    base = 0
    for v in range(g.n):
        placed: list[int] = []
        placed_set: set[int] = set()
        for s in slots_of[v]:
            if s in placed_set:
                continue
            placed.append(s)
            placed_set.add(s)
            q = partner[s]
            if q != -1 and q not in placed_set:
                placed.append(q)
                placed_set.add(q)
        assert len(placed) == len(slots_of[v])
        for k, s in enumerate(placed):
            stub_of_slot[s] = base + k
            host_vertex_of.append(v)
        order_of_vertex.append(placed)
        base += len(placed)

    g2 = MultiGraph(base)
    for eid in range(m):
        s_t, s_h = stub_of_slot[slot(eid, 0)], stub_of_slot[slot(eid, 1)]
        g2.add_edge(s_t, s_h)

    cycle_of_vertex: list[tuple[int, ...]] = []
    joint_of: dict[tuple[int, int], int] = {}  # (slot, slot) adjacent pair -> cycle edge
    for v in range(g.n):
        seq = order_of_vertex[v]
        d = len(seq)
        ids = []
        if d == 2:
            a, b = stub_of_slot[seq[0]], stub_of_slot[seq[1]]
            first = g2.add_edge(a, b)
            second = g2.add_edge(a, b)
            ids = [first, second]
            joint_of[(seq[0], seq[1])] = first
            joint_of[(seq[1], seq[0])] = first
        else:
            for k in range(d):
                a = seq[k]
                b = seq[(k + 1) % d]
                cid = g2.add_edge(stub_of_slot[a], stub_of_slot[b])
                ids.append(cid)
                joint_of[(a, b)] = cid
                joint_of[(b, a)] = cid
        cycle_of_vertex.append(tuple(ids))

    trails2: list[Trail] = []
    trail_map: list[int | None] = []
    used_cycle: set[int] = set()
    for ti, t in enumerate(p.trails):
        edges2: list[int] = []
        walk2: list[int] = []
        for i, eid in enumerate(t.edges):
            s_in = slot_at(eid, t.walk[i], entering=True)
            s_out = slot_at(eid, t.walk[i + 1], entering=False)
            if i == 0:
                walk2.append(stub_of_slot[s_in])
            edges2.append(eid)
            walk2.append(stub_of_slot[s_out])
            if i < len(t) - 1:
                nxt_in = slot_at(t.edges[i + 1], t.walk[i + 1], entering=True)
                joint = joint_of[(s_out, nxt_in)]
                assert joint not in used_cycle
                used_cycle.add(joint)
                edges2.append(joint)
                walk2.append(stub_of_slot[nxt_in])
        trails2.append(Trail(edges2, walk2))
        trail_map.append(ti)
    for cid in range(m, g2.num_edges_ever):
        if cid not in used_cycle:
            a, b = g2.endpoints(cid)
            trails2.append(Trail([cid], [a, b]))
            trail_map.append(None)

    p2 = TrailPartition(trails2)
    orig_edge_of: list[int | None] = [eid if eid < m else None for eid in range(g2.num_edges_ever)]
    for eid in range(m):
        orig_edge_of[eid] = eid
    rmap = ReductionMap(
        orig_edge_of=tuple(orig_edge_of),
        cycle_of_vertex=tuple(cycle_of_vertex),
        host_vertex_of=tuple(host_vertex_of),
        trail_map=tuple(trail_map),
    )
    return g2, p2, rmap


def pull_back_orientation(rmap: ReductionMap, o2: Orientation) -> Orientation:
    """Restrict a cubic-graph orientation to the original edges.

    Edge ids and stored endpoint order are preserved by the blow-up, so the
    direction values copy over unchanged.
    """
    o = Orientation()
    for eid, orig in enumerate(rmap.orig_edge_of):
        if orig is not None:
            o.assign(orig, o2.get(eid))
    return o


# ---------------------------------------------------------------------------
# steps 2-3: trail-aware spanning tree, minimal 2-edge-connected subgraph


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def trail_spanning_tree(g: MultiGraph, p: TrailPartition) -> frozenset[int]:
    """Spanning tree containing every trail-interior edge.

    Interior edges (everything but the two ends of each trail) must form a
    loop-free forest; they do whenever the graph is cubic, and the call
    fails loudly otherwise.  The forest is completed to a spanning tree by
    scanning the remaining edges in ascending id order.
    """
    uf = _UnionFind(g.n)
    interior = sorted(p.interior_edges())
    for eid in interior:
        u, v = g.endpoints(eid)
        if u == v or not uf.union(u, v):
            raise ValueError(
                f"trail-interior edges are not a forest (edge {eid}); "
                "this cannot happen on a cubic graph"
            )
    tree = set(interior)
    for eid in g.live_edges():
        if eid in tree:
            continue
        u, v = g.endpoints(eid)
        if u != v and uf.union(u, v):
            tree.add(eid)
    roots = {uf.find(v) for v in range(g.n)}
    if len(roots) > 1:
        raise ValueError("graph is not connected; no spanning tree exists")
    return frozenset(tree)


def minimal_2ecc_subgraph(g: MultiGraph, tree: frozenset[int]) -> MultiGraph:
    """Delete non-tree edges, highest id first, while 2-edge-connectivity holds.

    The result is minimal: because deletions only ever make other edges more
    critical, any surviving non-tree edge stays essential no matter what was
    removed after it was examined.
    """
    h = g.copy()
    candidates = sorted((e for e in g.live_edges() if e not in tree), reverse=True)
    for x in candidates:
        if is_two_edge_connected(h, skip=x):
            h.delete_edge(x)
    return h


# ---------------------------------------------------------------------------
# step 5: contracted component views


_OPEN = (-1, -1)


@dataclass
class GammaGraph:
    """One 3-edge-connected component with its surroundings contracted away.

    Component-internal edges keep their identity via ``edge_origin``; every
    two-edge cut incident to the component is replaced by a single new edge
    joining the two attachment vertices (``replaced_cuts`` records which cut
    each new edge stands for, in cactus-cycle order).  ``trails`` carries
    the host trails restricted to the component, with each crossing rewired
    through the new edges; ``trail_map`` mirrors the trails as host edge
    ids with None at the new edges.
    """

    graph: MultiGraph
    trails: TrailPartition
    host_node: int
    host_vertices: tuple[int, ...]
    edge_origin: tuple[int | None, ...]
    replaced_cuts: tuple[tuple[tuple[int, int], int], ...]

    @property
    def trail_map(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(
            tuple(self.edge_origin[e] for e in t.edges) for t in self.trails.trails
        )


def build_gamma(
    h: MultiGraph, p: TrailPartition, cactus: Cactus, node: int
) -> GammaGraph:
    """Contract everything outside component ``node`` of ``h``.

    ``p`` must be the trail partition of ``h`` itself (after any end-edge
    deletions).  For a single-vertex component the new edges degenerate to
    self-loops; degree is preserved either way.
    """
    members = cactus.node_members[node]
    vmap = {v: i for i, v in enumerate(members)}
    inside = set(members)

    gg = MultiGraph(len(members))
    origin: list[int | None] = []
    internal_gamma: dict[int, int] = {}
    for eid in h.live_edges():
        u, v = h.endpoints(eid)
        if u in inside and v in inside:
            assert eid not in cactus.cycle_of_edge, "a cut edge cannot be internal"
            internal_gamma[eid] = gg.add_edge(vmap[u], vmap[v])
            origin.append(eid)

    pairings = cactus.pairings.get(node, [])
    new_of_class: dict[int, int] = {}
    replaced: list[tuple[tuple[int, int], int]] = []
    new_sides: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for (e, ve), (f, vf) in pairings:
        gid = gg.add_edge(vmap[ve], vmap[vf])
        origin.append(None)
        ci = cactus.cycle_of_edge[e]
        new_of_class[ci] = gid
        replaced.append(((min(e, f), max(e, f)), gid))
        new_sides.append(((e, ve), (f, vf)))

    # ports: each gamma edge has two, each resolving to another port or _OPEN
    port_link: dict[tuple[int, int], tuple[int, int]] = {}
    port_vertex: dict[tuple[int, int], int] = {}

    def continuation(x: int, w: int) -> tuple[int, int]:
        """Port for whatever follows host cut edge x past vertex w in its trail."""
        ti, pos = p.trail_of(x), p.position_of(x)
        t = p.trails[ti]
        assert not h.edge(x).is_loop, "cut edges are never loops"
        if t.walk[pos] == w:
            nb = t.edges[pos - 1] if pos > 0 else None
        else:
            assert t.walk[pos + 1] == w
            nb = t.edges[pos + 1] if pos + 1 < len(t) else None
        if nb is None:
            return _OPEN
        return _neighbor_port(nb, x, w)

    def _neighbor_port(nb: int, from_edge: int, w: int) -> tuple[int, int]:
        """Port of nb's gamma stand-in on the side facing from_edge at w."""
        if nb in internal_gamma:
            ge = internal_gamma[nb]
            ti, pos = p.trail_of(nb), p.position_of(nb)
            t = p.trails[ti]
            prev_e = t.edges[pos - 1] if pos > 0 else None
            nxt_e = t.edges[pos + 1] if pos + 1 < len(t) else None
            if prev_e == from_edge:
                return (ge, 0)
            assert nxt_e == from_edge
            return (ge, 1)
        ci = cactus.cycle_of_edge[nb]
        gid = new_of_class[ci]
        (e, ve), (f, vf) = new_sides[gid - len(internal_gamma)]
        if nb == e:
            assert w == ve
            return (gid, 0)
        assert nb == f and w == vf
        return (gid, 1)

    for eid, ge in internal_gamma.items():
        ti, pos = p.trail_of(eid), p.position_of(eid)
        t = p.trails[ti]
        wa, wb = t.walk[pos], t.walk[pos + 1]
        prev_e = t.edges[pos - 1] if pos > 0 else None
        nxt_e = t.edges[pos + 1] if pos + 1 < len(t) else None
        port_vertex[(ge, 0)] = vmap[wa]
        port_vertex[(ge, 1)] = vmap[wb]
        port_link[(ge, 0)] = _OPEN if prev_e is None else _neighbor_port(prev_e, eid, wa)
        port_link[(ge, 1)] = _OPEN if nxt_e is None else _neighbor_port(nxt_e, eid, wb)

    for idx, ((e, ve), (f, vf)) in enumerate(new_sides):
        gid = len(internal_gamma) + idx
        port_vertex[(gid, 0)] = vmap[ve]
        port_vertex[(gid, 1)] = vmap[vf]
        port_link[(gid, 0)] = continuation(e, ve)
        port_link[(gid, 1)] = continuation(f, vf)

    for a, b in port_link.items():
        if b != _OPEN:
            assert port_link[b] == a, f"asymmetric port link {a} <-> {b}"

    # chains first (from open ports, canonical order), then cycles
    visited: set[int] = set()
    trails_g: list[Trail] = []

    def walk_from(start: tuple[int, int]) -> Trail:
        edges: list[int] = []
        walk: list[int] = [port_vertex[start]]
        cur = start
        while True:
            ge, s = cur
            assert ge not in visited
            visited.add(ge)
            edges.append(ge)
            out = (ge, 1 - s)
            walk.append(port_vertex[out])
            nxt = port_link[out]
            if nxt == _OPEN or nxt == start:
                return Trail(edges, walk)
            cur = nxt

    total = gg.num_edges_ever
    for ge in range(total):
        for s in (0, 1):
            if ge not in visited and port_link[(ge, s)] == _OPEN:
                trails_g.append(walk_from((ge, s)))
                break
    for ge in range(total):
        if ge not in visited:
            trails_g.append(walk_from((ge, 0)))

    return GammaGraph(
        graph=gg,
        trails=TrailPartition(trails_g),
        host_node=node,
        host_vertices=tuple(members),
        edge_origin=tuple(origin),
        replaced_cuts=tuple(replaced),
    )


# ---------------------------------------------------------------------------
# step 6: recombination


def combine_components(
    h: MultiGraph,
    cactus: Cactus,
    solved: dict[int, tuple[GammaGraph, Orientation]],
) -> Orientation:
    """Merge per-component orientations into one orientation of ``h``.

    ``solved`` must hold an entry for every multi-vertex component; the
    host must come from a cubic graph (then each single-vertex component
    has degree 2 and both its edges belong to one cactus cycle, so any
    rotation of that cycle keeps a trail passing through it consistent).

    Cut edges are oriented so each cactus cycle becomes a directed cycle;
    a component's internal orientation is used as-is or flipped wholesale.
    The new edge a component's recursion saw in place of a cut dictates,
    per its orientation and the component's flip, which cut edge leaves and
    which enters; walking each cycle once propagates everything, and the
    component/cycle incidence structure being a tree means the flips never
    conflict.
    """
    n_nodes = cactus.node_count
    flips: list[bool | None] = [None] * n_nodes
    visited = [False] * n_nodes
    arcs: dict[int, Direction] = {}

    pairing_at: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]] = {}
    for node, plist in cactus.pairings.items():
        for (e, ve), (f, vf) in plist:
            ci = cactus.cycle_of_edge[e]
            pairing_at[(node, ci)] = ((e, ve), (f, vf))

    new_edge_of: dict[int, dict[int, int]] = {}
    for node, (gamma, _o) in solved.items():
        table: dict[int, int] = {}
        for (a, _b), gid in gamma.replaced_cuts:
            table[cactus.cycle_of_edge[a]] = gid
        new_edge_of[node] = table

    def class_nodes(ci: int) -> list[int]:
        seen: set[int] = set()
        for x in cactus.cycles[ci]:
            u, v = h.endpoints(x)
            seen.add(cactus.vertex_to_node[u])
            seen.add(cactus.vertex_to_node[v])
        return sorted(seen)

    def required_flip(node: int, ci: int, entering_edge: int) -> bool:
        (pe, _pv), (qe, _qv) = pairing_at[(node, ci)]
        gid = new_edge_of[node][ci]
        d = solved[node][1].get(gid)
        # child FORWARD on the new edge means: pe leaves the component, qe enters
        if entering_edge == qe:
            return d is not Direction.FORWARD
        assert entering_edge == pe
        return d is not Direction.REVERSED

    queue: list[int] = []

    def orient_class(ci: int) -> None:
        members = cactus.cycles[ci]
        anchor = None
        for node in class_nodes(ci):
            if node in solved and flips[node] is not None:
                anchor = node
                break
        if anchor is not None:
            (pe, pv), (qe, qv) = pairing_at[(anchor, ci)]
            gid = new_edge_of[anchor][ci]
            d = solved[anchor][1].get(gid)
            eff = d if not flips[anchor] else d.flipped()
            out_edge, out_v = (pe, pv) if eff is Direction.FORWARD else (qe, qv)
            start = anchor
        else:
            x0 = members[0]
            out_edge, out_v = x0, h.edge(x0).tail
            start = cactus.vertex_to_node[out_v]
        cur_edge, cur_v = out_edge, out_v
        for _ in range(len(members)):
            rec = h.edge(cur_edge)
            far = rec.other(cur_v)
            arcs[cur_edge] = (
                Direction.FORWARD if rec.tail == cur_v else Direction.REVERSED
            )
            node = cactus.vertex_to_node[far]
            (pe, pv), (qe, qv) = pairing_at[(node, ci)]
            partner, partner_v = ((qe, qv) if cur_edge == pe else (pe, pv))
            assert cur_edge in (pe, qe)
            if node in solved:
                req = required_flip(node, ci, cur_edge)
                if flips[node] is None:
                    flips[node] = req
                else:
                    assert flips[node] == req, "cactus cycle demands conflicting flips"
            if not visited[node]:
                visited[node] = True
                queue.append(node)
            cur_edge, cur_v = partner, partner_v
        assert cur_edge == out_edge, "cycle walk failed to close"

    processed: set[int] = set()
    for root in range(n_nodes):
        if visited[root]:
            continue
        visited[root] = True
        if root in solved:
            flips[root] = False
        queue.append(root)
        while queue:
            node = queue.pop(0)
            for (e, _ve), _pair in cactus.pairings.get(node, []):
                ci = cactus.cycle_of_edge[e]
                if ci not in processed:
                    processed.add(ci)
                    orient_class(ci)

    out = Orientation(arcs)
    for node, (gamma, o_g) in solved.items():
        f = flips[node]
        assert f is not None, "solved component never reached by the cactus walk"
        for ge, orig in enumerate(gamma.edge_origin):
            if orig is None:
                continue
            d = o_g.get(ge)
            out.assign(orig, d if not f else d.flipped())
    for eid in h.live_edges():
        if eid not in out:
            # only loops inside unsolved single-vertex components remain
            assert h.edge(eid).is_loop, f"edge {eid} fell through recombination"
            out.assign(eid, Direction.FORWARD)
    return out


# ---------------------------------------------------------------------------
# the driver


def _strip_deleted(p: TrailPartition, dead: set[int]) -> TrailPartition:
    """Trails restricted to surviving edges; only trail ends may be dead."""
    trails: list[Trail] = []
    for t in p.trails:
        lo, hi = 0, len(t)
        while lo < hi and t.edges[lo] in dead:
            lo += 1
        while hi > lo and t.edges[hi - 1] in dead:
            hi -= 1
        for eid in t.edges[lo:hi]:
            assert eid not in dead, "an interior trail edge was deleted"
        if lo < hi:
            trails.append(Trail(t.edges[lo:hi], t.walk[lo : hi + 1]))
    return TrailPartition(trails)


def _note_level(stats: dict, level: int, vertices: int, large_mass: int) -> None:
    table: dict[int, dict[str, int]] = stats.setdefault("levels", {})
    entry = table.setdefault(level, {"vertices": 0, "large_mass": 0})
    entry["vertices"] += vertices
    entry["large_mass"] += large_mass
    stats["depth"] = max(stats.get("depth", 0), level)


_LARGE_COMPONENT = 10


def _solve_cubic(
    g: MultiGraph, p: TrailPartition, stats: dict, level: int
) -> Orientation:
    """Recursive core; ``g`` cubic and loop-free, 2-edge-connected."""
    tree = trail_spanning_tree(g, p)
    h = minimal_2ecc_subgraph(g, tree)
    dead = {e for e in g.live_edges() if not h.is_alive(e)}
    p_h = _strip_deleted(p, dead)
    cactus = three_edge_components(h)
    large = sum(
        len(mem) for mem in cactus.node_members if len(mem) >= _LARGE_COMPONENT
    )
    _note_level(stats, level, g.n, large)

    solved: dict[int, tuple[GammaGraph, Orientation]] = {}
    for node in range(cactus.node_count):
        if len(cactus.node_members[node]) < 2:
            continue
        gamma = build_gamma(h, p_h, cactus, node)
        assert gamma.graph.n < g.n, "contraction failed to shrink the component"
        o_g = _solve_cubic(gamma.graph, gamma.trails, stats, level + 1)
        solved[node] = (gamma, o_g)

    o = combine_components(h, cactus, solved)
    for eid in sorted(dead):
        t = p.trails[p.trail_of(eid)]
        d = trail_direction_in(o, g, t)
        along = t.along_direction(p.position_of(eid), g)
        o.assign(eid, along if d in (None, Direction.FORWARD) else along.flipped())
    return o


def orient_linear(
    g: MultiGraph,
    p: TrailPartition,
    engine: str = "auto",
    stats: dict | None = None,
) -> Orientation | None:
    """Strong trail orientation via the contraction pipeline.

    Returns None exactly when ``g`` is not 2-edge-connected.  ``engine``
    picks the implementation: "object" (reference), "array" (flat-array
    kernels, large inputs), or "auto".  ``stats``, if given a dict, is
    filled with "depth" and per-level {"vertices", "large_mass"} counts.
    """
    require_valid_trails(g, p)
    if g.is_mixed():
        raise ValueError("graph has pre-directed edges; use the mixed solver")
    if engine not in ("auto", "object", "array"):
        raise ValueError(f"unknown engine {engine!r}")
    if stats is None:
        stats = {}
    stats.setdefault("depth", 0)
    stats.setdefault("levels", {})

    if g.n <= 1:
        # loops only; orient every trail as written
        return orient_partition(g, p, [Direction.FORWARD] * len(p.trails))

    if engine == "auto":
        engine = "array" if g.num_live_edges > 4000 else "object"

    if is_pipeline_cubic(g):
        if engine == "array":
            # the array engine performs its own bridge gate in compiled code
            from . import fastpath

            return fastpath.solve_cubic_graph(g, p, stats)
        if not is_two_edge_connected(g):
            return None
        return _solve_cubic(g, p, stats, 1)

    if not is_two_edge_connected(g):
        return None
    g2, p2, rmap = reduce_to_cubic(g, p)
    if engine == "array":
        from . import fastpath

        o2 = fastpath.solve_cubic_graph(g2, p2, stats)
    else:
        o2 = _solve_cubic(g2, p2, stats, 1)
    if o2 is None:
        return None
    return pull_back_orientation(rmap, o2)
