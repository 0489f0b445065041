"""Connectivity queries on multigraphs.

Everything here is iterative (no recursion limits) and honors dead edges.
Each query takes an optional ``skip`` edge id treated as deleted for that
call only; algorithms lean on this to probe "graph minus one edge" without
mutating or copying.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import EdgeState, MultiGraph


def _first_vertex(g: MultiGraph) -> int | None:
    return 0 if g.n > 0 else None


def is_connected(g: MultiGraph, skip: int | None = None) -> bool:
    """Connectivity of the underlying undirected graph (edge states ignored).

    The empty graph counts as connected; isolated vertices count as real
    vertices and disconnect everything else.
    """
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for eid, w in g.incident(v):
            if eid == skip or seen[w]:
                continue
            seen[w] = True
            reached += 1
            stack.append(w)
    return reached == g.n


def find_bridges(g: MultiGraph, skip: int | None = None) -> list[int]:
    """All bridge edge ids of the underlying graph, ascending.

    Iterative low-point search.  Parallel edges are distinguished by id, so
    a doubled edge is never a bridge; self-loops are never bridges.  Works
    per component on disconnected graphs.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, arrival edge id, incidence cursor)
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack.pop()
            adj = g.incident_slots(v)
            advanced = False
            while i < len(adj):
                eid, end = adj[i]
                i += 1
                if eid == skip:
                    continue
                rec = g.edge(eid)
                w = rec.head if end == 0 else rec.tail
                if w == v:
                    continue  # self-loop
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((v, via, i))
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                if eid != via:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced and via != -1:
                # v finished; fold into its parent, test the tree edge
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] > disc[pv]:
                    bridges.append(via)
    bridges.sort()
    return bridges


def is_two_edge_connected(g: MultiGraph, skip: int | None = None) -> bool:
    """Connected and bridge-free.  Single-vertex graphs qualify."""
    if g.n <= 1:
        return True
    return is_connected(g, skip=skip) and not find_bridges(g, skip=skip)


def _reach_mixed(g: MultiGraph, start: int, forward: bool, skip: int | None) -> int:
    """Count vertices reachable in the mixed sense (undirected = two-way)."""
    seen = [False] * g.n
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for eid, end in g.incident_slots(v):
            if eid == skip:
                continue
            rec = g.edge(eid)
            if rec.is_loop:
                continue
            w = rec.head if end == 0 else rec.tail
            if rec.state is not EdgeState.UNDIRECTED:
                src = (
                    rec.head
                    if rec.state is EdgeState.ORIENTED_REVERSED
                    else rec.tail
                )
                if (v == src) != forward:
                    continue
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count


def is_strongly_connected(g: MultiGraph, skip: int | None = None) -> bool:
    """Strong connectivity of a mixed graph.

    Undirected edges may be traversed both ways; directed ones only along
    their arc.  Checked with one forward and one backward search from
    vertex 0.
    """
    if g.n <= 1:
        return True
    if _reach_mixed(g, 0, True, skip) != g.n:
        return False
    return _reach_mixed(g, 0, False, skip) == g.n


@dataclass(frozen=True)
class CutPair:
    """An unordered pair of edge ids forming a two-edge cut."""

    a: int
    b: int

    def __post_init__(self):
        if self.a >= self.b:
            raise ValueError("cut pair must be stored (low, high)")

    def other(self, eid: int) -> int:
        if eid == self.a:
            return self.b
        if eid == self.b:
            return self.a
        raise ValueError(f"edge {eid} not in cut pair")


@dataclass(frozen=True)
class CactusEdge:
    """A cut edge of the host graph, as an edge of the cactus."""

    node_a: int
    node_b: int
    edge: int
    cut: CutPair  # the pairing this edge participates in at min(node_a, node_b)


@dataclass
class Cactus:
    """Three-edge-connected components of a 2-edge-connected host.

    ``cycles`` lists the equivalence classes of cut edges; each class forms
    a cycle in the cactus and every cactus edge lies in exactly one class.
    ``pairings[node]`` lists, per incident class in class order, the two
    (edge, endpoint-inside-node) entries where that cycle meets the node.
    """

    node_count: int
    node_members: tuple[tuple[int, ...], ...]
    vertex_to_node: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    cactus_edges: tuple[CactusEdge, ...]
    cycle_of_edge: dict[int, int] = field(default_factory=dict)
    pairings: dict[int, list[tuple[tuple[int, int], tuple[int, int]]]] = field(
        default_factory=dict
    )

    def cut_pairs_at(self, node: int) -> list[CutPair]:
        out = []
        for (e, _ve), (f, _vf) in self.pairings.get(node, []):
            out.append(CutPair(min(e, f), max(e, f)))
        return out

    def is_cut_edge(self, eid: int) -> bool:
        return eid in self.cycle_of_edge


def _bfs_tree(g: MultiGraph) -> tuple[list[int], list[int], list[int]]:
    """BFS spanning tree from vertex 0: (parent_vertex, parent_edge, depth)."""
    parent_v = [-1] * g.n
    parent_e = [-1] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for eid, w in g.incident(v):
            if not seen[w]:
                seen[w] = True
                parent_v[w] = v
                parent_e[w] = eid
                depth[w] = depth[v] + 1
                queue.append(w)
    if len(queue) != g.n:
        raise ValueError("graph is not connected")
    return parent_v, parent_e, depth


def three_edge_components(g: MultiGraph) -> Cactus:
    """Partition a 2-edge-connected multigraph into 3-edge-connected pieces.

    Two edges are mates when together they disconnect the graph.  Mate
    classes are exactly the cycles of the cactus of components; removing
    every mated ("cut") edge leaves the components themselves.

    Quadratic-ish and meant for modest hosts; the array engine has its own
    batched equivalent.
    """
    if not is_two_edge_connected(g):
        raise ValueError("three_edge_components requires a 2-edge-connected graph")
    if g.n <= 1:
        return Cactus(
            node_count=g.n,
            node_members=((0,),) if g.n == 1 else (),
            vertex_to_node=tuple([0] * g.n),
            cycles=(),
            cactus_edges=(),
        )

    parent_v, parent_e, depth = _bfs_tree(g)
    tree_edges = set(e for e in parent_e if e != -1)

    # every non-tree, non-loop edge covers the tree path between its ends
    cover: dict[int, set[int]] = {e: set() for e in tree_edges}
    for x in g.live_edges():
        if x in tree_edges:
            continue
        u, v = g.endpoints(x)
        if u == v:
            continue
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            cover[parent_e[u]].add(x)
            u = parent_v[u]

    buckets: dict[frozenset[int], list[int]] = {}
    for e in tree_edges:
        cov = cover[e]
        assert cov, "tree edge with empty cover contradicts 2-edge-connectivity"
        buckets.setdefault(frozenset(cov), []).append(e)
    for x in g.live_edges():
        if x in tree_edges:
            continue
        u, v = g.endpoints(x)
        if u == v:
            continue
        solo = frozenset((x,))
        if solo in buckets:
            buckets[solo].append(x)

    classes = [sorted(mem) for mem in buckets.values() if len(mem) >= 2]
    classes.sort(key=lambda c: c[0])
    cycle_of_edge: dict[int, int] = {}
    for ci, mem in enumerate(classes):
        for e in mem:
            cycle_of_edge[e] = ci

    # components, first pass: connectivity over non-cut edges
    prov_of = [-1] * g.n
    prov_count = 0
    for v0 in range(g.n):
        if prov_of[v0] != -1:
            continue
        prov_of[v0] = prov_count
        stack = [v0]
        while stack:
            v = stack.pop()
            for eid, w in g.incident(v):
                if eid in cycle_of_edge or prov_of[w] != -1:
                    continue
                prov_of[w] = prov_count
                stack.append(w)
        prov_count += 1

    # second pass: a piece that meets a cut class exactly once cannot host
    # that cycle's visit on its own; such pieces pair up (two per class,
    # inner cycles first) and belong to one 3-edge-connected node, e.g. the
    # two hubs of a theta graph
    uf = list(range(prov_count))

    def find(a: int) -> int:
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    while True:
        seen_at: dict[tuple[int, int], int] = {}
        for e, ci in cycle_of_edge.items():
            u, v = g.endpoints(e)
            for w in (u, v):
                key = (find(prov_of[w]), ci)
                seen_at[key] = seen_at.get(key, 0) + 1
        deficient: dict[int, list[int]] = {}
        for (root, ci), cnt in seen_at.items():
            if cnt == 1:
                deficient.setdefault(ci, []).append(root)
        if not deficient:
            break
        merged = False
        for ci, roots in sorted(deficient.items()):
            if len(roots) == 2:
                ra, rb = find(roots[0]), find(roots[1])
                if ra != rb:
                    uf[max(ra, rb)] = min(ra, rb)
                    merged = True
        assert merged, "component refinement stalled; cactus structure broken"

    node_of = [-1] * g.n
    node_members = []
    root_to_node: dict[int, int] = {}
    for v in range(g.n):
        r = find(prov_of[v])
        node = root_to_node.get(r)
        if node is None:
            node = len(node_members)
            root_to_node[r] = node
            node_members.append([])
        node_of[v] = node
        node_members[node].append(v)

    # pairings: per (node, class) exactly two edge-end incidences
    joint: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e, ci in sorted(cycle_of_edge.items()):
        u, v = g.endpoints(e)
        joint.setdefault((node_of[u], ci), []).append((e, u))
        joint.setdefault((node_of[v], ci), []).append((e, v))
    pairings: dict[int, list[tuple[tuple[int, int], tuple[int, int]]]] = {}
    for (node, ci), ends in sorted(joint.items()):
        assert len(ends) == 2, (
            f"cycle {ci} meets node {node} {len(ends)} times; cactus structure broken"
        )
        pairings.setdefault(node, []).append((ends[0], ends[1]))

    cactus_edges = []
    for e in sorted(cycle_of_edge):
        u, v = g.endpoints(e)
        na, nb = node_of[u], node_of[v]
        low = min(na, nb)
        cut = None
        for (p, _vp), (q, _vq) in pairings.get(low, []):
            if e in (p, q):
                cut = CutPair(min(p, q), max(p, q))
                break
        assert cut is not None
        cactus_edges.append(CactusEdge(na, nb, e, cut))

    return Cactus(
        node_count=len(node_members),
        node_members=tuple(tuple(m) for m in node_members),
        vertex_to_node=tuple(node_of),
        cycles=tuple(tuple(c) for c in classes),
        cactus_edges=tuple(cactus_edges),
        cycle_of_edge=cycle_of_edge,
        pairings=pairings,
    )


def is_three_edge_connected(g: MultiGraph) -> bool:
    """No two edges disconnect the graph (and it is 2-edge-connected)."""
    if not is_two_edge_connected(g):
        return False
    return three_edge_components(g).node_count == 1
