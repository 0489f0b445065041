"""Flat-array engine for the contraction pipeline.

Same algorithm and same deterministic tie-breaking as the object path in
``linear``; tests hold the two to identical outputs.  Graphs live in int32
edge arrays, trails in prev/next/enter arrays, and each recursion level is
the disjoint union of every component's contracted view, so one batch of
kernels advances the whole frontier at once.

Levels are pushed onto a stack on the way down and unwound in reverse:
component flips and cactus-cycle rotations propagate by an explicit BFS.

Cover counts, pruning and 3-edge-cut classes work by walking tree paths
with parent pointers; path length is the only superlinear factor, and on
the low-diameter graphs this engine targets it stays logarithmic.  The
two-cut mate classes come from 128-bit XOR path labels (fixed internal
seed), which identifies equal cover sets with collision probability around
2^-128 per pair; the object path computes the sets exactly and the two are
cross-checked in tests.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .multigraph import Direction, MultiGraph, Orientation, TrailPartition

_LABEL_SEED = 0x5EEDED_C0FFEE
_LARGE_COMPONENT = 10


# ---------------------------------------------------------------------------
# kernels


@njit(cache=True)
def _uf_find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit(cache=True)
def _kruskal(n, eu, ev, interior):
    """Spanning forest: interior edges first, then ascending ids.

    Returns (in_tree, interior_ok); interior_ok goes False if the interior
    edges alone contain a cycle, which the caller treats as a hard error.
    """
    m = eu.shape[0]
    parent = np.arange(n, dtype=np.int32)
    in_tree = np.zeros(m, dtype=np.bool_)
    interior_ok = True
    for phase in range(2):
        for e in range(m):
            if interior[e] != (phase == 0):
                continue
            ru = _uf_find(parent, eu[e])
            rv = _uf_find(parent, ev[e])
            if ru == rv:
                if phase == 0:
                    interior_ok = False
                continue
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
            in_tree[e] = True
    return in_tree, interior_ok


@njit(cache=True)
def _root_forest(n, eu, ev, in_tree):
    """Rooted forest from the tree edges: parents, depths, a top-down order."""
    m = eu.shape[0]
    deg = np.zeros(n + 1, dtype=np.int32)
    for e in range(m):
        if in_tree[e]:
            deg[eu[e] + 1] += 1
            deg[ev[e] + 1] += 1
    start = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        start[i + 1] = start[i] + deg[i + 1]
    cur = start[:n].copy()
    adj_e = np.empty(start[n], dtype=np.int32)
    adj_w = np.empty(start[n], dtype=np.int32)
    for e in range(m):
        if in_tree[e]:
            u, v = eu[e], ev[e]
            adj_e[cur[u]] = e
            adj_w[cur[u]] = v
            cur[u] += 1
            adj_e[cur[v]] = e
            adj_w[cur[v]] = u
            cur[v] += 1
    parent_v = np.full(n, -1, dtype=np.int32)
    parent_e = np.full(n, -1, dtype=np.int32)
    depth = np.zeros(n, dtype=np.int32)
    order = np.empty(n, dtype=np.int32)
    visited = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int32)
    idx = 0
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        stack[0] = root
        top = 1
        while top > 0:
            top -= 1
            v = stack[top]
            order[idx] = v
            idx += 1
            for k in range(start[v], start[v + 1]):
                w = adj_w[k]
                if not visited[w]:
                    visited[w] = True
                    parent_v[w] = v
                    parent_e[w] = adj_e[k]
                    depth[w] = depth[v] + 1
                    stack[top] = w
                    top += 1
    return parent_v, parent_e, depth, order


@njit(cache=True)
def _hld(n, parent_v, order):
    """Heavy-light decomposition of a rooted forest: chain head and a
    position per vertex, with each chain occupying consecutive positions."""
    size = np.ones(n, dtype=np.int32)
    for k in range(n - 1, -1, -1):
        v = order[k]
        p = parent_v[v]
        if p >= 0:
            size[p] += size[v]
    heavy = np.full(n, -1, dtype=np.int32)
    best = np.zeros(n, dtype=np.int32)
    for k in range(n):
        v = order[k]
        p = parent_v[v]
        if p >= 0 and size[v] > best[p]:
            best[p] = size[v]
            heavy[p] = v
    ccount = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        if parent_v[v] >= 0:
            ccount[parent_v[v] + 1] += 1
    cstart = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        cstart[i + 1] = cstart[i] + ccount[i + 1]
    cur = cstart[:n].copy()
    child = np.empty(cstart[n], dtype=np.int32)
    for v in range(n):
        p = parent_v[v]
        if p >= 0:
            child[cur[p]] = v
            cur[p] += 1
    head = np.empty(n, dtype=np.int32)
    pos = np.empty(n, dtype=np.int32)
    stack = np.empty(n, dtype=np.int32)
    idx = 0
    for k in range(n):
        r = order[k]
        if parent_v[r] >= 0:
            continue
        head[r] = r
        stack[0] = r
        top = 1
        while top > 0:
            top -= 1
            v = stack[top]
            pos[v] = idx
            idx += 1
            hv = heavy[v]
            for ci in range(cstart[v], cstart[v + 1]):
                c = child[ci]
                if c != hv:
                    head[c] = c
                    stack[top] = c
                    top += 1
            # the heavy child goes last so it pops first, keeping the
            # chain contiguous in position order
            if hv >= 0:
                head[hv] = head[v]
                stack[top] = hv
                top += 1
    return head, pos


# cover-count store: exact values per position, then eager min/offset pairs
# over 16-position blocks and 256-position superblocks.  Every operation is
# a handful of contiguous scans, so nothing chases pointers, loads overlap,
# and the two summary tiers stay cache-resident.
_BLK = 16
_SUP = _BLK * _BLK


@njit(cache=True)
def _cov_min(cov, blk, sup, lo, hi):
    """Min of the true values on positions [lo, hi).

    A position's true value is cov[i] plus its block offset blk[2b + 1]
    plus its superblock offset sup[2s + 1].  blk[2b] and sup[2s] keep the
    min over their span with offsets at or below their tier folded in,
    higher ones not."""
    b0 = lo >> 4
    b1 = (hi - 1) >> 4
    if b0 == b1:
        mn = cov[lo]
        for i in range(lo + 1, hi):
            if cov[i] < mn:
                mn = cov[i]
        return mn + blk[2 * b0 + 1] + sup[2 * (b0 >> 4) + 1]
    res = 1 << 30
    bl = b0
    if lo & 15:
        mn = cov[lo]
        for i in range(lo + 1, (b0 + 1) << 4):
            if cov[i] < mn:
                mn = cov[i]
        res = mn + blk[2 * b0 + 1] + sup[2 * (b0 >> 4) + 1]
        bl = b0 + 1
    bh = b1 + 1
    if hi & 15:
        mn = cov[b1 << 4]
        for i in range((b1 << 4) + 1, hi):
            if cov[i] < mn:
                mn = cov[i]
        q = mn + blk[2 * b1 + 1] + sup[2 * (b1 >> 4) + 1]
        if q < res:
            res = q
        bh = b1
    if bl < bh:
        s0 = bl >> 4
        s1 = (bh - 1) >> 4
        if s0 == s1:
            mn = blk[2 * bl]
            for b in range(bl + 1, bh):
                if blk[2 * b] < mn:
                    mn = blk[2 * b]
            q = mn + sup[2 * s0 + 1]
            if q < res:
                res = q
        else:
            sl = s0
            if bl & 15:
                mn = blk[2 * bl]
                for b in range(bl + 1, (s0 + 1) << 4):
                    if blk[2 * b] < mn:
                        mn = blk[2 * b]
                q = mn + sup[2 * s0 + 1]
                if q < res:
                    res = q
                sl = s0 + 1
            sh = s1 + 1
            if bh & 15:
                mn = blk[2 * (s1 << 4)]
                for b in range((s1 << 4) + 1, bh):
                    if blk[2 * b] < mn:
                        mn = blk[2 * b]
                q = mn + sup[2 * s1 + 1]
                if q < res:
                    res = q
                sh = s1
            for s in range(sl, sh):
                if sup[2 * s] < res:
                    res = sup[2 * s]
    return res


@njit(cache=True, inline="always")
def _blk_refresh(cov, blk, b):
    base = b << 4
    mn = cov[base]
    for i in range(base + 1, base + 16):
        if cov[i] < mn:
            mn = cov[i]
    blk[2 * b] = mn + blk[2 * b + 1]


@njit(cache=True, inline="always")
def _sup_refresh(blk, sup, s):
    base = s << 4
    mn = blk[2 * base]
    for b in range(base + 1, base + 16):
        if blk[2 * b] < mn:
            mn = blk[2 * b]
    sup[2 * s] = mn + sup[2 * s + 1]


@njit(cache=True)
def _cov_add(cov, blk, sup, lo, hi, val):
    """Add val to the true values on positions [lo, hi): exact edits at the
    position ends, offset bumps across whole blocks and superblocks, and a
    refresh of every partially touched summary after its inputs settle."""
    b0 = lo >> 4
    b1 = (hi - 1) >> 4
    if b0 == b1:
        for i in range(lo, hi):
            cov[i] += val
        _blk_refresh(cov, blk, b0)
        _sup_refresh(blk, sup, b0 >> 4)
        return
    bl = b0
    if lo & 15:
        for i in range(lo, (b0 + 1) << 4):
            cov[i] += val
        _blk_refresh(cov, blk, b0)
        bl = b0 + 1
    bh = b1 + 1
    if hi & 15:
        for i in range(b1 << 4, hi):
            cov[i] += val
        _blk_refresh(cov, blk, b1)
        bh = b1
    if bl < bh:
        s0 = bl >> 4
        s1 = (bh - 1) >> 4
        if s0 == s1:
            for b in range(bl, bh):
                blk[2 * b] += val
                blk[2 * b + 1] += val
            _sup_refresh(blk, sup, s0)
        else:
            sl = s0
            if bl & 15:
                for b in range(bl, (s0 + 1) << 4):
                    blk[2 * b] += val
                    blk[2 * b + 1] += val
                sl = s0 + 1
            sh = s1 + 1
            if bh & 15:
                for b in range(s1 << 4, bh):
                    blk[2 * b] += val
                    blk[2 * b + 1] += val
                sh = s1
            for s in range(sl, sh):
                sup[2 * s] += val
                sup[2 * s + 1] += val
    # summaries of partially covered superblocks, refreshed once every
    # block write below them has landed; duplicates are harmless
    if lo & 15:
        _sup_refresh(blk, sup, b0 >> 4)
    if hi & 15:
        _sup_refresh(blk, sup, b1 >> 4)
    if bl < bh:
        if bl & 15:
            _sup_refresh(blk, sup, bl >> 4)
        if bh & 15:
            _sup_refresh(blk, sup, (bh - 1) >> 4)


@njit(cache=True)
def _prune(eu, ev, in_tree, parent_v, depth, head, pos, order):
    """Greedy deletion, highest id first: drop a non-tree edge while every
    tree edge on its path keeps a second cover.

    Tree-path cover counts live in the three-tier cover store over
    decomposition positions, each tree edge keyed by its child vertex, so
    a path works out to a few contiguous scans.  The initial counts come
    from one subtree-sum sweep (each non-tree edge stamps its endpoints
    and clears twice at its LCA) rather than m path additions."""
    m = eu.shape[0]
    n = parent_v.shape[0]
    nsup = (n + _SUP - 1) // _SUP
    removed = np.zeros(m, dtype=np.bool_)

    w = np.zeros(n, dtype=np.int32)
    for e in range(m):
        if in_tree[e]:
            continue
        u, v = eu[e], ev[e]
        w[u] += 1
        w[v] += 1
        while head[u] != head[v]:
            if depth[head[u]] >= depth[head[v]]:
                u = parent_v[head[u]]
            else:
                v = parent_v[head[v]]
        w[u if depth[u] <= depth[v] else v] -= 2
    cov = np.full(nsup * _SUP, 1 << 29, dtype=np.int32)
    for k in range(n - 1, -1, -1):
        c = order[k]
        p = parent_v[c]
        if p >= 0:
            w[p] += w[c]
            cov[pos[c]] = w[c]
    blk = np.zeros(2 * nsup * _BLK, dtype=np.int32)
    for b in range(nsup * _BLK):
        _blk_refresh(cov, blk, b)
    sup = np.zeros(2 * nsup, dtype=np.int32)
    for s in range(nsup):
        _sup_refresh(blk, sup, s)

    # chain segments of the current path, recorded during the min pass so
    # a deletion replays the same ranges while their raw lines are still
    # hot; sized by the chain bound over positions, not blocks
    h = 0
    t = 1
    while t < n:
        t <<= 1
        h += 1
    segc = 4 * h + 8
    seg_lo = np.empty(segc, dtype=np.int64)
    seg_hi = np.empty(segc, dtype=np.int64)
    for e in range(m - 1, -1, -1):
        if in_tree[e]:
            continue
        u, v = eu[e], ev[e]
        ns = 0
        ok = True
        while head[u] != head[v]:
            if depth[head[u]] >= depth[head[v]]:
                lo = pos[head[u]]
                hi = pos[u] + 1
                u = parent_v[head[u]]
            else:
                lo = pos[head[v]]
                hi = pos[v] + 1
                v = parent_v[head[v]]
            # one range below 2 already vetoes the deletion, so later
            # ranges never need a look
            if _cov_min(cov, blk, sup, lo, hi) < 2:
                ok = False
                break
            seg_lo[ns] = lo
            seg_hi[ns] = hi
            ns += 1
        if ok and u != v:
            if depth[u] > depth[v]:
                u, v = v, u
            lo = pos[u] + 1
            hi = pos[v] + 1
            if _cov_min(cov, blk, sup, lo, hi) < 2:
                ok = False
            else:
                seg_lo[ns] = lo
                seg_hi[ns] = hi
                ns += 1
        if ok:
            removed[e] = True
            for i in range(ns):
                _cov_add(cov, blk, sup, seg_lo[i], seg_hi[i], -1)
    return removed


@njit(cache=True)
def _fold_labels(n, eu, ev, kept_ids, lab_hi, lab_lo, order, parent_v):
    """XOR labels of kept non-tree edges down the forest; a tree edge's key
    is the accumulated value at its child vertex."""
    acc_hi = np.zeros(n, dtype=np.uint64)
    acc_lo = np.zeros(n, dtype=np.uint64)
    for i in range(kept_ids.shape[0]):
        e = kept_ids[i]
        acc_hi[eu[e]] ^= lab_hi[i]
        acc_lo[eu[e]] ^= lab_lo[i]
        acc_hi[ev[e]] ^= lab_hi[i]
        acc_lo[ev[e]] ^= lab_lo[i]
    for k in range(n - 1, -1, -1):
        v = order[k]
        pv = parent_v[v]
        if pv >= 0:
            acc_hi[pv] ^= acc_hi[v]
            acc_lo[pv] ^= acc_lo[v]
    return acc_hi, acc_lo


@njit(cache=True)
def _group_classes(m, alive, key_hi, key_lo):
    """Group the alive edges by their 128-bit cycle-space keys.

    Groups of size two or more are the cut classes.  One ascending scan
    with a first-touch hash table gives class ids in smallest-member
    order and members ascending per class without any sort."""
    cap = 2
    while cap < 2 * m + 2:
        cap <<= 1
    mask = np.uint64(cap - 1)
    slot_gid = np.full(cap, -1, dtype=np.int32)
    slot_hi = np.zeros(cap, dtype=np.uint64)
    slot_lo = np.zeros(cap, dtype=np.uint64)
    gid_of = np.full(m, -1, dtype=np.int32)
    gsize = np.zeros(m + 1, dtype=np.int32)
    ngroups = 0
    for e in range(m):
        if not alive[e]:
            continue
        hi = key_hi[e]
        lo = key_lo[e]
        hsh = hi ^ (lo * np.uint64(0x9E3779B97F4A7C15))
        hsh ^= hsh >> np.uint64(29)
        hsh *= np.uint64(0xBF58476D1CE4E5B9)
        hsh ^= hsh >> np.uint64(32)
        idx = np.int64(hsh & mask)
        while True:
            g = slot_gid[idx]
            if g == -1:
                slot_gid[idx] = ngroups
                slot_hi[idx] = hi
                slot_lo[idx] = lo
                gid_of[e] = ngroups
                gsize[ngroups] += 1
                ngroups += 1
                break
            if slot_hi[idx] == hi and slot_lo[idx] == lo:
                gid_of[e] = g
                gsize[g] += 1
                break
            idx = (idx + 1) & np.int64(mask)
    rank = np.full(ngroups + 1, -1, dtype=np.int32)
    n_cls = 0
    for g in range(ngroups):
        if gsize[g] >= 2:
            rank[g] = n_cls
            n_cls += 1
    class_start = np.zeros(n_cls + 1, dtype=np.int32)
    for g in range(ngroups):
        if rank[g] >= 0:
            class_start[rank[g] + 1] = gsize[g]
    for i in range(n_cls):
        class_start[i + 1] += class_start[i]
    cursor = class_start[:n_cls].copy()
    class_edges = np.empty(class_start[n_cls], dtype=np.int32)
    cls_of = np.full(m, -1, dtype=np.int32)
    crit = np.zeros(m, dtype=np.bool_)
    for e in range(m):
        g = gid_of[e]
        if g == -1:
            continue
        r = rank[g]
        if r >= 0:
            class_edges[cursor[r]] = e
            cursor[r] += 1
            cls_of[e] = r
            crit[e] = True
    return crit, cls_of, class_edges, class_start


@njit(cache=True)
def _stable_counting_sort(keys, order_in, nkeys):
    """One stable pass: reorder order_in so keys[result] ascends."""
    cnt = np.zeros(nkeys + 1, dtype=np.int64)
    for j in range(order_in.shape[0]):
        cnt[keys[order_in[j]] + 1] += 1
    for k in range(nkeys):
        cnt[k + 1] += cnt[k]
    out = np.empty_like(order_in)
    for j in range(order_in.shape[0]):
        i = order_in[j]
        k = keys[i]
        out[cnt[k]] = i
        cnt[k] += 1
    return out


@njit(cache=True)
def _components(n, eu, ev, alive, crit):
    """Connected components over alive non-cut edges, ids ascending by
    smallest member vertex."""
    m = eu.shape[0]
    parent = np.arange(n, dtype=np.int32)
    for e in range(m):
        if alive[e] and not crit[e]:
            ru = _uf_find(parent, eu[e])
            rv = _uf_find(parent, ev[e])
            if ru != rv:
                if ru < rv:
                    parent[rv] = ru
                else:
                    parent[ru] = rv
    comp = np.full(n, -1, dtype=np.int32)
    nxt = 0
    for v in range(n):
        r = _uf_find(parent, v)
        if comp[r] == -1:
            comp[r] = nxt
            nxt += 1
        comp[v] = comp[r]
    return comp, nxt


@njit(cache=True)
def _build_ports(
    m2,
    kind,
    ref,
    eu,
    ev,
    tprev,
    tnext,
    enter,
    crit,
    end_pair_idx,
    end_pair_side,
    pair_e1,
    pair_v1,
    pair_e2,
    pair_v2,
    pairing_to_next,
    host_to_next,
    vmap_next,
):
    """Port tables for the next level's edges.

    Each next-level edge has two ports; port 0 of an internal edge faces its
    host trail predecessor, port 1 the successor; a new edge's port 0 faces
    the continuation past the lower cut edge's attachment, port 1 the other.
    conn_edge = -1 marks an open port (a trail end).
    """
    conn_edge = np.full(2 * m2, -1, dtype=np.int32)
    conn_side = np.full(2 * m2, -1, dtype=np.int32)
    port_v = np.full(2 * m2, -1, dtype=np.int32)
    for ne in range(m2):
        if kind[ne] == 0:
            host = ref[ne]
            w0 = enter[host]
            w1 = eu[host] + ev[host] - w0
            for s in range(2):
                w = w0 if s == 0 else w1
                nb = tprev[host] if s == 0 else tnext[host]
                port_v[2 * ne + s] = vmap_next[w]
                if nb == -1:
                    continue
                if crit[nb]:
                    end = 0 if eu[nb] == w else 1
                    j = end_pair_idx[2 * nb + end]
                    conn_edge[2 * ne + s] = pairing_to_next[j]
                    conn_side[2 * ne + s] = end_pair_side[2 * nb + end]
                else:
                    conn_edge[2 * ne + s] = host_to_next[nb]
                    conn_side[2 * ne + s] = 0 if tprev[nb] == host else 1
        else:
            j = ref[ne]
            for s in range(2):
                if s == 0:
                    x, vx = pair_e1[j], pair_v1[j]
                else:
                    x, vx = pair_e2[j], pair_v2[j]
                port_v[2 * ne + s] = vmap_next[vx]
                nb = tprev[x] if enter[x] == vx else tnext[x]
                if nb == -1:
                    continue
                if crit[nb]:
                    end = 0 if eu[nb] == vx else 1
                    jj = end_pair_idx[2 * nb + end]
                    conn_edge[2 * ne + s] = pairing_to_next[jj]
                    conn_side[2 * ne + s] = end_pair_side[2 * nb + end]
                else:
                    conn_edge[2 * ne + s] = host_to_next[nb]
                    conn_side[2 * ne + s] = 0 if tprev[nb] == x else 1
    return conn_edge, conn_side, port_v


@njit(cache=True)
def _stitch(m2, conn_edge, conn_side, port_v):
    """Walk port chains into next-level trail arrays, chains before cycles."""
    tprev2 = np.full(m2, -1, dtype=np.int32)
    tnext2 = np.full(m2, -1, dtype=np.int32)
    enter2 = np.full(m2, -1, dtype=np.int32)
    visited = np.zeros(m2, dtype=np.bool_)

    for pass_cycles in range(2):
        for e0 in range(m2):
            if visited[e0]:
                continue
            s0 = -1
            if pass_cycles == 0:
                if conn_edge[2 * e0] == -1:
                    s0 = 0
                elif conn_edge[2 * e0 + 1] == -1:
                    s0 = 1
                if s0 == -1:
                    continue
            else:
                s0 = 0
            cur_e, cur_s = e0, s0
            prev = -1
            while True:
                visited[cur_e] = True
                enter2[cur_e] = port_v[2 * cur_e + cur_s]
                tprev2[cur_e] = prev
                if prev != -1:
                    tnext2[prev] = cur_e
                out = 2 * cur_e + (1 - cur_s)
                nxt = conn_edge[out]
                if nxt == -1 or (nxt == e0 and conn_side[out] == s0):
                    break
                prev = cur_e
                cur_e = nxt
                cur_s = conn_side[out]
    return tprev2, tnext2, enter2


@njit(cache=True)
def _unwind(
    m,
    eu,
    ev,
    alive,
    crit,
    comp_of,
    multi,
    n_comp,
    class_start,
    class_edges,
    comp_pair_start,
    comp_pair_list,
    pair_e1,
    pair_v1,
    pair_e2,
    pair_v2,
    pairing_class,
    end_pair_idx,
    end_pair_side,
    pairing_to_next,
    kind,
    ref,
    dir_next,
    deleted,
    tprev0,
    tnext0,
    enter0,
):
    """One level of recombination: flips, cycle rotations, edge transfer,
    then reinsertion of deleted trail ends.  Returns this level's dirs
    (1 = stored tail -> head)."""
    n_class = class_start.shape[0] - 1
    dirh = np.full(m, -1, dtype=np.int8)
    flips = np.full(n_comp, -1, dtype=np.int8)
    visited = np.zeros(n_comp, dtype=np.bool_)
    class_done = np.zeros(n_class, dtype=np.bool_)
    queue = np.empty(n_comp, dtype=np.int32)
    ok = True

    for root in range(n_comp):
        if visited[root]:
            continue
        visited[root] = True
        if multi[root]:
            flips[root] = 0
        qh = 0
        qt = 0
        queue[qt] = root
        qt += 1
        while qh < qt:
            node = queue[qh]
            qh += 1
            for pj in range(comp_pair_start[node], comp_pair_start[node + 1]):
                j0 = comp_pair_list[pj]
                ci = pairing_class[j0]
                if class_done[ci]:
                    continue
                class_done[ci] = True
                # anchor: lowest already-flipped multi-vertex component on it;
                # a class meets a component once, so the pairing at the edge
                # end realizing the anchor is the anchor's pairing
                anchor = -1
                ja = -1
                for k in range(class_start[ci], class_start[ci + 1]):
                    x = class_edges[k]
                    for side in range(2):
                        cv = eu[x] if side == 0 else ev[x]
                        cn = comp_of[cv]
                        if multi[cn] and flips[cn] >= 0:
                            if anchor == -1 or cn < anchor:
                                anchor = cn
                                ja = end_pair_idx[2 * x + side]
                if anchor >= 0:
                    if ja < 0:
                        ok = False
                        continue
                    d = dir_next[pairing_to_next[ja]]
                    eff = d ^ flips[anchor]
                    if eff == 1:
                        out_e, out_v = pair_e1[ja], pair_v1[ja]
                    else:
                        out_e, out_v = pair_e2[ja], pair_v2[ja]
                else:
                    out_e = class_edges[class_start[ci]]
                    out_v = eu[out_e]
                cur_e, cur_v = out_e, out_v
                size = class_start[ci + 1] - class_start[ci]
                for _step in range(size):
                    far = eu[cur_e] + ev[cur_e] - cur_v
                    dirh[cur_e] = 1 if eu[cur_e] == cur_v else 0
                    node2 = comp_of[far]
                    end = 0 if eu[cur_e] == far else 1
                    j2 = end_pair_idx[2 * cur_e + end]
                    s2 = end_pair_side[2 * cur_e + end]
                    if s2 == 0:
                        partner, pv = pair_e2[j2], pair_v2[j2]
                    else:
                        partner, pv = pair_e1[j2], pair_v1[j2]
                    if multi[node2]:
                        d2 = dir_next[pairing_to_next[j2]]
                        req = d2 if s2 == 0 else 1 - d2
                        if flips[node2] < 0:
                            flips[node2] = req
                        elif flips[node2] != req:
                            ok = False
                    if not visited[node2]:
                        visited[node2] = True
                        queue[qt] = node2
                        qt += 1
                    cur_e, cur_v = partner, pv
                if cur_e != out_e:
                    ok = False

    m2 = kind.shape[0]
    for ne in range(m2):
        if kind[ne] == 0:
            host = ref[ne]
            f = flips[comp_of[eu[host]]]
            dirh[host] = dir_next[ne] ^ f

    for i in range(deleted.shape[0]):
        e = deleted[i]
        if tprev0[e] != -1 and tnext0[e] != -1:
            ok = False
        nb = tnext0[e] if tprev0[e] == -1 else tprev0[e]
        along_e = 1 if enter0[e] == eu[e] else 0
        forward = True
        if nb >= 0 and dirh[nb] >= 0:
            along_nb = 1 if enter0[nb] == eu[nb] else 0
            forward = dirh[nb] == along_nb
        dirh[e] = along_e if forward else 1 - along_e
    return dirh, ok


@njit(cache=True)
def _bridge_free_connected(n, eu, ev):
    """Connectivity plus bridge-freeness, iterative low-point search."""
    m = eu.shape[0]
    deg = np.zeros(n + 1, dtype=np.int32)
    for e in range(m):
        deg[eu[e] + 1] += 1
        deg[ev[e] + 1] += 1
    start = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        start[i + 1] = start[i] + deg[i + 1]
    cur = start[:n].copy()
    adj_e = np.empty(start[n], dtype=np.int32)
    adj_w = np.empty(start[n], dtype=np.int32)
    for e in range(m):
        u, v = eu[e], ev[e]
        adj_e[cur[u]] = e
        adj_w[cur[u]] = v
        cur[u] += 1
        adj_e[cur[v]] = e
        adj_w[cur[v]] = u
        cur[v] += 1
    disc = np.full(n, -1, dtype=np.int32)
    low = np.zeros(n, dtype=np.int32)
    sv = np.empty(n + 1, dtype=np.int32)
    se = np.empty(n + 1, dtype=np.int32)
    si = np.empty(n + 1, dtype=np.int32)
    timer = 0
    if n == 0:
        return True
    disc[0] = low[0] = 0
    timer = 1
    sv[0] = 0
    se[0] = -1
    si[0] = start[0]
    top = 0
    seen = 1
    while top >= 0:
        v = sv[top]
        via = se[top]
        k = si[top]
        advanced = False
        while k < start[v + 1]:
            e = adj_e[k]
            w = adj_w[k]
            k += 1
            if w == v or e == via:
                if e != via and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                seen += 1
                si[top] = k
                top += 1
                sv[top] = w
                se[top] = e
                si[top] = start[w]
                advanced = True
                break
            if disc[w] < low[v]:
                low[v] = disc[w]
        if advanced:
            continue
        top -= 1
        if top >= 0:
            pv = sv[top]
            if low[v] < low[pv]:
                low[pv] = low[v]
            if low[v] > disc[pv]:
                return False  # bridge
    return seen == n


@njit(cache=True)
def _strong_reach(n, eu, ev, dirs, backward):
    """Count vertices reachable from 0 along the oriented arcs."""
    m = eu.shape[0]
    deg = np.zeros(n + 1, dtype=np.int32)
    for e in range(m):
        src = eu[e] if dirs[e] == 1 else ev[e]
        dst = ev[e] if dirs[e] == 1 else eu[e]
        if backward:
            src, dst = dst, src
        deg[src + 1] += 1
    start = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        start[i + 1] = start[i] + deg[i + 1]
    cur = start[:n].copy()
    heads = np.empty(start[n], dtype=np.int32)
    for e in range(m):
        src = eu[e] if dirs[e] == 1 else ev[e]
        dst = ev[e] if dirs[e] == 1 else eu[e]
        if backward:
            src, dst = dst, src
        heads[cur[src]] = dst
        cur[src] += 1
    seen = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int32)
    seen[0] = True
    stack[0] = 0
    top = 1
    count = 1
    while top > 0:
        top -= 1
        v = stack[top]
        for k in range(start[v], start[v + 1]):
            w = heads[k]
            if not seen[w]:
                seen[w] = True
                count += 1
                stack[top] = w
                top += 1
    return count


# ---------------------------------------------------------------------------
# level orchestration (numpy)


class EngineError(RuntimeError):
    """Internal invariant violated inside the array engine."""


class _Level:
    """Everything one recursion level must remember for its unwind."""

    __slots__ = (
        "m",
        "eu",
        "ev",
        "tprev0",
        "tnext0",
        "enter0",
        "deleted",
        "alive",
        "crit",
        "comp_of",
        "multi",
        "n_comp",
        "class_start",
        "class_edges",
        "comp_pair_start",
        "comp_pair_list",
        "pair_e1",
        "pair_v1",
        "pair_e2",
        "pair_v2",
        "pairing_class",
        "end_pair_idx",
        "end_pair_side",
        "pairing_to_next",
        "kind",
        "ref",
    )


def _advance(n, eu, ev, tprev, tnext, enter, rng, stats, level_no):
    """Run one level: prune to the minimal subgraph, group the two-cut
    classes, contract each multi-vertex component.  Returns the _Level
    record plus the next level's arrays (n2 == 0 when fully decomposed)."""
    m = eu.shape[0]
    interior = (tprev != -1) & (tnext != -1)
    in_tree, interior_ok = _kruskal(n, eu, ev, interior)
    if not interior_ok:
        raise EngineError("trail interiors contain a cycle")
    # levels past the first are disjoint unions, so the result is a forest
    # with one tree per contracted component

    parent_v, parent_e, depth, order = _root_forest(n, eu, ev, in_tree)
    head, pos = _hld(n, parent_v, order)
    removed = _prune(eu, ev, in_tree, parent_v, depth, head, pos, order)
    alive = ~removed
    deleted = np.nonzero(removed)[0].astype(np.int32)

    kept = np.nonzero(alive & ~in_tree)[0].astype(np.int32)
    lab = rng.integers(0, 2**64, size=(kept.shape[0], 2), dtype=np.uint64)
    acc_hi, acc_lo = _fold_labels(n, eu, ev, kept, lab[:, 0], lab[:, 1], order, parent_v)

    key_hi = np.zeros(m, dtype=np.uint64)
    key_lo = np.zeros(m, dtype=np.uint64)
    child = np.nonzero(parent_e >= 0)[0]
    key_hi[parent_e[child]] = acc_hi[child]
    key_lo[parent_e[child]] = acc_lo[child]
    key_hi[kept] = lab[:, 0]
    key_lo[kept] = lab[:, 1]

    crit, cls_of, class_edges, class_start = _group_classes(m, alive, key_hi, key_lo)

    comp_of, n_comp = _components(n, eu, ev, alive, crit)

    # refinement: a component meeting a cut class exactly once cannot host
    # that cycle's visit alone; the two such components per class belong to
    # one 3-edge-connected node (theta-graph hubs), inner cycles first
    ce0 = np.nonzero(crit)[0]
    if ce0.size:
        n_cls = class_start.shape[0] - 1
        iv = np.concatenate([eu[ce0], ev[ce0]]).astype(np.int64)
        ic = np.concatenate([cls_of[ce0], cls_of[ce0]]).astype(np.int64)
        parent = np.arange(n_comp, dtype=np.int64)
        while True:
            while True:
                pp = parent[parent]
                if np.array_equal(pp, parent):
                    break
                parent = pp
            key = parent[comp_of[iv]] * n_cls + ic
            uniq, cnt = np.unique(key, return_counts=True)
            ones = uniq[cnt == 1]
            if ones.size == 0:
                break
            oc = ones // n_cls
            ocl = ones % n_cls
            order = np.argsort(ocl, kind="stable")
            ocl_s = ocl[order]
            oc_s = oc[order]
            bounds = np.nonzero(np.r_[True, ocl_s[1:] != ocl_s[:-1]])[0]
            lens = np.diff(np.r_[bounds, ocl_s.size])
            merged = False
            for bi, ln in zip(bounds, lens):
                if ln != 2:
                    continue
                ra, rb = int(oc_s[bi]), int(oc_s[bi + 1])
                while parent[ra] != ra:
                    ra = int(parent[ra])
                while parent[rb] != rb:
                    rb = int(parent[rb])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
                    merged = True
            if not merged:
                raise EngineError("component refinement stalled")
        while True:
            pp = parent[parent]
            if np.array_equal(pp, parent):
                break
            parent = pp
        # merged roots keep the smallest old id, so dense-ranking root ids
        # preserves the smallest-member-vertex canonical order
        uniq_roots = np.unique(parent[comp_of])
        remap = np.full(n_comp, -1, dtype=np.int32)
        remap[uniq_roots] = np.arange(uniq_roots.size, dtype=np.int32)
        comp_of = remap[parent[comp_of]].astype(np.int32)
        n_comp = int(uniq_roots.size)

    sizes = np.bincount(comp_of, minlength=n_comp)
    multi = sizes >= 2
    if stats is not None:
        table = stats.setdefault("levels", {})
        entry = table.setdefault(level_no, {"vertices": 0, "large_mass": 0})
        entry["vertices"] += int(n)
        entry["large_mass"] += int(sizes[sizes >= _LARGE_COMPONENT].sum())

    # pairings: the two incidences of each (component, class) pair
    ce = np.nonzero(crit)[0].astype(np.int32)
    inc_e = np.concatenate([ce, ce])
    inc_v = np.concatenate([eu[ce], ev[ce]])
    inc_end = np.concatenate(
        [np.zeros(ce.shape[0], dtype=np.int32), np.ones(ce.shape[0], dtype=np.int32)]
    )
    inc_comp = comp_of[inc_v]
    inc_cls = cls_of[inc_e]
    # stable radix passes: by edge id (the two halves are each ascending,
    # so interleaving them is the sorted order), then class, then component
    nce = ce.shape[0]
    by_edge = np.empty(2 * nce, dtype=np.int64)
    by_edge[0::2] = np.arange(nce)
    by_edge[1::2] = np.arange(nce) + nce
    n_cls_r = class_start.shape[0] - 1
    rows = _stable_counting_sort(inc_cls.astype(np.int64), by_edge, n_cls_r)
    rows = _stable_counting_sort(inc_comp.astype(np.int64), rows, n_comp)
    if rows.shape[0] % 2:
        raise EngineError("odd pairing incidence count")
    n_pair = rows.shape[0] // 2
    r0, r1 = rows[0::2], rows[1::2]
    if n_pair and (
        np.any(inc_comp[r0] != inc_comp[r1]) or np.any(inc_cls[r0] != inc_cls[r1])
    ):
        raise EngineError("a component meets a cut class other than twice")
    pair_e1 = inc_e[r0].astype(np.int32)
    pair_v1 = inc_v[r0].astype(np.int32)
    pair_e2 = inc_e[r1].astype(np.int32)
    pair_v2 = inc_v[r1].astype(np.int32)
    pairing_comp = inc_comp[r0].astype(np.int32)
    pairing_class = inc_cls[r0].astype(np.int32)
    end_pair_idx = np.full(2 * m, -1, dtype=np.int32)
    end_pair_side = np.full(2 * m, -1, dtype=np.int32)
    jr = np.repeat(np.arange(n_pair, dtype=np.int32), 2)
    sr = np.tile(np.array([0, 1], dtype=np.int32), n_pair)
    end_pair_idx[2 * inc_e[rows] + inc_end[rows]] = jr
    end_pair_side[2 * inc_e[rows] + inc_end[rows]] = sr
    comp_pair_start = np.cumsum(
        np.bincount(pairing_comp + 1, minlength=n_comp + 1)
    ).astype(np.int32)
    comp_pair_list = np.arange(n_pair, dtype=np.int32)  # already (comp, class) sorted

    # next level vertex numbering: multi components in id order, then vertex id
    keep_v = multi[comp_of]
    kept_v = np.nonzero(keep_v)[0].astype(np.int64)
    vmap_next = np.full(n, -1, dtype=np.int32)
    orderv = _stable_counting_sort(comp_of.astype(np.int64), kept_v, n_comp)
    vmap_next[orderv] = np.arange(orderv.shape[0], dtype=np.int32)
    n2 = orderv.shape[0]

    # next level edges: per component internal edges by id, then new by class
    internal = np.nonzero(alive & ~crit)[0].astype(np.int32)
    if internal.size and not np.all(multi[comp_of[eu[internal]]]):
        raise EngineError("non-cut edge in a singleton component")
    pj = np.nonzero(multi[pairing_comp])[0].astype(np.int32)
    src_comp = np.concatenate([comp_of[eu[internal]], pairing_comp[pj]])
    src_kind = np.concatenate(
        [np.zeros(internal.shape[0], dtype=np.int32), np.ones(pj.shape[0], dtype=np.int32)]
    )
    src_key = np.concatenate([internal, pairing_class[pj]])
    src_ref = np.concatenate([internal, pj])
    # both halves ascend in their own key, and kind splits them already,
    # so identity order doubles as the (key, kind) pre-sort
    eorder = _stable_counting_sort(
        src_comp.astype(np.int64),
        np.arange(src_comp.shape[0], dtype=np.int64),
        n_comp,
    )
    kind = src_kind[eorder].astype(np.int32)
    ref = src_ref[eorder].astype(np.int32)
    m2 = kind.shape[0]
    host_to_next = np.full(m, -1, dtype=np.int32)
    pairing_to_next = np.full(n_pair, -1, dtype=np.int32)
    ids2 = np.arange(m2, dtype=np.int32)
    host_to_next[ref[kind == 0]] = ids2[kind == 0]
    pairing_to_next[ref[kind == 1]] = ids2[kind == 1]

    eu2 = np.empty(m2, dtype=np.int32)
    ev2 = np.empty(m2, dtype=np.int32)
    hmask = kind == 0
    eu2[hmask] = vmap_next[eu[ref[hmask]]]
    ev2[hmask] = vmap_next[ev[ref[hmask]]]
    eu2[~hmask] = vmap_next[pair_v1[ref[~hmask]]]
    ev2[~hmask] = vmap_next[pair_v2[ref[~hmask]]]

    # trails over the pruned graph, then stitched across the contractions
    tprevH = tprev.copy()
    tnextH = tnext.copy()
    enterH = enter.copy()
    dp = tprevH[deleted]
    dn = tnextH[deleted]
    if np.any((dp != -1) & (dn != -1)):
        raise EngineError("pruned an interior trail edge")
    tnextH[dp[dp != -1]] = -1
    tprevH[dn[dn != -1]] = -1
    tprevH[deleted] = -1
    tnextH[deleted] = -1

    conn_edge, conn_side, port_v = _build_ports(
        m2,
        kind,
        ref,
        eu,
        ev,
        tprevH,
        tnextH,
        enterH,
        crit,
        end_pair_idx,
        end_pair_side,
        pair_e1,
        pair_v1,
        pair_e2,
        pair_v2,
        pairing_to_next,
        host_to_next,
        vmap_next,
    )
    tprev2, tnext2, enter2 = _stitch(m2, conn_edge, conn_side, port_v)

    rec = _Level()
    rec.m = m
    rec.eu, rec.ev = eu, ev
    rec.tprev0, rec.tnext0, rec.enter0 = tprev, tnext, enter
    rec.deleted = deleted
    rec.alive = alive
    rec.crit = crit
    rec.comp_of = comp_of
    rec.multi = multi
    rec.n_comp = n_comp
    rec.class_start = class_start
    rec.class_edges = class_edges
    rec.comp_pair_start = comp_pair_start
    rec.comp_pair_list = comp_pair_list
    rec.pair_e1, rec.pair_v1 = pair_e1, pair_v1
    rec.pair_e2, rec.pair_v2 = pair_e2, pair_v2
    rec.pairing_class = pairing_class
    rec.end_pair_idx = end_pair_idx
    rec.end_pair_side = end_pair_side
    rec.pairing_to_next = pairing_to_next
    rec.kind, rec.ref = kind, ref
    return rec, n2, eu2, ev2, tprev2, tnext2, enter2


def solve_cubic_arrays(n, eu, ev, tprev, tnext, enter, stats=None):
    """Orient a cubic, loop-free, two-edge-connected level graph given as
    arrays.  Returns dirs (1 = tail to head, 0 = reversed) or None when the
    graph is not two-edge-connected."""
    eu = np.ascontiguousarray(eu, dtype=np.int32)
    ev = np.ascontiguousarray(ev, dtype=np.int32)
    tprev = np.ascontiguousarray(tprev, dtype=np.int32)
    tnext = np.ascontiguousarray(tnext, dtype=np.int32)
    enter = np.ascontiguousarray(enter, dtype=np.int32)
    if not _bridge_free_connected(n, eu, ev):
        return None
    rng = np.random.default_rng(_LABEL_SEED)
    levels = []
    level_no = 1
    while n > 0:
        rec, n, eu, ev, tprev, tnext, enter = _advance(
            n, eu, ev, tprev, tnext, enter, rng, stats, level_no
        )
        levels.append(rec)
        level_no += 1
    dirs = np.empty(0, dtype=np.int8)
    for rec in reversed(levels):
        dirs, ok = _unwind(
            rec.m,
            rec.eu,
            rec.ev,
            rec.alive,
            rec.crit,
            rec.comp_of,
            rec.multi,
            rec.n_comp,
            rec.class_start,
            rec.class_edges,
            rec.comp_pair_start,
            rec.comp_pair_list,
            rec.pair_e1,
            rec.pair_v1,
            rec.pair_e2,
            rec.pair_v2,
            rec.pairing_class,
            rec.end_pair_idx,
            rec.end_pair_side,
            rec.pairing_to_next,
            rec.kind,
            rec.ref,
            dirs,
            rec.deleted,
            rec.tprev0,
            rec.tnext0,
            rec.enter0,
        )
        if not ok:
            raise EngineError("inconsistent flip propagation")
        if np.any(dirs < 0):
            raise EngineError("unassigned edge after unwind")
    if stats is not None:
        stats["depth"] = max(stats.get("depth", 0), len(levels))
    return dirs


def graph_to_arrays(g: MultiGraph, p: TrailPartition):
    """Flatten a loop-free graph and its trails into engine arrays."""
    m = g.num_edges_ever
    eu = np.empty(m, dtype=np.int32)
    ev = np.empty(m, dtype=np.int32)
    for e in range(m):
        rec = g.edge(e)
        eu[e], ev[e] = rec.tail, rec.head
    tprev = np.full(m, -1, dtype=np.int32)
    tnext = np.full(m, -1, dtype=np.int32)
    enter = np.full(m, -1, dtype=np.int32)
    for t in p.trails:
        for i, e in enumerate(t.edges):
            enter[e] = t.walk[i]
            if i > 0:
                tprev[e] = t.edges[i - 1]
            if i + 1 < len(t.edges):
                tnext[e] = t.edges[i + 1]
    return eu, ev, tprev, tnext, enter


def solve_cubic_graph(g: MultiGraph, p: TrailPartition, stats=None):
    """Array-engine counterpart of the object pipeline for cubic inputs."""
    eu, ev, tprev, tnext, enter = graph_to_arrays(g, p)
    dirs = solve_cubic_arrays(g.n, eu, ev, tprev, tnext, enter, stats)
    if dirs is None:
        return None
    o = Orientation()
    for e in range(dirs.shape[0]):
        o.assign(e, Direction.FORWARD if dirs[e] == 1 else Direction.REVERSED)
    return o


# ---------------------------------------------------------------------------
# array-native instance generation and checking (for large benchmarks)


def random_cubic_arrays(n, seed):
    """Random simple-ish cubic multigraph as arrays: configuration model,
    resampled until loop-free, connected and bridgeless."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even vertex count of at least 4")
    for attempt in range(200):
        rng = np.random.default_rng(np.uint64(1_000_003) * np.uint64(seed) + np.uint64(attempt))
        stubs = np.repeat(np.arange(n, dtype=np.int32), 3)
        rng.shuffle(stubs)
        eu = stubs[0::2].copy()
        ev = stubs[1::2].copy()
        if np.any(eu == ev):
            continue
        if _bridge_free_connected(n, eu, ev):
            return eu, ev
    raise RuntimeError("failed to sample a bridgeless cubic graph")


@njit(cache=True)
def _random_trails_kernel(n, eu, ev, picks):
    """Random maximal trail partition over arrays.

    Edges are visited in a shuffled order; each seed edge grows forward then
    backward through unused incident edges, choices drawn from the supplied
    random stream."""
    m = eu.shape[0]
    deg = np.zeros(n + 1, dtype=np.int32)
    for e in range(m):
        deg[eu[e] + 1] += 1
        deg[ev[e] + 1] += 1
    start = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        start[i + 1] = start[i] + deg[i + 1]
    cur = start[:n].copy()
    adj_e = np.empty(start[n], dtype=np.int32)
    adj_w = np.empty(start[n], dtype=np.int32)
    for e in range(m):
        u, v = eu[e], ev[e]
        adj_e[cur[u]] = e
        adj_w[cur[u]] = v
        cur[u] += 1
        adj_e[cur[v]] = e
        adj_w[cur[v]] = u
        cur[v] += 1
    used = np.zeros(m, dtype=np.bool_)
    tprev = np.full(m, -1, dtype=np.int32)
    tnext = np.full(m, -1, dtype=np.int32)
    enter = np.full(m, -1, dtype=np.int32)
    seed_order = picks[:m].astype(np.int64) % np.int64(m)
    # turn the raw stream into a visiting order by stable argsort of keys
    order = np.argsort(seed_order * np.int64(m) + np.arange(m, dtype=np.int64))
    pk = m
    cands = np.empty(8, dtype=np.int32)
    for oi in range(m):
        e0 = np.int32(order[oi])
        if used[e0]:
            continue
        used[e0] = True
        enter[e0] = eu[e0]
        for direction in range(2):
            cur_e = e0
            tip = ev[e0] if direction == 0 else eu[e0]
            while True:
                nc = 0
                for k in range(start[tip], start[tip + 1]):
                    x = adj_e[k]
                    if not used[x] and nc < 8:
                        cands[nc] = x
                        nc += 1
                if nc == 0:
                    break
                chosen = cands[np.int64(picks[pk % picks.shape[0]]) % np.int64(nc)]
                pk += 1
                used[chosen] = True
                far = eu[chosen] + ev[chosen] - tip
                if direction == 0:
                    tnext[cur_e] = chosen
                    tprev[chosen] = cur_e
                    enter[chosen] = tip
                else:
                    tprev[cur_e] = chosen
                    tnext[chosen] = cur_e
                    enter[cur_e] = tip
                    enter[chosen] = far
                cur_e = chosen
                tip = far
    return tprev, tnext, enter


def random_trails_arrays(n, eu, ev, seed):
    """Random maximal trail partition for an array graph."""
    m = eu.shape[0]
    rng = np.random.default_rng(np.uint64(7_654_321) * np.uint64(seed) + np.uint64(11))
    picks = rng.integers(0, 2**62, size=2 * m + 16, dtype=np.int64)
    return _random_trails_kernel(n, eu, ev, picks)


def check_arrays(n, eu, ev, tprev, tnext, enter, dirs):
    """Independent array-level result check: every trail consistently
    oriented and the digraph strongly connected."""
    m = eu.shape[0]
    heads = np.nonzero(tprev == -1)[0]
    for h in heads:
        d0 = None
        e = int(h)
        while e != -1:
            along = 1 if enter[e] == eu[e] else 0
            d = 1 if dirs[e] == along else 0
            if d0 is None:
                d0 = d
            elif d != d0:
                return False
            e = int(tnext[e])
    if _strong_reach(n, eu, ev, dirs, False) != n:
        return False
    return _strong_reach(n, eu, ev, dirs, True) == n


def warmup():
    """Trigger compilation of every kernel on a toy instance."""
    n = 4
    eu = np.array([0, 0, 0, 1, 1, 2], dtype=np.int32)
    ev = np.array([1, 2, 3, 2, 3, 3], dtype=np.int32)
    tprev, tnext, enter = random_trails_arrays(n, eu, ev, 1)
    dirs = solve_cubic_arrays(n, eu, ev, tprev, tnext, enter, {})
    assert dirs is not None and check_arrays(n, eu, ev, tprev, tnext, enter, dirs)
