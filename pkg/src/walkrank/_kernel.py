"""Jitted kernels for the stored-walk engine.

All kernels operate on a flat array arena so that nothing here allocates
per walk or per occurrence after initialization:

  graph     adj  int32[n, width]   out-neighbors of u in arrival order
            deg  int32[n]          out-degrees (only deg[u] slots valid)

  walks     offsets int64[W + 1]   walk w owns steps[offsets[w]:offsets[w+1]]
            steps   int32[...]     node at position 0..L (length L + 1)
            budgets int64[W]
            sources int32[W]

  index     one pool entry per indexed occurrence, i.e. per (walk,
            position) pair with position < budget.  Entries live in
            doubly linked lists, one list per node, and eptr (parallel
            to steps, -1 at terminal positions) maps a position to its
            entry.  Walk length never changes, so the pool is allocated
            once and entries only ever move between lists.

Invariant the arrival kernel depends on: within any node list, the
entries of a given walk appear in increasing position order.  Appending
at the tail preserves this because positions are always relinked in
increasing order (both at build time and during suffix regeneration),
so regeneration must relink every regenerated position even when its
node did not change.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _link_tail(heads, tails, nxt, prv, node, eid):
    t = tails[node]
    prv[eid] = t
    nxt[eid] = -1
    if t == -1:
        heads[node] = eid
    else:
        nxt[t] = eid
    tails[node] = eid


@njit(cache=True, inline="always")
def _unlink(heads, tails, nxt, prv, node, eid):
    p = prv[eid]
    q = nxt[eid]
    if p == -1:
        heads[node] = q
    else:
        nxt[p] = q
    if q == -1:
        tails[node] = p
    else:
        prv[q] = p


@njit(cache=True)
def build_walks(adj, deg, sources, budgets, offsets, steps, eptr,
                occ_walk, occ_pos, nxt, prv, heads, tails, rng):
    """Sample every walk on the current graph and build the index.

    Position p holds the node after p transitions; a node with no
    out-edges sends the walk back to its own source (consuming one
    transition).  Returns the number of index entries created.
    """
    eid = 0
    for w in range(len(sources)):
        base = offsets[w]
        budget = budgets[w]
        s = sources[w]
        steps[base] = s
        x = s
        for p in range(budget):
            occ_walk[eid] = w
            occ_pos[eid] = p
            _link_tail(heads, tails, nxt, prv, x, eid)
            eptr[base + p] = eid
            eid += 1
            dx = deg[x]
            if dx > 0:
                x = adj[x, rng.integers(0, dx)]
            else:
                x = s
            steps[base + p + 1] = x
    return eid


@njit(cache=True)
def edge_arrival(adj, deg, u, v, sources, budgets, offsets, steps, eptr,
                 occ_walk, occ_pos, nxt, prv, heads, tails,
                 walk_epoch, event_id, track_lo, track_hi, rng):
    """Revise stored walks after out-edge (u, v) was appended to adj.

    Every indexed occurrence of u present before this call gets a
    Bernoulli(1/deg(u)) coin in increasing position order per walk; at a
    walk's first success the next step is forced to v and the remaining
    suffix is resampled on the current graph, after which the walk's
    other occurrences are skipped.  Occurrences created by the
    resampling itself are never flipped (walk_epoch marks the walk done
    for this event, and the pre-call snapshot bounds the scan).

    Returns (coin_flips, reroute_events, steps_regenerated,
    tracked_reroutes) where tracked counts reroutes of walks whose
    source lies in [track_lo, track_hi).
    """
    count = 0
    e = heads[u]
    while e != -1:
        count += 1
        e = nxt[e]
    snap_walk = np.empty(count, np.int64)
    snap_pos = np.empty(count, np.int64)
    e = heads[u]
    i = 0
    while e != -1:
        snap_walk[i] = occ_walk[e]
        snap_pos[i] = occ_pos[e]
        i += 1
        e = nxt[e]

    inv_d = 1.0 / deg[u]
    flips = 0
    reroutes = 0
    regenerated = 0
    tracked = 0
    for i in range(count):
        w = snap_walk[i]
        if walk_epoch[w] == event_id:
            continue
        flips += 1
        if rng.random() >= inv_d:
            continue
        walk_epoch[w] = event_id
        reroutes += 1
        s = sources[w]
        if track_lo <= s < track_hi:
            tracked += 1
        base = offsets[w]
        budget = budgets[w]
        p = snap_pos[i]
        regenerated += budget - p
        x = v
        for q in range(p + 1, budget + 1):
            old = steps[base + q]
            steps[base + q] = x
            if q < budget:
                # relink even when old == x: tail order is load-bearing
                eid = eptr[base + q]
                _unlink(heads, tails, nxt, prv, old, eid)
                _link_tail(heads, tails, nxt, prv, x, eid)
                dx = deg[x]
                if dx > 0:
                    x = adj[x, rng.integers(0, dx)]
                else:
                    x = s
    return flips, reroutes, regenerated, tracked


@njit(cache=True)
def replay_single_walk(n, source, edges_u, edges_v, cum_weights, trials, rng):
    """Distribution check driver: maintain one walk through a replay.

    Repeats `trials` times: sample a budget from the discrete law given
    by cumulative weights cum_weights[0..Lmax], start the walk on the
    empty graph, then feed every edge through edge_arrival.  The final
    step sequence is folded into a base-(n+1) key (positions past the
    budget encode as the sentinel digit n) and tallied.

    Uses the exact same kernels as the production path on a one-walk
    arena, so the tally is a sample from the maintained-walk law.
    """
    lmax = len(cum_weights) - 1
    keyspace = (n + 1) ** (lmax + 1)
    counts = np.zeros(keyspace, np.int64)

    adj = np.zeros((n, n), np.int32)
    deg = np.zeros(n, np.int32)
    heads = np.full(n, -1, np.int64)
    tails = np.full(n, -1, np.int64)
    steps = np.zeros(lmax + 1, np.int32)
    eptr = np.full(lmax + 1, -1, np.int64)
    occ_walk = np.zeros(max(lmax, 1), np.int64)
    occ_pos = np.zeros(max(lmax, 1), np.int64)
    nxt = np.full(max(lmax, 1), -1, np.int64)
    prv = np.full(max(lmax, 1), -1, np.int64)
    offsets = np.zeros(2, np.int64)
    budgets = np.zeros(1, np.int64)
    sources = np.zeros(1, np.int32)
    walk_epoch = np.full(1, -1, np.int64)
    sources[0] = source

    total = cum_weights[lmax]
    m = len(edges_u)
    event = 0
    for _ in range(trials):
        deg[:] = 0
        for x in range(n):
            heads[x] = -1
            tails[x] = -1
        r = rng.random() * total
        budget = 0
        while cum_weights[budget] <= r:
            budget += 1
        budgets[0] = budget
        offsets[1] = budget + 1
        build_walks(adj, deg, sources, budgets, offsets, steps, eptr,
                    occ_walk, occ_pos, nxt, prv, heads, tails, rng)
        for k in range(m):
            u = edges_u[k]
            v = edges_v[k]
            adj[u, deg[u]] = v
            deg[u] += 1
            event += 1
            edge_arrival(adj, deg, u, v, sources, budgets, offsets, steps,
                         eptr, occ_walk, occ_pos, nxt, prv, heads, tails,
                         walk_epoch, event, 0, 0, rng)
        key = 0
        mult = 1
        for i in range(lmax + 1):
            digit = steps[i] if i <= budget else n
            key += digit * mult
            mult *= n + 1
        counts[key] += 1
    return counts
