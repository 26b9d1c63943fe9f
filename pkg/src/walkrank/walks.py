"""Stored-walk engine: R walks per node, revised as edges arrive.

Each walk starts at its source with a budget drawn once from the
geometric law P(budget = k) = epsilon * (1 - epsilon)**k, k >= 0, which
makes P(budget >= i) = (1 - epsilon)**i.  A walk records budget + 1
nodes (positions 0..budget).  Transitions go to a uniformly random
out-neighbor; a node with no out-edges sends the walk back to its own
source, and that reset still consumes one budget step.

When out-edge (u, v) arrives, every stored occurrence of u at a
position below the walk's budget is offered the new edge with
probability 1 / outdegree(u), scanned in increasing position order per
walk; at the first success the next step becomes v and the rest of the
walk is resampled on the current graph (the walk's later occurrences
are then skipped).  This keeps every walk distributed exactly as a
fresh walk on the current graph, which is what makes visit counts a
valid PageRank estimator at all times.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Sequence

import numpy as np

from . import _kernel
from .graph import DynGraph, GraphError


class MissingEdgeError(GraphError):
    """on_edge_arrival was called for an edge the graph does not hold."""


def make_rng(seed: int) -> np.random.Generator:
    """Single PCG64 stream; all sampling for a run goes through one."""
    return np.random.default_rng(seed)


def sample_budget(epsilon: float, rng: np.random.Generator) -> int:
    """Geometric number of transitions: P(k) = epsilon*(1-epsilon)**k."""
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    return int(rng.geometric(epsilon)) - 1


@dataclass
class Walk:
    walk_id: int
    source: int
    budget: int
    steps: list[int]


@dataclass
class UpdateStats:
    """Work counters for one arrival (or accumulated over many)."""

    reroute_events: int = 0
    steps_regenerated: int = 0
    coin_flips: int = 0
    tracked_reroutes: int = 0

    def add(self, other: "UpdateStats") -> None:
        self.reroute_events += other.reroute_events
        self.steps_regenerated += other.steps_regenerated
        self.coin_flips += other.coin_flips
        self.tracked_reroutes += other.tracked_reroutes


def generate_walk(g: DynGraph, source: int, budget: int,
                  rng: np.random.Generator) -> list[int]:
    """Reference sampler for a single fresh walk (pure Python)."""
    g._check_node(source)
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    steps = [source]
    x = source
    for _ in range(budget):
        d = g.outdegree(x)
        x = g.out_neighbor(x, int(rng.integers(0, d))) if d > 0 else source
        steps.append(x)
    return steps


@dataclass
class WalkStore:
    """Arena of stored walks plus the node -> occurrences index.

    Construct via init_store (R walks per node) or store_from_walks
    (explicit sources and budgets, mostly for tests).  Arrays are shared
    with the jitted kernels; treat them as read-only from outside.
    """

    n: int
    R: int
    epsilon: float
    sources: np.ndarray
    budgets: np.ndarray
    offsets: np.ndarray
    steps: np.ndarray
    eptr: np.ndarray
    occ_walk: np.ndarray
    occ_pos: np.ndarray
    occ_next: np.ndarray
    occ_prev: np.ndarray
    heads: np.ndarray
    tails: np.ndarray
    walk_epoch: np.ndarray
    event_id: int = 0
    stats: UpdateStats = field(default_factory=UpdateStats)

    @property
    def walk_count(self) -> int:
        return len(self.sources)

    def walk(self, w: int) -> Walk:
        lo, hi = int(self.offsets[w]), int(self.offsets[w + 1])
        return Walk(w, int(self.sources[w]), int(self.budgets[w]),
                    [int(x) for x in self.steps[lo:hi]])

    def steps_of(self, w: int) -> np.ndarray:
        return self.steps[self.offsets[w]:self.offsets[w + 1]].copy()

    def occurrences(self, u: int) -> list[tuple[int, int]]:
        """(walk_id, position) pairs indexed at u, in list order."""
        out = []
        e = int(self.heads[u])
        while e != -1:
            out.append((int(self.occ_walk[e]), int(self.occ_pos[e])))
            e = int(self.occ_next[e])
        return out

    def dump(self, fh: IO[str]) -> None:
        """One line per walk: "walk_id source budget: v0 v1 ... vL"."""
        for w in range(self.walk_count):
            walk = self.walk(w)
            seq = " ".join(str(x) for x in walk.steps)
            fh.write(f"{walk.walk_id} {walk.source} {walk.budget}: {seq}\n")


def store_from_walks(g: DynGraph, sources: Sequence[int],
                     budgets: Sequence[int], epsilon: float,
                     rng: np.random.Generator) -> WalkStore:
    """Build a store with explicit per-walk sources and budgets."""
    src = np.asarray(sources, dtype=np.int32)
    bud = np.asarray(budgets, dtype=np.int64)
    if len(src) != len(bud):
        raise ValueError("sources and budgets must have equal length")
    if len(src) and (src.min() < 0 or src.max() >= g.n):
        raise ValueError("walk source out of node range")
    if len(bud) and bud.min() < 0:
        raise ValueError("budgets must be >= 0")
    w = len(src)
    offsets = np.zeros(w + 1, dtype=np.int64)
    np.cumsum(bud + 1, out=offsets[1:])
    steps = np.empty(int(offsets[-1]), dtype=np.int32)
    eptr = np.full(int(offsets[-1]), -1, dtype=np.int64)
    pool = int(bud.sum())
    store = WalkStore(
        n=g.n, R=0, epsilon=epsilon,
        sources=src, budgets=bud, offsets=offsets, steps=steps, eptr=eptr,
        occ_walk=np.empty(pool, dtype=np.int64),
        occ_pos=np.empty(pool, dtype=np.int64),
        occ_next=np.full(pool, -1, dtype=np.int64),
        occ_prev=np.full(pool, -1, dtype=np.int64),
        heads=np.full(g.n, -1, dtype=np.int64),
        tails=np.full(g.n, -1, dtype=np.int64),
        walk_epoch=np.full(w, -1, dtype=np.int64),
    )
    made = _kernel.build_walks(
        g.adj, g.deg, store.sources, store.budgets, store.offsets,
        store.steps, store.eptr, store.occ_walk, store.occ_pos,
        store.occ_next, store.occ_prev, store.heads, store.tails, rng)
    assert made == pool
    return store


def init_store(g: DynGraph, R: int, epsilon: float,
               rng: np.random.Generator) -> WalkStore:
    """R fresh walks per node with independently sampled budgets."""
    if R < 1:
        raise ValueError(f"R must be >= 1, got {R}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    sources = np.repeat(np.arange(g.n, dtype=np.int32), R)
    budgets = rng.geometric(epsilon, size=g.n * R).astype(np.int64) - 1
    store = store_from_walks(g, sources, budgets, epsilon, rng)
    store.R = R
    return store


def on_edge_arrival(store: WalkStore, g: DynGraph, u: int, v: int,
                    rng: np.random.Generator,
                    tracked_sources: tuple[int, int] = (0, 0)) -> UpdateStats:
    """Revise walks after (u, v) was added to g; returns this arrival's
    counters (also accumulated into store.stats).

    tracked_sources is a half-open source-id interval; reroutes of walks
    sourced there are counted separately (the experiment harness uses it
    to isolate the designated top row).  The edge must already be in g.
    """
    if not g.has_edge(u, v):
        raise MissingEdgeError(
            f"edge ({u}, {v}) must be added to the graph before arrival")
    store.event_id += 1
    flips, reroutes, regenerated, tracked = _kernel.edge_arrival(
        g.adj, g.deg, u, v, store.sources, store.budgets, store.offsets,
        store.steps, store.eptr, store.occ_walk, store.occ_pos,
        store.occ_next, store.occ_prev, store.heads, store.tails,
        store.walk_epoch, store.event_id,
        tracked_sources[0], tracked_sources[1], rng)
    delta = UpdateStats(int(reroutes), int(regenerated), int(flips),
                        int(tracked))
    store.stats.add(delta)
    return delta


def visit_counts(store: WalkStore) -> np.ndarray:
    """Number of stored positions at each node (all walks, all positions)."""
    return np.bincount(store.steps, minlength=store.n).astype(np.int64)
