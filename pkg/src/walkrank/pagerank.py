"""PageRank estimation from stored walks, plus an exact expectation oracle.

The estimator is plain visit frequency: every stored position (including
position 0 and the terminal position) counts one visit, and scores are
counts normalized to sum to 1.  Because a walk occupies position t with
probability (1 - epsilon)**t, the expected frequency equals the
epsilon-teleport PageRank with uniform source mass, which the truncated
power iteration in expected_visits computes exactly (dangling nodes
return to the walk's own source, matching the engine).
"""

from __future__ import annotations

from typing import IO

import numpy as np

from .graph import DynGraph
from .walks import WalkStore, visit_counts


def expected_visits(g: DynGraph, epsilon: float, source: int,
                    tail_tol: float = 1e-12) -> np.ndarray:
    """Expected visit counts of one stored walk from `source`.

    Sums (1 - epsilon)**t * q_t over t, where q_t is the t-step
    occupancy of the source-reset chain, truncated once the survival
    weight drops below tail_tol.  Exact up to the truncation, intended
    as a small-graph oracle (dense O(n) work per step).
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    g._check_node(source)
    beta = 1.0 - epsilon
    q = np.zeros(g.n)
    q[source] = 1.0
    counts = np.zeros(g.n)
    weight = 1.0
    while weight >= tail_tol:
        counts += weight * q
        nxt = np.zeros(g.n)
        for u in range(g.n):
            mass = q[u]
            if mass == 0.0:
                continue
            d = int(g.deg[u])
            if d > 0:
                nxt[g.adj[u, :d]] += mass / d
            else:
                nxt[source] += mass
        q = nxt
        weight *= beta
    return counts


def aggregate_oracle(g: DynGraph, epsilon: float,
                     tail_tol: float = 1e-12) -> np.ndarray:
    """Exact expectation of the estimator: normalized mean of the
    per-source expected visit counts over all sources."""
    totals = np.zeros(g.n)
    for s in range(g.n):
        totals += expected_visits(g, epsilon, s, tail_tol)
    return totals / totals.sum()


def estimate(store: WalkStore) -> np.ndarray:
    """Visit-frequency PageRank estimate (sums to 1)."""
    counts = visit_counts(store)
    return counts / counts.sum()


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def write_scores_csv(scores: np.ndarray, fh: IO[str]) -> None:
    fh.write("node,score\n")
    for node, score in enumerate(scores):
        fh.write(f"{node},{score:.10g}\n")
