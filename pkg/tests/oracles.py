"""Independent reference computations for the test suite.

Everything here is deliberately naive (dict-based enumeration, full
rebuilds) so it cannot share bugs with the array/linked-list engine it
checks.
"""

from __future__ import annotations

import numpy as np

from walkrank.graph import DynGraph
from walkrank.walks import WalkStore


def fresh_walk_distribution(adj_lists: list[list[int]], source: int,
                            budget: int) -> dict[tuple[int, ...], float]:
    """Exact law of generate_walk on a small graph: sequence -> prob."""
    dist = {(source,): 1.0}
    for _ in range(budget):
        nxt: dict[tuple[int, ...], float] = {}
        for seq, p in dist.items():
            outs = adj_lists[seq[-1]]
            if outs:
                for y in outs:
                    key = seq + (y,)
                    nxt[key] = nxt.get(key, 0.0) + p / len(outs)
            else:
                key = seq + (source,)
                nxt[key] = nxt.get(key, 0.0) + p
        dist = nxt
    return dist


def encode_steps(seq: tuple[int, ...], n: int, lmax: int) -> int:
    """Base-(n+1) key matching _kernel.replay_single_walk's encoding."""
    key = 0
    mult = 1
    for i in range(lmax + 1):
        digit = seq[i] if i < len(seq) else n
        key += digit * mult
        mult *= n + 1
    return key


def mixture_distribution(adj_lists: list[list[int]], source: int,
                         epsilon: float, lmax: int) -> dict[int, float]:
    """Budget-conditioned (L <= lmax) fresh-walk law over encoded keys."""
    n = len(adj_lists)
    beta = 1.0 - epsilon
    weights = np.array([beta ** k for k in range(lmax + 1)])
    weights /= weights.sum()
    probs: dict[int, float] = {}
    for budget in range(lmax + 1):
        for seq, p in fresh_walk_distribution(adj_lists, source,
                                              budget).items():
            key = encode_steps(seq, n, lmax)
            probs[key] = probs.get(key, 0.0) + weights[budget] * p
    return probs


def sampled_tv(counts: np.ndarray, exact: dict[int, float],
               trials: int) -> float:
    """Total variation between a tally over encoded keys and an exact law."""
    tv = 0.0
    seen = set(exact)
    seen.update(int(k) for k in np.nonzero(counts)[0])
    for key in seen:
        tv += abs(counts[key] / trials - exact.get(key, 0.0))
    return 0.5 * tv


def check_invariants(g: DynGraph, store: WalkStore) -> None:
    """Assert every engine invariant by full rebuild from walk contents."""
    # length preservation: arena never reshapes, every walk keeps budget+1
    assert int(store.offsets[-1]) == len(store.steps)
    for w in range(store.walk_count):
        lo, hi = int(store.offsets[w]), int(store.offsets[w + 1])
        assert hi - lo == int(store.budgets[w]) + 1
        assert int(store.steps[lo]) == int(store.sources[w])

    # step validity: graph edge now, or reset to this walk's source
    for w in range(store.walk_count):
        seq = store.steps[int(store.offsets[w]):int(store.offsets[w + 1])]
        src = int(store.sources[w])
        for a, b in zip(seq[:-1], seq[1:]):
            assert g.has_edge(int(a), int(b)) or int(b) == src, \
                f"walk {w}: transition {a}->{b} invalid (source {src})"

    # index consistency: per-node multisets match a full rebuild, and
    # each walk's positions appear in increasing order within a list
    expected: dict[int, list[tuple[int, int]]] = {u: [] for u in range(store.n)}
    for w in range(store.walk_count):
        lo = int(store.offsets[w])
        for p in range(int(store.budgets[w])):
            expected[int(store.steps[lo + p])].append((w, p))
    for u in range(store.n):
        got = store.occurrences(u)
        assert sorted(got) == sorted(expected[u]), f"index mismatch at {u}"
        last_pos: dict[int, int] = {}
        for w, p in got:
            assert last_pos.get(w, -1) < p, \
                f"positions of walk {w} out of order in list of node {u}"
            last_pos[w] = p

    # eptr points at the entry recording exactly (w, p)
    for w in range(store.walk_count):
        lo = int(store.offsets[w])
        for p in range(int(store.budgets[w])):
            e = int(store.eptr[lo + p])
            assert int(store.occ_walk[e]) == w
            assert int(store.occ_pos[e]) == p


def random_arrival_case(rng: np.random.Generator, n_max: int = 50,
                        m_max: int = 60) -> tuple[int, list[tuple[int, int]]]:
    """A random node count and duplicate-free random edge sequence."""
    n = int(rng.integers(2, n_max + 1))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    m = int(rng.integers(0, min(m_max, len(pairs)) + 1))
    chosen = rng.choice(len(pairs), size=m, replace=False)
    return n, [pairs[int(k)] for k in chosen]
