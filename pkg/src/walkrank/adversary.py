"""Arrival-order constructions that maximize stored-walk revision work.

Both families attach a "top row" of N walk sources to the root of a
tree and then deliver the tree edges deepest-first, so that every edge
at tree depth i arrives while the walks still sit on the shorter
prefix, forcing repeated suffix regeneration.  Node ids: top-row
sources occupy [0, N), tree node t (1-based, heap order) gets id
N - 1 + t, so the root is always id N.

binary  N = 2**h top nodes, balanced binary tree on N - 1 nodes
        (children of t are 2t and 2t + 1); n = 2N - 1, m = 2N - 2.
dary    N top nodes, complete d-ary tree on N nodes filled level by
        level (children of t are d*(t-1) + 1 + j, j = 1..d);
        n = 2N, m = 2N - 1.

Arrival order: all N top edges (i -> root) first, then tree edges in
depth-first preorder, emitting the edge to a child and finishing that
child's whole subtree before the next sibling edge.  Each edge carries
a row label: -1 for top edges, the parent's depth for tree edges (the
root's out-edges are row 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO

import numpy as np


@dataclass(frozen=True)
class FamilyParams:
    """Construction parameters used by sweeps and row verification."""

    family: str
    N: int
    d: int
    epsilon: float

    def __post_init__(self):
        if self.family not in ("binary", "dary"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "binary":
            if self.d != 2:
                raise ValueError("binary family has d=2")
            if self.N < 2 or not _is_power_of_two(self.N):
                raise ValueError("binary family needs N = 2**h, h >= 1")
        else:
            if self.N < 1 or self.d < 2:
                raise ValueError("dary family needs N >= 1 and d >= 2")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")


@dataclass
class ArrivalScript:
    """An edge arrival sequence over a fixed node set.

    rows[k] labels edges[k]: -1 for top edges, tree depth of the parent
    endpoint otherwise.  family/d/N describe the generating family and
    are empty/0 for ad-hoc scripts.
    """

    n: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    rows: list[int] = field(default_factory=list)
    family: str = ""
    d: int = 0
    N: int = 0

    def __post_init__(self):
        if len(self.rows) != len(self.edges):
            raise ValueError("rows must label every edge")

    @property
    def m(self) -> int:
        return len(self.edges)

    def top_range(self) -> tuple[int, int]:
        """Half-open id interval of the top-row sources ((0, 0) if none)."""
        if self.family in ("binary", "dary"):
            return (0, self.N)
        return (0, 0)


def _is_power_of_two(x: int) -> bool:
    return x >= 1 and (x & (x - 1)) == 0


def build_binary(N: int) -> ArrivalScript:
    """Top row of N = 2**h sources over a balanced binary tree."""
    if N < 2 or not _is_power_of_two(N):
        raise ValueError(f"binary family needs N = 2**h with h >= 1, got {N}")
    last = N - 1  # tree nodes are 1..N-1 in heap order
    node = lambda t: N - 1 + t
    edges = [(i, node(1)) for i in range(N)]
    rows = [-1] * N

    def emit(t: int) -> None:
        depth = t.bit_length() - 1
        for c in (2 * t, 2 * t + 1):
            if c <= last:
                edges.append((node(t), node(c)))
                rows.append(depth)
                emit(c)

    emit(1)
    return ArrivalScript(n=2 * N - 1, edges=edges, rows=rows,
                         family="binary", d=2, N=N)


def build_dary(N: int, d: int) -> ArrivalScript:
    """Top row of N sources over a complete d-ary tree on N nodes."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    node = lambda t: N - 1 + t  # tree nodes are 1..N, level-filled
    edges = [(i, node(1)) for i in range(N)]
    rows = [-1] * N

    def emit(t: int, depth: int) -> None:
        for j in range(1, d + 1):
            c = d * (t - 1) + 1 + j
            if c <= N:
                edges.append((node(t), node(c)))
                rows.append(depth)
                emit(c, depth + 1)

    emit(1, 0)
    return ArrivalScript(n=2 * N, edges=edges, rows=rows,
                         family="dary", d=d, N=N)


def random_order(script: ArrivalScript,
                 rng: np.random.Generator) -> ArrivalScript:
    """Same graph, uniformly shuffled arrival order (labels follow)."""
    perm = rng.permutation(script.m)
    return ArrivalScript(
        n=script.n,
        edges=[script.edges[k] for k in perm],
        rows=[script.rows[k] for k in perm],
        family=script.family, d=script.d, N=script.N)


# -- predictors -------------------------------------------------------------


def harmonic(d: int) -> float:
    """H_d = sum of 1/j for j = 1..d."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return sum(1.0 / j for j in range(1, d + 1))


def predicted_row_updates(R: int, N: int, epsilon: float, d: int,
                          i: int) -> float:
    """Expected reroutes of top-sourced walks caused by row-i edges:
    R * N * ((1 - epsilon) * H_d) ** i.

    Each depth-i edge (t, c) arrives, deepest-first, while t's partial
    out-degree along any root path (j_1, ..., j_i) is exactly the child
    rank j_r at depth r, so one stored top walk sits at t ready to take
    the new edge with probability (1 - epsilon)**i * prod(1 / j_r);
    summing over the d**i paths gives the H_d**i factor.
    """
    if i < 0:
        raise ValueError(f"need row i >= 0, got {i}")
    if R < 1 or N < 1:
        raise ValueError("need R >= 1 and N >= 1")
    if not 0.0 < epsilon <= 1.0:
        # epsilon = 1 is allowed: zero-length walks, zero updates past row 0
        raise ValueError(f"epsilon must be in (0, 1], got {epsilon}")
    return R * N * ((1.0 - epsilon) * harmonic(d)) ** i


def tree_rows(N: int, d: int) -> int:
    """floor(log_d N), computed in integer arithmetic."""
    if N < 1 or d < 2:
        raise ValueError("need N >= 1 and d >= 2")
    rows = 0
    p = 1
    while p * d <= N:
        p *= d
        rows += 1
    return rows


def predicted_total(R: int, N: int, epsilon: float, d: int) -> float:
    """Geometric-series total over rows 0..tree_rows(N, d) - 1 of
    predicted_row_updates: R * N * (x**rows - 1) / (x - 1) with
    x = (1 - epsilon) * H_d, degenerating to rows * R * N when x is 1.
    """
    rows = tree_rows(N, d)
    x = (1.0 - epsilon) * harmonic(d)
    if abs(x - 1.0) < 1e-12:
        return float(rows * R * N)
    return R * N * (x ** rows - 1.0) / (x - 1.0)


# -- script files -----------------------------------------------------------


def save_script(script: ArrivalScript, fh: IO[str]) -> None:
    """Header comment with metadata, then one "u v row" line per edge."""
    fh.write(f"# walkrank arrival script\n")
    fh.write(f"# n={script.n} m={script.m} family={script.family or '-'}"
             f" d={script.d} N={script.N}\n")
    for (u, v), row in zip(script.edges, script.rows):
        fh.write(f"{u} {v} {row}\n")


def load_script(fh: IO[str]) -> ArrivalScript:
    """Parse save_script output; bare "u v" edge lists also load (rows
    default to -1, n defaults to max id + 1)."""
    n = 0
    family = ""
    d = 0
    N = 0
    edges: list[tuple[int, int]] = []
    rows: list[int] = []
    max_id = -1
    for lineno, line in enumerate(fh, start=1):
        text = line.strip()
        if text.startswith("#"):
            for token in text[1:].split():
                if "=" in token:
                    key, _, val = token.partition("=")
                    if key == "n":
                        n = int(val)
                    elif key == "family" and val != "-":
                        family = val
                    elif key == "d":
                        d = int(val)
                    elif key == "N":
                        N = int(val)
            continue
        if not text:
            continue
        parts = text.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'u v [row]'")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        rows.append(int(parts[2]) if len(parts) == 3 else -1)
        max_id = max(max_id, u, v)
    return ArrivalScript(n=n if n > 0 else max_id + 1, edges=edges,
                         rows=rows, family=family, d=d, N=N)
