"""Dynamic directed graph with insertion-ordered out-adjacency.

The node set is fixed at construction (dense integer ids 0..n-1) and
edges arrive one at a time, never to be removed.  Out-edges of each node
are kept in arrival order: the walk engine samples uniformly over that
array, and the arrival-order constructions rely on "the k-th out-edge of
u to arrive" being a meaningful notion.

Storage is a single 2-D numpy array (one row per node, doubled in width
when any node outgrows it) plus an out-degree vector, so the jitted walk
kernels can consume the adjacency directly without conversion.
"""

from __future__ import annotations

from typing import IO, Iterable

import numpy as np


class GraphError(ValueError):
    """Base class for graph contract violations."""


class NodeRangeError(GraphError):
    """A node id is outside 0..n-1 (or n itself is invalid)."""


class SelfLoopError(GraphError):
    """An edge (u, u) was offered; self loops are not supported."""


class DuplicateEdgeError(GraphError):
    """The exact edge (u, v) is already present."""


_INITIAL_WIDTH = 4


class DynGraph:
    """Directed multigraph-free graph supporting only edge insertion."""

    def __init__(self, n: int):
        if n < 1:
            raise NodeRangeError(f"need at least one node, got n={n}")
        self.n = int(n)
        self.edge_count = 0
        self.deg = np.zeros(self.n, dtype=np.int32)
        self.adj = np.full((self.n, _INITIAL_WIDTH), -1, dtype=np.int32)

    # -- mutation ---------------------------------------------------------

    def add_edge(self, u: int, v: int) -> int:
        """Append out-edge (u, v); returns the new out-degree of u.

        Raises NodeRangeError / SelfLoopError / DuplicateEdgeError so
        callers can tell malformed input apart from replayed duplicates.
        """
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self loop ({u}, {v})")
        d = int(self.deg[u])
        row = self.adj[u]
        for k in range(d):
            if row[k] == v:
                raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        if d == self.adj.shape[1]:
            self._grow()
        self.adj[u, d] = v
        self.deg[u] = d + 1
        self.edge_count += 1
        return d + 1

    def _grow(self) -> None:
        wider = np.full((self.n, 2 * self.adj.shape[1]), -1, dtype=np.int32)
        wider[:, : self.adj.shape[1]] = self.adj
        self.adj = wider

    # -- queries ----------------------------------------------------------

    def outdegree(self, u: int) -> int:
        self._check_node(u)
        return int(self.deg[u])

    def out_neighbor(self, u: int, k: int) -> int:
        """k-th out-neighbor of u in arrival order (0-based)."""
        self._check_node(u)
        if not 0 <= k < self.deg[u]:
            raise NodeRangeError(f"node {u} has no out-edge index {k}")
        return int(self.adj[u, k])

    def out_neighbors(self, u: int) -> np.ndarray:
        self._check_node(u)
        return self.adj[u, : self.deg[u]].copy()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return bool(np.any(self.adj[u, : self.deg[u]] == v))

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise NodeRangeError(f"node {u} out of range [0, {self.n})")


# -- plain-text edge lists -------------------------------------------------


def write_edge_list(edges: Iterable[tuple[int, int]], fh: IO[str]) -> None:
    """One "u v" pair per line."""
    for u, v in edges:
        fh.write(f"{u} {v}\n")


def read_edge_list(fh: IO[str]) -> list[tuple[int, int]]:
    """Parse "u v" lines; '#' starts a comment, blank lines are skipped."""
    edges = []
    for lineno, line in enumerate(fh, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) < 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return edges
