"""Coarsened-graph construction: projection map, superedges, projected Laplacian.

The projected Laplacian is the congruence transform of the original
combinatorial Laplacian by the binary node-to-supernode projection matrix,
accumulated in integer arithmetic so row sums are exactly zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import Partition
from .errors import GraphValidationError
from .graph import Graph


@dataclass
class ProjectionMap:
    """Sparse encoding of the binary projection matrix: one supernode per node."""

    rows: int
    cols: int
    column_of: list[int]

    def ball_sizes(self) -> list[int]:
        sizes = [0] * self.cols
        for c in self.column_of:
            sizes[c] += 1
        return sizes

    def indicator_matrix(self) -> np.ndarray:
        c = np.zeros((self.rows, self.cols))
        c[np.arange(self.rows), self.column_of] = 1.0
        return c


@dataclass
class CoarsenedGraph:
    supernode_count: int
    superedges: list[tuple[int, int]]  # unordered pairs stored (a, b) with a < b
    projected_laplacian: np.ndarray  # symmetric, float entries of exact integers


def build_projection(p: Partition, n: int) -> ProjectionMap:
    """Projection map from a validated partition over n original nodes."""
    if len(p.assignment) != n:
        raise GraphValidationError(
            f"partition covers {len(p.assignment)} nodes, expected {n}"
        )
    cols = p.ball_count
    for v, c in enumerate(p.assignment):
        if not (0 <= c < cols):
            raise GraphValidationError(f"node {v} mapped to invalid ball index {c}")
    return ProjectionMap(rows=n, cols=cols, column_of=list(p.assignment))


def build_coarse_graph(g: Graph, c: ProjectionMap) -> CoarsenedGraph:
    """Superedges plus the exactly-projected Laplacian.

    A superedge (a, b) exists iff some original edge crosses from ball a to
    ball b. Off-diagonal Laplacian entries count cross edges negatively;
    diagonals make every row sum to zero.
    """
    if c.rows != g.n:
        raise GraphValidationError(f"projection has {c.rows} rows, graph has {g.n} nodes")
    t = c.cols
    col = c.column_of
    cross: dict[tuple[int, int], int] = {}
    cross_degree = [0] * t
    for u, v in g.edges:
        a, b = col[u], col[v]
        if a == b:
            continue
        if a > b:
            a, b = b, a
        cross[(a, b)] = cross.get((a, b), 0) + 1
        cross_degree[a] += 1
        cross_degree[b] += 1
    lap = np.zeros((t, t), dtype=np.int64)
    for (a, b), mult in cross.items():
        lap[a, b] = -mult
        lap[b, a] = -mult
    for a in range(t):
        lap[a, a] = cross_degree[a]
    return CoarsenedGraph(
        supernode_count=t,
        superedges=sorted(cross),
        projected_laplacian=lap.astype(float),
    )


def superedge_graph(cg: CoarsenedGraph) -> Graph:
    """The unweighted coarse graph over supernodes."""
    return Graph(cg.supernode_count, cg.superedges)
