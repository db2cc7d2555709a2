"""Brute-force numeric oracles.

Everything here is deliberately independent of the closed forms: dense
matrices, a full symmetric eigendecomposition, and exhaustive subgraph
enumeration.  Size guards keep the brute-force paths at brute-force
scale.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exceptions import NumericFailureError, SizeLimitError
from .graphs import Graph

__all__ = [
    "DEFAULT_DENSE_LIMIT",
    "DEFAULT_ENUM_LIMIT",
    "SubgraphCounts",
    "adjacency_matrix",
    "laplacian_matrix",
    "eigenvalues_symmetric",
    "exhaustive_subgraph_counts",
]

DEFAULT_DENSE_LIMIT = 2000
DEFAULT_ENUM_LIMIT = 50


def adjacency_matrix(g: Graph, max_n: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
    """Dense 0/1 adjacency matrix as float64."""
    if g.n > max_n:
        raise SizeLimitError(f"n={g.n} exceeds dense limit {max_n}")
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph, max_n: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
    """Dense combinatorial Laplacian D - A as float64."""
    a = adjacency_matrix(g, max_n)
    lap = -a
    lap[np.diag_indices(g.n)] = [float(k) for k in g.degrees()]
    return lap


def eigenvalues_symmetric(mat: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric real matrix, sorted descending.

    Raises NumericFailureError if the decomposition does not converge;
    a silent bad answer is never returned.
    """
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be exactly symmetric")
    try:
        values = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(f"eigendecomposition failed: {exc}") from exc
    return values[::-1]


@dataclass(frozen=True)
class SubgraphCounts:
    triangles: int
    p2: int
    p3: int
    s13: int


def exhaustive_subgraph_counts(g: Graph, max_n: int = DEFAULT_ENUM_LIMIT) -> SubgraphCounts:
    """Count triangles, 2-paths, 3-paths, and 3-stars by enumeration.

    Triangles and 2-paths scan all 3-subsets; 3-paths scan all orderings
    of 4-subsets, each undirected path counted once.  Exponential on
    purpose; guarded by ``max_n``.
    """
    if g.n > max_n:
        raise SizeLimitError(f"n={g.n} exceeds enumeration limit {max_n}")
    nbrs = g.neighbor_sets()

    def connected(a: int, b: int) -> bool:
        return b in nbrs[a]

    triangles = 0
    p2 = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        ab, ac, bc = connected(a, b), connected(a, c), connected(b, c)
        if ab and ac and bc:
            triangles += 1
        # middle-vertex configurations, one per 2-path on {a, b, c}
        p2 += (ab and ac) + (ab and bc) + (ac and bc)

    p3 = 0
    for quad in itertools.combinations(range(g.n), 4):
        for order in itertools.permutations(quad):
            if order[0] > order[3]:
                continue  # undirected: count each vertex sequence once
            if (
                connected(order[0], order[1])
                and connected(order[1], order[2])
                and connected(order[2], order[3])
            ):
                p3 += 1

    s13 = 0
    for u in range(g.n):
        for trip in itertools.combinations(nbrs[u], 3):
            s13 += 1

    return SubgraphCounts(triangles=triangles, p2=p2, p3=p3, s13=s13)
