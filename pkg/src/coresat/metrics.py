"""Clustering, transitivity, assortativity, and subgraph counts.

Direct routines work on any Graph.  The ``analytic_*`` routines evaluate
closed forms in the core-satellite parameters; every closed form here is
cross-validated against the direct route by the test suite and the
``verify`` command.  All counts use exact integer arithmetic; ratios are
converted to floating point only at the last step.

Conventions
-----------
* Local clustering of a node with degree 0 or 1 is 0.
* Degree assortativity is ``None`` (undefined) when its denominator
  vanishes, e.g. on regular graphs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .params import CoreSatelliteParams

__all__ = [
    "MetricsReport",
    "local_clustering",
    "average_clustering",
    "transitivity",
    "triangle_count",
    "path_counts",
    "star_triplet_count",
    "assortativity",
    "assortativity_estrada",
    "compute_metrics",
    "analytic_core_clustering",
    "analytic_metrics",
]


@dataclass(frozen=True)
class MetricsReport:
    """One bundle of graph metrics.

    ``p1``/``p2``/``p3`` count paths with 1, 2, 3 edges; ``s13`` counts
     3-star subgraphs.  ``assortativity`` and ``assortativity_estrada``
    are ``None`` when undefined.
    """

    n: int
    m: int
    triangles: int
    p1: int
    p2: int
    p3: int
    s13: int
    avg_clustering: float
    transitivity: float
    assortativity: float | None
    assortativity_estrada: float | None


def _triangles_per_node(g: Graph) -> list[int]:
    """Triangles through each node, via common-neighbor counts per edge."""
    nbrs = g.neighbor_sets()
    twice = [0] * g.n
    for u, v in g.edges:
        common = len(nbrs[u] & nbrs[v])
        twice[u] += common
        twice[v] += common
    return [x // 2 for x in twice]


def triangle_count(g: Graph) -> int:
    nbrs = g.neighbor_sets()
    return sum(len(nbrs[u] & nbrs[v]) for u, v in g.edges) // 3


def local_clustering(g: Graph, u: int) -> float:
    """Fraction of the pairs of neighbors of ``u`` that are adjacent."""
    k = g.degree(u)
    if k <= 1:
        return 0.0
    nbrs = g.neighbor_sets()
    links = sum(len(nbrs[u] & nbrs[v]) for v in g.adj[u]) // 2
    return 2.0 * links / (k * (k - 1))


def average_clustering(g: Graph) -> float:
    """Arithmetic mean of local clustering over all nodes."""
    if g.n == 0:
        return 0.0
    tri = _triangles_per_node(g)
    terms = []
    for u in range(g.n):
        k = g.degree(u)
        if k >= 2:
            terms.append(2.0 * tri[u] / (k * (k - 1)))
    return math.fsum(terms) / g.n


def path_counts(g: Graph) -> tuple[int, int]:
    """(p2, p3): counts of 2-edge and 3-edge paths.

    p2 = sum over nodes of C(degree, 2); p3 comes from the identity
    p3 = sum over edges of (k_u - 1)(k_v - 1) minus three times the
    triangle count.
    """
    deg = g.degrees()
    p2 = sum(math.comb(k, 2) for k in deg)
    p3 = sum((deg[u] - 1) * (deg[v] - 1) for u, v in g.edges) - 3 * triangle_count(g)
    return p2, p3


def star_triplet_count(g: Graph) -> int:
    """Number of 3-star subgraphs: sum over nodes of C(degree, 3)."""
    return sum(math.comb(k, 3) for k in g.degrees())


def transitivity(g: Graph) -> float:
    """3 * triangles / p2, or 0 when the graph has no 2-edge path."""
    p2, _ = path_counts(g)
    if p2 == 0:
        return 0.0
    return 3 * triangle_count(g) / p2


def _assortativity_terms(g: Graph) -> tuple[int, int]:
    """Exact integer numerator and denominator of degree assortativity."""
    deg = g.degrees()
    m = g.m
    se = ss = sq = 0
    for u, v in g.edges:
        ku, kv = deg[u], deg[v]
        se += ku * kv
        ss += ku + kv
        sq += ku * ku + kv * kv
    return 4 * m * se - ss * ss, 2 * m * sq - ss * ss


def assortativity(g: Graph) -> float | None:
    """Pearson correlation of degrees across edges; None when undefined."""
    if g.m == 0:
        return None
    num, den = _assortativity_terms(g)
    if den == 0:
        return None
    return num / den


def assortativity_estrada(g: Graph) -> float | None:
    """Degree assortativity from subgraph counts.

    With m edges, t triangles, p2/p3 path counts and s13 star triplets:

        r = (m*(p3 + 3t) - p2**2) / (m*(3*s13 + p2) - p2**2)

    Algebraically identical to the edge-based Pearson form; computed from
    counts alone as an independent route.
    """
    if g.m == 0:
        return None
    m = g.m
    t = triangle_count(g)
    p2, p3 = path_counts(g)
    s13 = star_triplet_count(g)
    den = m * (3 * s13 + p2) - p2 * p2
    if den == 0:
        return None
    return (m * (p3 + 3 * t) - p2 * p2) / den


def compute_metrics(g: Graph) -> MetricsReport:
    """All metrics of ``g`` by direct computation."""
    p2, p3 = path_counts(g)
    return MetricsReport(
        n=g.n,
        m=g.m,
        triangles=triangle_count(g),
        p1=g.m,
        p2=p2,
        p3=p3,
        s13=star_triplet_count(g),
        avg_clustering=average_clustering(g),
        transitivity=transitivity(g),
        assortativity=assortativity(g),
        assortativity_estrada=assortativity_estrada(g),
    )


# ---------------------------------------------------------------------------
# closed forms in (c, s, eta)
# ---------------------------------------------------------------------------

def _closed_counts(
    params: CoreSatelliteParams, *, triangle_sign_fault: bool = False
) -> tuple[int, int, int, int, int, int]:
    """(n, m, triangles, p2, p3, s13) from closed forms.

    ``triangle_sign_fault`` flips the subtracted core-overcount term of
    the triangle formula to an addition.  That variant is wrong; it
    exists only as a negative control for the verification pipeline.
    """
    c, s, eta = params.core, params.satellite_size, params.satellite_count
    n = params.n
    m = eta * math.comb(c + s, 2) - (eta - 1) * math.comb(c, 2)
    sign = 1 if triangle_sign_fault else -1
    tri = eta * math.comb(c + s, 3) + sign * (eta - 1) * math.comb(c, 3)
    p2 = c * math.comb(n - 1, 2) + eta * s * math.comb(c + s - 1, 2)
    s13 = c * math.comb(n - 1, 3) + eta * s * math.comb(c + s - 1, 3)
    # per-edge-class expansion of sum (k_u - 1)(k_v - 1)
    p3 = (
        math.comb(c, 2) * (n - 2) ** 2
        + c * eta * s * (n - 2) * (c + s - 2)
        + eta * math.comb(s, 2) * (c + s - 2) ** 2
        - 3 * tri
    )
    return n, m, tri, p2, p3, s13


def _core_clustering_fraction(params: CoreSatelliteParams) -> Fraction:
    c, s, eta = params.core, params.satellite_size, params.satellite_count
    num = eta * (c + s - 1) * (c + s - 2) - (c - 1) * (c - 2) * (eta - 1)
    den = (eta * s + c - 1) * (eta * s + c - 2)
    if den == 0:  # n <= 2: core degree <= 1, convention value
        return Fraction(0)
    return Fraction(num, den)


def analytic_core_clustering(params: CoreSatelliteParams) -> float:
    """Local clustering of a core node, closed form.

    Core degree n-1, with triangles through the node counted per edge
    class; returns the convention value 0 when n <= 2.
    """
    return float(_core_clustering_fraction(params))


def _average_clustering_fraction(params: CoreSatelliteParams) -> Fraction:
    c, s, eta = params.core, params.satellite_size, params.satellite_count
    # a satellite node's neighborhood (its clique plus the core) is itself
    # a clique, so its clustering is 1 -- unless its degree c+s-1 is < 2,
    # where the convention value 0 applies
    sat = Fraction(1) if c + s >= 3 else Fraction(0)
    return (c * _core_clustering_fraction(params) + eta * s * sat) / params.n


def analytic_metrics(
    params: CoreSatelliteParams, *, triangle_sign_fault: bool = False
) -> MetricsReport:
    """MetricsReport evaluated from closed forms alone.

    Exactness: counts are exact integers; ratios are exact rationals
    converted to float once.  ``triangle_sign_fault`` is the negative
    control described in ``_closed_counts``.
    """
    n, m, tri, p2, p3, s13 = _closed_counts(
        params, triangle_sign_fault=triangle_sign_fault
    )
    avg = _average_clustering_fraction(params)
    if triangle_sign_fault:
        # keep the faulted triangle count flowing into the average too:
        # core clustering rewritten over the faulted per-node count
        c, s, eta = params.core, params.satellite_size, params.satellite_count
        den = (n - 1) * (n - 2)
        if den > 0:
            core_tri_twice = eta * (c + s - 1) * (c + s - 2) + (eta - 1) * (c - 1) * (c - 2)
            sat = Fraction(1) if c + s >= 3 else Fraction(0)
            avg = (c * Fraction(core_tri_twice, den) + eta * s * sat) / n
    trans = Fraction(3 * tri, p2) if p2 else Fraction(0)
    num = m * (p3 + 3 * tri) - p2 * p2
    den = m * (3 * s13 + p2) - p2 * p2
    r = num / den if den != 0 else None
    return MetricsReport(
        n=n,
        m=m,
        triangles=tri,
        p1=m,
        p2=p2,
        p3=p3,
        s13=s13,
        avg_clustering=float(avg),
        transitivity=float(trans),
        assortativity=r,
        assortativity_estrada=r,
    )
