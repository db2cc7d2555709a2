"""Self-verification: every closed form against an independent route.

``run_checks`` executes the whole battery and returns per-check results;
the CLI renders them as a pass/fail table.  ``triangle_sign_fault``
injects a known-wrong triangle closed form so the pipeline can prove it
would catch a bad formula (negative control).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import metrics, oracle, spectra
from .graphs import core_satellite, generalized_core_satellite, is_connected
from .params import CoreSatelliteParams, GeneralizedParams

__all__ = ["CheckResult", "run_checks", "sample_generalized_params", "GRID"]

# c, s in 1..5, eta in 2..6: 125 single-class graphs, n <= 35
GRID = tuple(
    CoreSatelliteParams(c, s, eta)
    for c in range(1, 6)
    for s in range(1, 6)
    for eta in range(2, 7)
)

_SAMPLE_SEED = 20240612


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def sample_generalized_params(
    count: int = 20,
    *,
    max_nodes: int = 200,
    seed: int = _SAMPLE_SEED,
) -> list[GeneralizedParams]:
    """Deterministic random multi-class parameter sets, 2..5 classes."""
    rng = random.Random(seed)
    out: list[GeneralizedParams] = []
    while len(out) < count:
        t = rng.randint(2, 5)
        sizes = rng.sample(range(1, 10), t)
        classes = [(size, rng.randint(1, 6)) for size in sorted(sizes)]
        core = rng.randint(1, 8)
        candidate = GeneralizedParams(core, classes)
        if candidate.n <= max_nodes:
            out.append(candidate)
    return out


def _check_counts_and_structure() -> CheckResult:
    for p in GRID:
        g = core_satellite(p)
        rep = metrics.analytic_metrics(p)
        if g.n != rep.n or g.m != rep.m:
            return CheckResult(
                "counts-closed-forms", False, f"{p}: n/m mismatch ({g.n},{g.m})"
            )
        degs = sorted(set(g.degrees()))
        expected = sorted({p.n - 1, p.core + p.satellite_size - 1})
        if degs != expected:
            return CheckResult("counts-closed-forms", False, f"{p}: degrees {degs}")
        if not is_connected(g):
            return CheckResult("counts-closed-forms", False, f"{p}: not connected")
    return CheckResult("counts-closed-forms", True, f"{len(GRID)} graphs")


def _check_clustering_closed_forms(fault: bool) -> CheckResult:
    worst = 0.0
    for p in GRID:
        g = core_satellite(p)
        direct = metrics.compute_metrics(g)
        closed = metrics.analytic_metrics(p, triangle_sign_fault=fault)
        if closed.triangles != direct.triangles or closed.p2 != direct.p2:
            return CheckResult(
                "clustering-closed-forms",
                False,
                f"{p}: counts differ (closed t={closed.triangles}, direct t={direct.triangles})",
            )
        gap = max(
            abs(closed.avg_clustering - direct.avg_clustering),
            abs(closed.transitivity - direct.transitivity),
        )
        worst = max(worst, gap)
        if gap > 1e-12:
            return CheckResult("clustering-closed-forms", False, f"{p}: gap {gap:.3e}")
    return CheckResult("clustering-closed-forms", True, f"max gap {worst:.1e}")


def _check_assortativity() -> CheckResult:
    for p in GRID:
        g = core_satellite(p)
        r = metrics.assortativity(g)
        r2 = metrics.assortativity_estrada(g)
        closed = metrics.analytic_metrics(p).assortativity
        if (r is None) != (r2 is None) or (r is None) != (closed is None):
            return CheckResult("assortativity", False, f"{p}: definedness differs")
        if r is None:
            continue
        if r >= 0:
            return CheckResult("assortativity", False, f"{p}: r={r} not negative")
        if abs(r - r2) > 1e-12 or abs(r - closed) > 1e-12:
            return CheckResult("assortativity", False, f"{p}: routes disagree")
    return CheckResult("assortativity", True, "negative, three routes agree")


def _check_enumeration(max_enum_n: int) -> CheckResult:
    import numpy as np

    checked = 0
    for p in GRID:
        if p.n > max_enum_n:
            continue
        g = core_satellite(p)
        counts = oracle.exhaustive_subgraph_counts(g)
        rep = metrics.compute_metrics(g)
        if (counts.triangles, counts.p2, counts.p3, counts.s13) != (
            rep.triangles,
            rep.p2,
            rep.p3,
            rep.s13,
        ):
            return CheckResult("subgraph-enumeration", False, f"{p}: counts differ")
        a = oracle.adjacency_matrix(g)
        trace_t = round(float(np.trace(a @ a @ a)) / 6)
        if trace_t != counts.triangles:
            return CheckResult("subgraph-enumeration", False, f"{p}: trace(A^3)/6 differs")
        checked += 1
    return CheckResult("subgraph-enumeration", True, f"{checked} graphs enumerated")


def _check_adjacency_spectra(dense_limit: int, tol: float) -> CheckResult:
    worst = 0.0
    for p in GRID:
        if p.n > dense_limit:
            continue
        g = core_satellite(p)
        result = spectra.adjacency_spectrum_cs(p)
        numeric = oracle.eigenvalues_symmetric(oracle.adjacency_matrix(g))
        dev = spectra.max_spectrum_deviation(result, numeric)
        worst = max(worst, dev)
        if dev > tol:
            return CheckResult("adjacency-spectra", False, f"{p}: deviation {dev:.3e}")
    return CheckResult("adjacency-spectra", True, f"max deviation {worst:.1e}")


def _check_generalized_spectra(dense_limit: int, tol: float) -> CheckResult:
    worst = 0.0
    for p in sample_generalized_params():
        if p.n > dense_limit:
            continue
        g = generalized_core_satellite(p)
        result = spectra.adjacency_spectrum_gcs(p)
        numeric = oracle.eigenvalues_symmetric(oracle.adjacency_matrix(g))
        dev = spectra.max_spectrum_deviation(result, numeric)
        worst = max(worst, dev)
        if dev > tol:
            return CheckResult("generalized-spectra", False, f"{p}: deviation {dev:.3e}")
        expected_distinct = p.class_count + 2 + sum(
            1 for cls in p.classes if cls.count > 1
        )
        if len(result.eigenpairs) != expected_distinct:
            return CheckResult(
                "generalized-spectra",
                False,
                f"{p}: {len(result.eigenpairs)} distinct values, expected {expected_distinct}",
            )
    return CheckResult("generalized-spectra", True, f"max deviation {worst:.1e}")


def _check_laplacian(dense_limit: int, tol: float) -> CheckResult:
    worst = 0.0
    cases = [p.to_generalized() for p in GRID] + sample_generalized_params()
    for p in cases:
        if p.n > dense_limit:
            continue
        result = spectra.laplacian_spectrum_gcs(p)
        for value, _ in result.eigenpairs:
            if value != int(value):
                return CheckResult("laplacian-spectra", False, f"{p}: non-integer {value}")
        g = generalized_core_satellite(p)
        numeric = oracle.eigenvalues_symmetric(oracle.laplacian_matrix(g))
        dev = spectra.max_spectrum_deviation(result, numeric)
        worst = max(worst, dev)
        if dev > tol:
            return CheckResult("laplacian-spectra", False, f"{p}: deviation {dev:.3e}")
        values = [v for v, _ in result.eigenpairs]
        if values[0] != p.n or values[-1] != 0 or values[-2] != p.core:
            return CheckResult("laplacian-spectra", False, f"{p}: endpoints wrong")
    return CheckResult("laplacian-spectra", True, f"max deviation {worst:.1e}")


def _check_bounds_and_eigenvector(tol: float) -> CheckResult:
    import numpy as np

    cases = [p.to_generalized() for p in GRID] + sample_generalized_params()
    for p in cases:
        rho = spectra.spectral_radius(p)
        lower, upper = spectra.spectral_radius_bounds(p)
        if not (lower < rho < upper):
            return CheckResult("bounds-eigenvector", False, f"{p}: rho {rho} not in ({lower},{upper})")
        if rho < math.sqrt(p.n - 1) - 1e-12:
            return CheckResult("bounds-eigenvector", False, f"{p}: rho below sqrt(n-1)")
        pev = spectra.principal_eigenvector(p)
        if any(not 0.0 < beta < 1.0 for beta in pev.class_values):
            return CheckResult("bounds-eigenvector", False, f"{p}: beta out of (0,1)")
        if p.n <= 200:
            g = generalized_core_satellite(p)
            a = oracle.adjacency_matrix(g)
            vec = np.array(pev.to_vector(p))
            residual = float(np.max(np.abs(a @ vec - rho * vec)))
            if residual > 1e-8 * rho:
                return CheckResult("bounds-eigenvector", False, f"{p}: residual {residual:.3e}")
    return CheckResult("bounds-eigenvector", True, f"{len(cases)} parameter sets")


def _check_indices() -> CheckResult:
    cases = [p.to_generalized() for p in GRID] + sample_generalized_params()
    for p in cases:
        idx = spectra.spectral_indices(p)
        lap = spectra.laplacian_spectrum_gcs(p)
        values = [v for v, _ in lap.eigenpairs]
        largest, smallest_positive = values[0], values[-2]
        if Fraction(int(smallest_positive), int(largest)) != Fraction(p.core, p.n):
            return CheckResult("spectral-indices", False, f"{p}: sync ratio mismatch")
        if idx.sync_index != p.core / p.n:
            return CheckResult("spectral-indices", False, f"{p}: sync index mismatch")
        if idx.algebraic_connectivity != p.core:
            return CheckResult("spectral-indices", False, f"{p}: connectivity != core")
        if abs(idx.infection_threshold * idx.spectral_radius - 1.0) > 1e-12:
            return CheckResult("spectral-indices", False, f"{p}: threshold mismatch")
    return CheckResult("spectral-indices", True, "sync = core/n, connectivity = core")


def _check_divergence() -> CheckResult:
    base = CoreSatelliteParams(2, 3, 1000)
    rep = metrics.analytic_metrics(base)
    if not rep.avg_clustering > 0.999:
        return CheckResult("divergence", False, f"avg clustering {rep.avg_clustering}")
    if not rep.transitivity < 0.01:
        return CheckResult("divergence", False, f"transitivity {rep.transitivity}")
    prev = None
    for eta in range(2, 1001):
        rep = metrics.analytic_metrics(CoreSatelliteParams(2, 3, eta))
        if prev is not None and rep.transitivity > prev:
            return CheckResult("divergence", False, f"transitivity rose at eta={eta}")
        prev = rep.transitivity
    return CheckResult("divergence", True, "endpoints hold, transitivity decreasing")


def run_checks(
    *,
    tol: float = 1e-9,
    dense_limit: int = oracle.DEFAULT_DENSE_LIMIT,
    max_enum_n: int = 14,
    triangle_sign_fault: bool = False,
) -> list[CheckResult]:
    """Run the full verification battery; order is deterministic."""
    return [
        _check_counts_and_structure(),
        _check_clustering_closed_forms(triangle_sign_fault),
        _check_assortativity(),
        _check_enumeration(min(max_enum_n, oracle.DEFAULT_ENUM_LIMIT)),
        _check_adjacency_spectra(dense_limit, tol),
        _check_generalized_spectra(dense_limit, tol),
        _check_laplacian(dense_limit, tol),
        _check_bounds_and_eigenvector(tol),
        _check_indices(),
        _check_divergence(),
    ]
