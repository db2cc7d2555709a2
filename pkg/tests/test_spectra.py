from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import GRID_PARAMS
from coresat import (
    CoreSatelliteParams,
    GeneralizedParams,
    InvalidParameterError,
    adjacency_matrix,
    adjacency_spectrum_cs,
    adjacency_spectrum_gcs,
    analytic_metrics,
    core_satellite,
    divisor_matrix,
    eigenvalues_symmetric,
    extreme_eigenvalues,
    generalized_core_satellite,
    laplacian_matrix,
    laplacian_spectrum_gcs,
    max_spectrum_deviation,
    principal_eigenvector,
    sample_generalized_params,
    spectral_indices,
    spectral_radius,
    spectral_radius_bounds,
)
from coresat.spectra import _snap_integers

BUTTERFLY = CoreSatelliteParams(1, 2, 2)
MIXED = GeneralizedParams(2, [(1, 1), (2, 1)])


def test_extreme_eigenvalues_butterfly():
    hi, lo = extreme_eigenvalues(BUTTERFLY)
    root = math.sqrt(17)
    assert hi == pytest.approx((1 + root) / 2, abs=1e-15)
    assert lo == pytest.approx((1 - root) / 2, abs=1e-15)


def test_adjacency_spectrum_butterfly():
    result = adjacency_spectrum_cs(BUTTERFLY)
    assert result.size == 5
    assert not result.degenerate
    values = [v for v, _ in result.eigenpairs]
    mults = [m for _, m in result.eigenpairs]
    hi, lo = extreme_eigenvalues(BUTTERFLY)
    assert values == [hi, 1.0, -1.0, lo]
    assert mults == [1, 1, 2, 1]


def test_adjacency_spectrum_complete_split():
    result = adjacency_spectrum_cs(CoreSatelliteParams(3, 1, 2))
    root = math.sqrt(7)
    expected = [(1 + root, 1), (0.0, 1), (-1.0, 2), (1 - root, 1)]
    for (got_v, got_m), (want_v, want_m) in zip(result.eigenpairs, expected):
        assert got_v == pytest.approx(want_v, abs=1e-15)
        assert got_m == want_m


def test_adjacency_spectrum_star_exact():
    result = adjacency_spectrum_cs(CoreSatelliteParams(1, 1, 4))
    assert result.eigenpairs == ((2.0, 1), (0.0, 3), (-2.0, 1))


def test_adjacency_spectrum_degenerate_single_satellite():
    result = adjacency_spectrum_cs(CoreSatelliteParams(2, 3, 1))
    assert result.degenerate
    assert result.eigenpairs == ((4.0, 1), (-1.0, 4))


def test_eigenvalue_ordering_strict_on_grid():
    for p in GRID_PARAMS:
        c, s = p.core, p.satellite_size
        hi, lo = extreme_eigenvalues(p)
        assert hi > c + s - 1 >= s - 1 >= 0 > -1 > lo, p


def test_adjacency_matches_oracle_on_grid():
    worst = 0.0
    for p in GRID_PARAMS:
        result = adjacency_spectrum_cs(p)
        numeric = eigenvalues_symmetric(adjacency_matrix(core_satellite(p)))
        worst = max(worst, max_spectrum_deviation(result, numeric))
    assert worst <= 1e-9


def test_divisor_matrix_entries():
    b = divisor_matrix(MIXED)
    expected = np.array(
        [
            [1.0, math.sqrt(2.0), 2.0],
            [math.sqrt(2.0), 0.0, 0.0],
            [2.0, 0.0, 1.0],
        ]
    )
    assert np.allclose(b, expected, atol=1e-15)
    assert np.array_equal(b, b.T)


def test_divisor_roots_satisfy_cubic():
    # characteristic polynomial of the mixed example's quotient is
    # x^3 - 2x^2 - 5x + 2; the constant is +2, not +4 (a plausible slip
    # that the numeric route rejects)
    roots = eigenvalues_symmetric(divisor_matrix(MIXED))
    assert roots[0] == pytest.approx(3.323404, abs=1e-6)
    assert roots[1] == pytest.approx(0.357926, abs=1e-6)
    assert roots[2] == pytest.approx(-1.681331, abs=1e-6)
    for r in roots:
        assert abs(r**3 - 2 * r**2 - 5 * r + 2) < 1e-9
        assert abs(r**3 - 2 * r**2 - 5 * r + 4) > 0.5


def test_generalized_spectrum_mixed_example():
    result = adjacency_spectrum_gcs(MIXED)
    assert result.size == 5
    assert len(result.eigenpairs) == 4  # three simple roots plus -1 twice
    mult_at = dict(result.eigenpairs)
    assert mult_at[-1.0] == 2
    numeric = eigenvalues_symmetric(
        adjacency_matrix(generalized_core_satellite(MIXED))
    )
    assert max_spectrum_deviation(result, numeric) <= 1e-9


def test_generalized_single_class_delegates():
    gcs = adjacency_spectrum_gcs(GeneralizedParams(1, [(2, 2)]))
    assert gcs == adjacency_spectrum_cs(BUTTERFLY)


def test_generalized_matches_oracle_on_samples():
    worst = 0.0
    for p in sample_generalized_params(count=8, max_nodes=120):
        result = adjacency_spectrum_gcs(p)
        numeric = eigenvalues_symmetric(
            adjacency_matrix(generalized_core_satellite(p))
        )
        worst = max(worst, max_spectrum_deviation(result, numeric))
        expected_distinct = p.class_count + 2 + sum(
            1 for cls in p.classes if cls.count > 1
        )
        assert len(result.eigenpairs) == expected_distinct, p
    assert worst <= 1e-9


def test_snap_integers_window():
    snapped = _snap_integers(np.array([2.0 + 5e-11, -1.0 - 5e-11, 0.3579]))
    assert snapped[0] == 2.0
    assert snapped[1] == -1.0
    assert snapped[2] == pytest.approx(0.3579, abs=0)


def test_laplacian_butterfly_golden():
    result = laplacian_spectrum_gcs(BUTTERFLY.to_generalized())
    assert result.eigenpairs == ((5.0, 1), (3.0, 2), (1.0, 1), (0.0, 1))
    assert not result.degenerate


def test_laplacian_distinct_value_count():
    # t+3 distinct values when every class has size >= 2
    p = GeneralizedParams(2, [(2, 2), (3, 1)])
    result = laplacian_spectrum_gcs(p)
    assert result.eigenpairs == (
        (9.0, 2),
        (5.0, 2),
        (4.0, 2),
        (2.0, 2),
        (0.0, 1),
    )
    assert len(result.eigenpairs) == p.class_count + 3
    # a size-1 class contributes no clique eigenvalue
    thin = laplacian_spectrum_gcs(MIXED)
    assert thin.eigenpairs == ((5.0, 2), (4.0, 1), (2.0, 1), (0.0, 1))


def test_laplacian_degenerate_single_satellite():
    result = laplacian_spectrum_gcs(GeneralizedParams(2, [(3, 1)]))
    assert result.degenerate
    assert result.eigenpairs == ((5.0, 4), (0.0, 1))


def test_laplacian_matches_oracle_and_is_integer():
    for p in (BUTTERFLY.to_generalized(), MIXED, GeneralizedParams(3, [(2, 2), (4, 3)])):
        result = laplacian_spectrum_gcs(p)
        assert all(v == int(v) for v, _ in result.eigenpairs)
        numeric = eigenvalues_symmetric(
            laplacian_matrix(generalized_core_satellite(p))
        )
        assert max_spectrum_deviation(result, numeric) <= 1e-9


def test_algebraic_connectivity_equals_core_on_grid():
    for p in GRID_PARAMS:
        values = [v for v, _ in laplacian_spectrum_gcs(p.to_generalized()).eigenpairs]
        assert values[-1] == 0.0
        assert values[-2] == float(p.core), p


def test_spectral_radius_bounds_examples():
    assert spectral_radius_bounds(MIXED) == (3, 4)
    assert spectral_radius_bounds(GeneralizedParams(1, [(1, 2), (2, 1)])) == (2, 4)
    with pytest.raises(InvalidParameterError):
        spectral_radius_bounds(GeneralizedParams(2, [(3, 1)]))


def test_bounds_enclose_radius_on_grid():
    for p in GRID_PARAMS:
        gp = p.to_generalized()
        rho = spectral_radius(gp)
        lower, upper = spectral_radius_bounds(gp)
        assert lower < rho < upper, p
        assert rho >= math.sqrt(gp.n - 1) - 1e-12, p


def test_principal_eigenvector_butterfly():
    pev = principal_eigenvector(BUTTERFLY.to_generalized())
    beta = 2.0 / (math.sqrt(17.0) - 1.0)
    assert pev.core_value == 1.0
    assert pev.class_values[0] == pytest.approx(beta, abs=1e-14)
    assert 0.0 < pev.class_values[0] < 1.0
    vec = np.array(pev.to_vector(BUTTERFLY.to_generalized()))
    a = adjacency_matrix(core_satellite(BUTTERFLY))
    residual = np.max(np.abs(a @ vec - pev.eigenvalue * vec))
    assert residual <= 1e-8 * pev.eigenvalue


def test_principal_eigenvector_residual_on_samples():
    for p in sample_generalized_params(count=6, max_nodes=100):
        pev = principal_eigenvector(p)
        assert all(0.0 < beta < 1.0 for beta in pev.class_values), p
        vec = np.array(pev.to_vector(p))
        assert vec.size == p.n
        a = adjacency_matrix(generalized_core_satellite(p))
        residual = np.max(np.abs(a @ vec - pev.eigenvalue * vec))
        assert residual <= 1e-8 * pev.eigenvalue, p


def test_trace_identities_exact_integers():
    # power sums of the closed-form spectrum, in exact integer
    # arithmetic: sum = 0, sum of squares = 2m, sum of cubes = 6t
    for p in GRID_PARAMS:
        c, s, eta = p.core, p.satellite_size, p.satellite_count
        rep = analytic_metrics(p)
        a = c + s - 2
        d = (c - s) ** 2 + 4 * eta * c * s
        assert (a * a + d) % 2 == 0
        assert (a * a - d) % 4 == 0
        sum_sq_extreme = (a * a + d) // 2
        prod_extreme = (a * a - d) // 4
        sum_cu_extreme = a**3 - 3 * prod_extreme * a
        minus_mult = c + eta * (s - 1) - 1
        assert a + (s - 1) * (eta - 1) - minus_mult == 0, p
        assert (
            sum_sq_extreme + (s - 1) ** 2 * (eta - 1) + minus_mult == 2 * rep.m
        ), p
        assert (
            sum_cu_extreme + (s - 1) ** 3 * (eta - 1) - minus_mult
            == 6 * rep.triangles
        ), p


def test_spectral_indices_butterfly():
    idx = spectral_indices(BUTTERFLY.to_generalized())
    rho = (1 + math.sqrt(17)) / 2
    assert idx.spectral_radius == pytest.approx(rho, abs=1e-14)
    assert idx.infection_threshold == pytest.approx(1 / rho, abs=1e-14)
    assert idx.sync_index == 0.2
    assert idx.algebraic_connectivity == 1.0


def test_spectrum_result_expansion():
    result = adjacency_spectrum_cs(BUTTERFLY)
    expanded = result.expanded()
    assert len(expanded) == 5
    assert expanded == sorted(expanded, reverse=True)
    with pytest.raises(ValueError):
        max_spectrum_deviation(result, [0.0, 1.0])
