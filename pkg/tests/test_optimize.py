# -*- coding: utf-8 -*-
"""Tests for the maximization of the merit product and the parameter sweeps"""

import math

import numpy as np
import pytest

from ifcavity.detection import metrics, optimize
from ifcavity.detection.cavity import port_coefficients
from ifcavity.detection.models import (
    Axis,
    Constraints,
    DetectorSpec,
    ObjectState,
    OperatingPoint,
    Port,
)
from ifcavity.exceptions import DegenerateNoise, EmptyGrid, InvalidSpec, UnboundedInN0

from .conftest import random_detector, random_spec


CONDITIONS = Constraints(min_eta_tot=0.85, min_snr=2.0)


# Photon number --------------------------------------------------------------------------------


def test_stationary_n0(fig2_spec):
    absorption = port_coefficients(fig2_spec, ObjectState.PRESENT).A
    assert optimize.stationary_n0(absorption) == pytest.approx(26.189, rel=1e-3)
    assert optimize.stationary_n0(absorption) == pytest.approx(-0.5 / math.log(1 - absorption))
    assert optimize.stationary_n0(1.0) == 0.0


def test_stationary_n0_without_absorption():
    with pytest.raises(UnboundedInN0):
        optimize.stationary_n0(0.0)


@pytest.mark.parametrize("port", list(Port))
def test_optimal_n0_at_xi(fig2_spec, detector, port):
    n0_star, zeta_star = optimize.optimal_n0_at_xi(fig2_spec, detector, port, 0.5)

    assert n0_star == pytest.approx(26.189, rel=1e-3)
    point = OperatingPoint(xi=0.5, n0=n0_star)
    assert zeta_star == pytest.approx(metrics.zeta(fig2_spec, detector, port, point), rel=1e-12)
    # No photon number on a fine grid does better
    for n0 in np.linspace(0.5, 200.0, 400):
        point = OperatingPoint(xi=0.5, n0=float(n0))
        assert metrics.zeta(fig2_spec, detector, port, point) <= zeta_star * (1 + 1e-12)


def test_optimal_n0_at_xi_without_absorption(no_object_spec, detector):
    with pytest.raises(UnboundedInN0) as excinfo:
        optimize.optimal_n0_at_xi(no_object_spec, detector, Port.TRANSMISSION, 0.5)
    msg = "No absorption at xi = 0.5, the merit product grows without bound in N0"
    assert msg == str(excinfo.value)


def test_optimal_n0_at_xi_matches_grid_search_random_specs():
    rng = np.random.default_rng(11)
    n0_grid = np.geomspace(0.1, 1e5, 1000)
    checked = 0
    while checked < 50:
        spec, det = random_spec(rng), random_detector(rng)
        absorption = port_coefficients(spec, ObjectState.PRESENT).A
        if not 1e-4 <= absorption <= 0.3:
            continue
        port = Port.TRANSMISSION if rng.uniform() < 0.5 else Port.REFLECTION
        if metrics.snr(spec, det, port, 1.0) < 1e-12:
            continue
        checked += 1
        zeta_grid = (
            metrics.snr(spec, det, port, 1.0)
            * np.sqrt(n0_grid)
            * metrics.total_security(spec, 1.0) ** n0_grid
        )
        n0_star, zeta_star = optimize.optimal_n0_at_xi(spec, det, port, spec.xi)
        k = int(np.argmax(zeta_grid))
        assert n0_grid[k - 1] <= n0_star <= n0_grid[k + 1]
        assert zeta_star >= zeta_grid.max() * (1 - 1e-12)


def test_optimal_n0_headline_system_grid_search(fig2_spec, detector):
    n0_grid = np.linspace(1.0, 100.0, 991)
    zeta_grid = [
        metrics.zeta(fig2_spec, detector, Port.TRANSMISSION, OperatingPoint(0.5, float(n0)))
        for n0 in n0_grid
    ]
    n0_star, _ = optimize.optimal_n0_at_xi(fig2_spec, detector, Port.TRANSMISSION, 0.5)

    assert n0_grid[int(np.argmax(zeta_grid))] == pytest.approx(26.2, abs=0.5)
    assert n0_star == pytest.approx(26.2, abs=0.5)


# Maximization over the coupling efficiency ----------------------------------------------------


def test_conditional_maximum_transmission(fig2_spec, detector):
    report = optimize.maximize_zeta(fig2_spec, detector, Port.TRANSMISSION, CONDITIONS)

    assert report.feasible
    assert Port.TRANSMISSION == report.port
    # Strongly undercoupled
    assert report.xi_star == pytest.approx(0.03, abs=0.02)
    assert report.eta_tot_at_star >= 0.85 * (1 - 1e-9)
    assert report.snr_at_star >= 2.0 * (1 - 1e-9)
    assert report.zeta_star == pytest.approx(report.snr_at_star * report.eta_tot_at_star)


def test_conditional_maximum_reflection(fig2_spec, detector):
    report = optimize.maximize_zeta(fig2_spec, detector, Port.REFLECTION, CONDITIONS)

    assert report.feasible
    assert report.xi_star == pytest.approx(0.4, abs=0.05)
    assert report.eta_tot_at_star >= 0.85 * (1 - 1e-9)
    assert report.snr_at_star >= 2.0 * (1 - 1e-9)


def test_conditional_maximum_transmission_beats_reflection(fig2_spec, detector):
    reflection = optimize.maximize_zeta(fig2_spec, detector, Port.REFLECTION, CONDITIONS)
    transmission = optimize.maximize_zeta(fig2_spec, detector, Port.TRANSMISSION, CONDITIONS)
    assert transmission.zeta_star >= reflection.zeta_star


@pytest.mark.parametrize("port", list(Port))
def test_global_maximum_dominates_conditional(fig2_spec, detector, port):
    unconstrained = optimize.maximize_zeta(fig2_spec, detector, port)
    conditional = optimize.maximize_zeta(fig2_spec, detector, port, CONDITIONS)

    assert unconstrained.feasible
    assert unconstrained.zeta_star >= conditional.zeta_star
    assert 1.0 <= unconstrained.n0_star <= 1000.0


@pytest.mark.parametrize("port", list(Port))
def test_infeasible_constraints(fig2_spec, detector, port):
    constraints = Constraints(min_eta_tot=0.999, min_snr=10.0)
    report = optimize.maximize_zeta(fig2_spec, detector, port, constraints)
    unconstrained = optimize.maximize_zeta(fig2_spec, detector, port)

    assert not report.feasible
    assert unconstrained.xi_star == report.xi_star
    assert unconstrained.zeta_star == report.zeta_star


def test_transmission_security_dominates_along_snr_curve(fig2_spec, detector):
    snr_grid = np.linspace(0.0, 5.0, 100)
    curves = {}
    for port in Port:
        report = optimize.maximize_zeta(fig2_spec, detector, port, CONDITIONS)
        spec = fig2_spec.with_xi(report.xi_star)
        curves[port] = metrics.security_vs_snr_curve(spec, detector, port, snr_grid)

    assert curves[Port.TRANSMISSION][0] == (0.0, 1.0)
    for (s_t, eta_t), (s_r, eta_r) in zip(curves[Port.TRANSMISSION], curves[Port.REFLECTION]):
        assert s_t == s_r
        assert eta_t >= eta_r * (1 - 1e-12)


@pytest.mark.parametrize("port", list(Port))
def test_tighter_security_bound_never_raises_maximum(fig2_spec, detector, port):
    reports = [
        optimize.maximize_zeta(
            fig2_spec, detector, port, Constraints(min_eta_tot=float(min_eta), min_snr=2.0)
        )
        for min_eta in np.linspace(0.5, 0.99, 30)
    ]
    flags = [report.feasible for report in reports]

    assert flags[0]
    # Once infeasible, every tighter bound stays infeasible
    assert flags == sorted(flags, reverse=True)
    feasible = [report.zeta_star for report in reports if report.feasible]
    for looser, tighter in zip(feasible, feasible[1:]):
        assert tighter <= looser * (1 + 1e-11)


def test_conditional_maximum_satisfies_bounds_random_systems(fig2_spec, detector):
    rng = np.random.default_rng(5)
    xi_grid = Axis.linear("xi", 0.001, 0.999, 200)
    checked = 0
    for _ in range(60):
        spec = random_spec(
            rng,
            kappa_A=fig2_spec.kappa_A,
            kappa_3=fig2_spec.kappa_3 * 10.0 ** rng.uniform(-0.5, 0.5),
            delta_A=0.0,
            delta_P=fig2_spec.delta_P * 10.0 ** rng.uniform(-0.5, 0.5),
            epsilon_A=1.0,
            epsilon_P=float(rng.uniform(0.1, 0.4)),
        )
        constraints = Constraints(
            min_eta_tot=float(rng.uniform(0.6, 0.85)), min_snr=float(rng.uniform(0.5, 1.5))
        )
        for port in Port:
            report = optimize.maximize_zeta(spec, detector, port, constraints, xi_grid)
            if not report.feasible:
                continue
            checked += 1
            at_star = spec.with_xi(report.xi_star)
            snr = metrics.snr(at_star, detector, port, report.n0_star)
            eta_tot = metrics.total_security(at_star, report.n0_star)
            assert eta_tot >= constraints.min_eta_tot * (1 - 1e-9)
            assert snr >= constraints.min_snr * (1 - 1e-9)
            assert report.zeta_star == pytest.approx(snr * eta_tot, rel=1e-12)
    assert checked >= 10


def test_single_grid_point_matches_optimal_n0(fig2_spec, detector):
    report = optimize.maximize_zeta(fig2_spec, detector, Port.TRANSMISSION, xi_grid=[0.5])
    n0_star, zeta_star = optimize.optimal_n0_at_xi(fig2_spec, detector, Port.TRANSMISSION, 0.5)

    assert 0.5 == report.xi_star
    assert n0_star == report.n0_star
    assert zeta_star == report.zeta_star


def test_photon_number_clamped_to_range(fig2_spec, detector):
    report = optimize.maximize_zeta(
        fig2_spec, detector, Port.TRANSMISSION, xi_grid=[0.5], n0_range=(1.0, 10.0)
    )
    assert 10.0 == report.n0_star


def test_ties_broken_toward_critical_coupling(no_object_spec, detector):
    # Without object nothing can be detected, every grid point gives ζ = 0
    report = optimize.maximize_zeta(
        no_object_spec, detector, Port.TRANSMISSION, xi_grid=[0.1, 0.45, 0.7]
    )
    assert 0.45 == report.xi_star
    assert 0.0 == report.zeta_star


def test_port_without_counts_scores_zero(no_object_spec):
    # Critically coupled and on resonance, nothing is reflected and there are no dark counts
    det = DetectorSpec(chi=0.5, dark_ratio=0.0)
    report = optimize.maximize_zeta(no_object_spec, det, Port.REFLECTION, xi_grid=[0.3, 0.5])

    assert 0.5 == report.xi_star
    assert 0.0 == report.zeta_star
    assert 0.0 == report.snr_at_star
    with pytest.raises(DegenerateNoise):
        metrics.snr(no_object_spec, det, Port.REFLECTION, 10.0)


def test_maximize_zeta_empty_grid(fig2_spec, detector):
    with pytest.raises(EmptyGrid) as excinfo:
        optimize.maximize_zeta(fig2_spec, detector, Port.TRANSMISSION, xi_grid=[])
    assert "Axis xi has no grid points" == str(excinfo.value)


def test_maximize_zeta_invalid_n0_range(fig2_spec, detector):
    with pytest.raises(InvalidSpec) as excinfo:
        optimize.maximize_zeta(fig2_spec, detector, Port.TRANSMISSION, n0_range=(5.0, 1.0))
    assert "n0_range" == excinfo.value.field


# Sweeps ---------------------------------------------------------------------------------------


def test_sweep_xi(fig2_spec, detector):
    grid = optimize.sweep_xi(fig2_spec, detector, [5, 55])

    assert (500, 2) == grid.shape
    assert ("xi", "n0") == tuple(axis.name for axis in grid.axes)
    assert OperatingPoint(xi=0.001, n0=55.0) == grid.cell(0, 1).point
    assert "created" in grid.metadata
    # The transmission SNR is largest for a critically coupled cavity
    snr = grid.to_array(lambda bundle: bundle.snr_for(Port.TRANSMISSION))
    xi_values = np.asarray(grid.axes[0].values)
    assert xi_values[np.argmax(snr[:, 0])] == pytest.approx(0.5, abs=0.002)
    assert xi_values[np.argmax(snr[:, 1])] == pytest.approx(0.5, abs=0.002)


def test_sweep_xi_cells_match_metrics(fig2_spec, detector):
    grid = optimize.sweep_xi(fig2_spec, detector, [5], xi_grid=[0.5])
    bundle = grid.cell(0, 0)

    assert bundle.snr_for(Port.TRANSMISSION) == pytest.approx(1.52705, rel=1e-4)
    assert bundle.eta_tot == pytest.approx(0.908952, rel=1e-4)


def test_sweep_xi_plane(fig2_spec, detector):
    n0_axis = Axis.log("n0", 1.0, 1000.0, 4)
    grid = optimize.sweep_xi(fig2_spec, detector, n0_axis, xi_grid=[0.25, 0.5])

    assert (2, 4) == grid.shape
    assert "log" == grid.axes[1].scale
    assert grid.cell(1, 3).point.n0 == pytest.approx(1000.0)


def test_sweep_xi_independent_of_threads(fig2_spec, detectors):
    xi_grid = Axis.linear("xi", 0.01, 0.99, 50)
    single = optimize.sweep_xi(fig2_spec, detectors, [5, 55], xi_grid, threads=1)
    multi = optimize.sweep_xi(fig2_spec, detectors, [5, 55], xi_grid, threads=4)
    assert single.cells == multi.cells


def test_sweep_xi_invalid_threads(fig2_spec, detector):
    with pytest.raises(InvalidSpec) as excinfo:
        optimize.sweep_xi(fig2_spec, detector, [5], threads=0)
    assert "threads" == excinfo.value.field


def test_sweep_xi_empty_n0_values(fig2_spec, detector):
    with pytest.raises(EmptyGrid) as excinfo:
        optimize.sweep_xi(fig2_spec, detector, [])
    assert "Axis n0 has no grid points" == str(excinfo.value)


def test_regime_map(fig2_spec, detectors):
    kappa3_axis = Axis.log("kappa3", 1.5e4, 1.5e10, 3)
    deltap_axis = Axis.log("deltap", 1.5e4, 1.5e10, 3)
    regime_map = optimize.sweep_kappa3_deltaP(fig2_spec, detectors, kappa3_axis, deltap_axis)

    assert set(Port) == set(regime_map.grids)
    for port in Port:
        xi_star = regime_map.argmax_xi_maps[port]
        zeta_star = regime_map.max_value_maps[port]
        assert (3, 3) == xi_star.shape
        assert np.all((xi_star > 0.0) & (xi_star < 1.0))
        assert np.all(zeta_star >= 0.0)
        assert all(report.feasible for report in regime_map.grids[port].cells)


def test_regime_map_headline_row(fig2_spec, detectors):
    rates = [1.5e4, 1.5e7, 1.5e10]
    regime_map = optimize.sweep_kappa3_deltaP(fig2_spec, detectors, rates, rates)
    xi_t = regime_map.argmax_xi_maps[Port.TRANSMISSION]
    xi_r = regime_map.argmax_xi_maps[Port.REFLECTION]
    zeta_t = regime_map.max_value_maps[Port.TRANSMISSION]
    zeta_r = regime_map.max_value_maps[Port.REFLECTION]

    # κ₃ comparable to κ_A: transmission strongly undercoupled, reflection closer to critical
    for j, (expected_t, expected_r) in enumerate([(1.22, 0.91), (1.79, 1.36)]):
        assert xi_t[1, j] == pytest.approx(0.03, abs=0.01)
        assert xi_r[1, j] == pytest.approx(0.39, abs=0.03)
        assert zeta_t[1, j] == pytest.approx(expected_t, rel=0.02)
        assert zeta_r[1, j] == pytest.approx(expected_r, rel=0.02)
        assert zeta_t[1, j] > zeta_r[1, j]
    # Far detuned object: hardly any absorption, the photon number is capped and the empty
    # cavity's critical coupling wins
    for i in (0, 1):
        assert xi_t[i, 2] == pytest.approx(0.499, abs=0.002)
        assert xi_r[i, 2] == pytest.approx(0.499, abs=0.002)
    # Strongly absorbing object close to resonance
    assert xi_t[2, 0] == pytest.approx(0.325, abs=0.004)
    assert xi_t[2, 1] == pytest.approx(0.325, abs=0.004)


def test_regime_map_cell_matches_maximize_zeta(fig2_spec, detectors):
    regime_map = optimize.sweep_kappa3_deltaP(
        fig2_spec, detectors, [6.5e6], [2e7], constraints=CONDITIONS
    )

    for port in Port:
        expected = optimize.maximize_zeta(fig2_spec, detectors.for_port(port), port, CONDITIONS)
        assert expected == regime_map.grids[port].cell(0, 0)
        assert "kappa3" == regime_map.grids[port].axes[0].name
        assert "constraints" in regime_map.grids[port].metadata


def test_regime_map_independent_of_threads(fig2_spec, detectors):
    xi_grid = Axis.linear("xi", 0.01, 0.99, 50)
    args = (fig2_spec, detectors, [1.5e6, 1.5e8], [1.5e6, 1.5e8], CONDITIONS, xi_grid)
    single = optimize.sweep_kappa3_deltaP(*args, threads=1)
    multi = optimize.sweep_kappa3_deltaP(*args, threads=3)

    for port in Port:
        assert single.grids[port].cells == multi.grids[port].cells


def test_regime_map_empty_grid(fig2_spec, detectors):
    with pytest.raises(EmptyGrid) as excinfo:
        optimize.sweep_kappa3_deltaP(fig2_spec, detectors, [], [2e7])
    assert "Axis kappa3 has no grid points" == str(excinfo.value)
