"""Acceptance suite.

Each test implements one acceptance criterion at its stated tolerance and
prints a pass line; run with `pytest tests/test_acceptance.py -v -s` to see
one line per criterion.
"""

import filecmp
import math

import numpy as np
import pytest

from unruh_eur.cli import main
from unruh_eur.discord import brute_force_missing_information, correlation_point
from unruh_eur.lindblad import (
    KossakowskiParams,
    fixed_point_residual,
    integrate,
    liouvillian_from_params,
    pauli_correlation,
    thermal_kossakowski,
)
from unruh_eur.qstate import bell_singlet, random_density, von_neumann_entropy
from unruh_eur.stationary import gamma_from_temperature, stationary_xstate, xstate_to_density
from unruh_eur.sweep import SweepConfig, run_sweep, temperature_grid
from unruh_eur.uncertainty import (
    conditional_entropy_after_measurement,
    conditional_entropy_x_closed,
    conditional_entropy_z_closed,
    eur_point,
    joint_entropy,
)
from unruh_eur.verify import interior_minimum_margin, monotone_violation

DELTA0_WIDE = (-3.0, -2.0, -1.0, 0.0, 0.5, 1.0)


def _report(number: int, text: str) -> None:
    print(f"[acceptance] criterion {number:2d} PASS: {text}")


@pytest.fixture(scope="module")
def default_sweep():
    """The default 3 x 200 sweep, computed once and reused across criteria."""
    config = SweepConfig()
    return config, run_sweep(config)


def test_c01_singlet_anchor():
    singlet = bell_singlet()
    for temperature in np.linspace(0.0, 4.0, 20):
        gamma = gamma_from_temperature(1.0, float(temperature))
        state = stationary_xstate(-3.0, gamma)
        rho = xstate_to_density(state)
        assert float(np.max(np.abs(rho - singlet))) <= 1e-12
        point = eur_point(state)
        assert abs(point.uncertainty) <= 1e-10
        assert abs(point.bound) <= 1e-10
        assert abs(point.tightness) <= 1e-10
        corr = correlation_point(rho)
        assert abs(corr.discord - 1.0) <= 1e-10
        assert abs(corr.missing_info) <= 1e-10
    _report(1, "singlet stationary state with U = B = delta = 0, D = 1, M = 0")


def test_c02_zero_temperature_saturation():
    point = eur_point(stationary_xstate(1.0, gamma_from_temperature(1.0, 0.0)))
    assert abs(point.uncertainty - 1.0) <= 1e-10
    assert abs(point.bound - 1.0) <= 1e-10
    assert abs(point.tightness) <= 1e-10
    _report(2, "delta0 = 1 saturates the relation in the T = 0 limit")


def test_c03_high_temperature_limit():
    state = stationary_xstate(0.0, 0.0)
    rho = xstate_to_density(state)
    assert float(np.max(np.abs(rho - np.eye(4) / 4))) <= 1e-9
    point = eur_point(state)
    assert abs(point.uncertainty - 2.0) <= 1e-9
    assert abs(point.bound - 2.0) <= 1e-9
    assert abs(point.tightness) <= 1e-9
    corr = correlation_point(rho)
    assert abs(corr.discord) <= 1e-9
    assert abs(corr.missing_info - 1.0) <= 1e-9
    _report(3, "gamma = 0, delta0 = 0 gives the maximally mixed anchor")


def test_c04_discord_decomposition_identity(default_sweep):
    _, results = default_sweep
    worst = 0.0
    count = 0
    for rows in results.values():
        for row in rows:
            direct = row.bound
            rewritten = 1.0 + row.missing_info - row.discord
            worst = max(worst, abs(direct - rewritten))
            count += 1
    assert count == 600
    assert worst <= 1e-6
    _report(4, f"bound decomposition identity holds at {count} points (max {worst:.2e})")


def test_c05_eur_validity_wide_grid():
    worst = math.inf
    for delta0 in DELTA0_WIDE:
        for temperature in np.linspace(0.02, 4.0, 200):
            point = eur_point(stationary_xstate(delta0, gamma_from_temperature(1.0, float(temperature))))
            worst = min(worst, point.tightness)
    assert worst >= -1e-9
    _report(5, f"tightness >= -1e-9 on the wide grid (min {worst:.2e})")


def test_c06_uncertainty_shapes(default_sweep):
    _, results = default_sweep
    u_curves = {d0: [r.uncertainty for r in rows] for d0, rows in results.items()}
    t_curves = {d0: [r.tightness for r in rows] for d0, rows in results.items()}
    assert monotone_violation(u_curves[-1.0], increasing=True) <= 1e-9
    assert monotone_violation(t_curves[-1.0], increasing=False) <= 1e-9
    assert interior_minimum_margin(t_curves[0.5]) > 1e-6
    assert t_curves[1.0][0] <= 1e-9
    assert monotone_violation(t_curves[1.0], increasing=True) <= 1e-9
    _report(6, "uncertainty and tightness curves have the panel shapes")


def test_c07_correlation_shapes(default_sweep):
    _, results = default_sweep
    d_curves = {d0: [r.discord for r in rows] for d0, rows in results.items()}
    m_curves = {d0: [r.missing_info for r in rows] for d0, rows in results.items()}
    assert monotone_violation(d_curves[-1.0], increasing=False) <= 1e-9
    assert monotone_violation(m_curves[-1.0], increasing=True) <= 1e-9
    assert interior_minimum_margin(d_curves[0.5]) > 1e-6
    assert monotone_violation(m_curves[0.5], increasing=True) <= 1e-9
    assert monotone_violation(d_curves[1.0], increasing=True) <= 1e-9
    assert monotone_violation(m_curves[1.0], increasing=True) <= 1e-9
    _report(7, "discord and missing-information curves have the panel shapes")


def test_c08_lindblad_fixed_point():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(30):
        delta0 = float(rng.uniform(-3.0, 1.0))
        gamma = float(rng.uniform(0.0, 1.0))
        scale = float(rng.uniform(0.2, 3.0))
        rho = xstate_to_density(stationary_xstate(delta0, gamma))
        for gamma_zero in (0.0, 0.4 * scale, -0.3 * scale):
            params = KossakowskiParams(gamma_plus=scale, gamma_minus=gamma * scale,
                                       gamma_zero=gamma_zero, omega_tilde=1.0)
            residual = fixed_point_residual(liouvillian_from_params(params), rho)
            worst = max(worst, residual)
    assert worst <= 1e-10
    _report(8, f"stationary state annihilated for 30 pairs x 3 gamma_zero (max {worst:.2e})")


def test_c09_dynamics_convergence_and_conservation():
    rng = np.random.default_rng(7)
    params = thermal_kossakowski(1.0, 1.0)
    liouvillian = liouvillian_from_params(params)
    dtau = 0.01 / params.gamma_plus
    worst_distance = 0.0
    worst_drift = 0.0
    for _ in range(10):
        rho0 = random_density(rng, 4)
        delta0 = pauli_correlation(rho0)
        target = xstate_to_density(stationary_xstate(delta0, params.ratio))
        trajectory = integrate(liouvillian, rho0, 100.0 / params.gamma_plus, dtau,
                               sample_stride=100)
        worst_drift = max(worst_drift, max(
            abs(pauli_correlation(s) - delta0) for s in trajectory.states))
        worst_distance = max(worst_distance,
                             float(np.linalg.norm(trajectory.final_state() - target)))
    assert worst_distance <= 1e-6
    assert worst_drift <= 1e-8
    _report(9, f"10 random states converge (max dist {worst_distance:.2e}, "
               f"max drift {worst_drift:.2e})")


def test_c10_optimizer_against_dense_grid(default_sweep):
    config, results = default_sweep
    temperatures = temperature_grid(config)
    rng = np.random.default_rng(99)
    worst = 0.0
    for _ in range(20):
        delta0 = float(rng.choice(config.delta0_list))
        index = int(rng.integers(0, len(temperatures)))
        row = results[delta0][index]
        rho = xstate_to_density(stationary_xstate(delta0, row.gamma))
        brute, _, _ = brute_force_missing_information(rho, resolution=512)
        worst = max(worst, abs(row.missing_info - brute))
    assert worst <= 1e-6
    _report(10, f"optimizer matches the 512x512 grid on 20 spot points (max {worst:.2e})")


def test_c11_route_agreement_on_sweep_grid(default_sweep):
    config, results = default_sweep
    worst = 0.0
    for delta0, rows in results.items():
        for row in rows:
            state = stationary_xstate(delta0, row.gamma)
            rho = xstate_to_density(state)
            worst = max(worst, abs(conditional_entropy_after_measurement(rho, "x")
                                   - conditional_entropy_x_closed(state)))
            worst = max(worst, abs(conditional_entropy_after_measurement(rho, "z")
                                   - conditional_entropy_z_closed(state)))
            worst = max(worst, abs(von_neumann_entropy(rho) - joint_entropy(state)))
    assert worst <= 1e-10
    _report(11, f"closed forms match the eigensolver at all 600 points (max {worst:.2e})")


def test_c12_sweep_determinism(tmp_path):
    first = tmp_path / "run1"
    second = tmp_path / "run2"
    assert main(["sweep", "--out-dir", str(first)]) == 0
    assert main(["sweep", "--out-dir", str(second)]) == 0
    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    for name in names:
        assert filecmp.cmp(first / name, second / name, shallow=False), name
        assert (first / name).read_bytes() == (second / name).read_bytes()
    _report(12, f"two default sweep runs are byte-identical across {len(names)} files")
