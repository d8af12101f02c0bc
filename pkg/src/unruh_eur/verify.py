"""Cross-module invariant suite.

Every check returns a CheckResult with the worst observed residual and its
tolerance; the CLI `verify` subcommand renders them as a table and fails if
any check fails.  The default sizes keep the whole suite at desk scale
(a few seconds); `full=True` runs the same checks on the full grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import discord as discord_mod
from . import lindblad as lindblad_mod
from .qstate import (
    BlochProjector,
    bell_singlet,
    binary_entropy,
    dephase,
    measure_subsystem,
    partial_trace,
    random_density,
    validate_state,
    von_neumann_entropy,
)
from .stationary import (
    algebraic_residuals,
    bloch_components,
    bloch_from_xstate,
    gamma_from_temperature,
    stationary_xstate,
    xstate_from_bloch,
    xstate_to_density,
)
from .uncertainty import (
    conditional_entropy_after_measurement,
    conditional_entropy_x_closed,
    conditional_entropy_z_closed,
    eur_point,
    joint_entropy,
)

DELTA0_PANEL = (-1.0, 0.5, 1.0)
DELTA0_WIDE = (-3.0, -2.0, -1.0, 0.0, 0.5, 1.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def monotone_violation(values, increasing: bool) -> float:
    """Largest step against the claimed direction (0 for a clean monotone run)."""
    arr = np.asarray(values, dtype=float)
    diffs = np.diff(arr)
    worst = float((-diffs).max() if increasing else diffs.max())
    return max(0.0, worst)


def interior_minimum_margin(values) -> float:
    """How clearly the minimum sits inside the range.

    Positive when the argmin is interior: the smaller of the two
    endpoint-to-minimum drops.  Non-positive when the minimum is attained
    at an endpoint.
    """
    arr = np.asarray(values, dtype=float)
    k = int(np.argmin(arr))
    if k == 0 or k == len(arr) - 1:
        return 0.0
    return float(min(arr[0], arr[-1]) - arr[k])


def _delta_gamma_grid(n_delta0: int = 13, n_gamma: int = 21):
    for delta0 in np.linspace(-3.0, 1.0, n_delta0):
        for gamma in np.linspace(0.0, 1.0, n_gamma):
            yield float(delta0), float(gamma)


def check_stationary_algebra(n_delta0: int = 13, n_gamma: int = 21) -> CheckResult:
    worst = 0.0
    for delta0, gamma in _delta_gamma_grid(n_delta0, n_gamma):
        residuals = algebraic_residuals(bloch_components(delta0, gamma), delta0, gamma)
        worst = max(worst, max(abs(r) for r in residuals))
    return CheckResult("stationary-algebra", worst, 1e-12)


def check_bloch_xstate_map(n_delta0: int = 13, n_gamma: int = 21) -> CheckResult:
    worst = 0.0
    for delta0, gamma in _delta_gamma_grid(n_delta0, n_gamma):
        direct = stationary_xstate(delta0, gamma)
        mapped = xstate_from_bloch(bloch_components(delta0, gamma))
        worst = max(worst, abs(direct.x - mapped.x), abs(direct.y - mapped.y),
                    abs(direct.z - mapped.z), abs(direct.d - mapped.d))
    return CheckResult("bloch-xstate-map", worst, 1e-12)


def stationary_identity_residual(delta0: float, gamma: float, state) -> float:
    """Max stationarity-condition residual of a claimed stationary XState.

    Used both by the suite and as a mutation probe: any tampering with the
    coefficients (for instance a sign flip of d) shows up here.
    """
    residuals = algebraic_residuals(bloch_from_xstate(state), delta0, gamma)
    return max(abs(r) for r in residuals)


def check_xstate_positivity(n_delta0: int = 13, n_gamma: int = 21) -> CheckResult:
    worst = 0.0
    for delta0, gamma in _delta_gamma_grid(n_delta0, n_gamma):
        state = stationary_xstate(delta0, gamma)
        margin = min(state.x, state.z, state.y - abs(state.d))
        worst = max(worst, -margin)
        worst = max(worst, abs(state.x + 2 * state.y + state.z - 1.0))
    return CheckResult("xstate-positivity", worst, 1e-12)


def check_xstate_limits() -> CheckResult:
    worst = 0.0
    for delta0 in np.linspace(-3.0, 1.0, 9):
        hot = stationary_xstate(float(delta0), 0.0)
        worst = max(worst, abs(hot.x - hot.z))
    reference = stationary_xstate(-3.0, 0.0)
    for gamma in np.linspace(0.0, 1.0, 11):
        state = stationary_xstate(-3.0, float(gamma))
        worst = max(worst, abs(state.x - reference.x), abs(state.y - reference.y),
                    abs(state.z - reference.z), abs(state.d - reference.d))
    return CheckResult("xstate-limits", worst, 1e-12)


def check_xstate_monotonicity(t_count: int = 50) -> CheckResult:
    temps = np.linspace(0.01, 4.0, t_count)
    worst = 0.0
    for delta0 in (-2.0, -1.0, 0.0, 0.5, 1.0):
        states = [stationary_xstate(delta0, gamma_from_temperature(1.0, float(t))) for t in temps]
        worst = max(worst, monotone_violation([s.x for s in states], increasing=True))
        worst = max(worst, monotone_violation([s.z for s in states], increasing=False))
    return CheckResult("xstate-monotonicity", worst, 1e-12)


def _sample_states(count: int, seed: int = 11) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    states = [
        bell_singlet(),
        np.eye(4, dtype=complex) / 4,
        xstate_to_density(stationary_xstate(0.5, 0.4)),
    ]
    states += [random_density(rng, 4) for _ in range(count)]
    return states


def check_measurement_reassembly(count: int = 5) -> CheckResult:
    worst = 0.0
    bases = ["x", "z", BlochProjector(1.1, 2.3), BlochProjector(2.8, 0.4)]
    for rho in _sample_states(count):
        for which in ("A", "B"):
            for basis in bases:
                outcomes = measure_subsystem(rho, which, basis)
                total_p = sum(p for p, _ in outcomes)
                worst = max(worst, abs(total_p - 1.0))
                mix = -sum(p * math.log2(p) for p, _ in outcomes if p > 1e-14)
                mix += sum(p * von_neumann_entropy(c) for p, c in outcomes if c is not None)
                dephased_entropy = von_neumann_entropy(dephase(rho, which, basis))
                worst = max(worst, abs(dephased_entropy - mix))
    return CheckResult("measurement-reassembly", worst, 1e-10)


def check_entropy_range(count: int = 8) -> CheckResult:
    worst = 0.0
    for rho in _sample_states(count):
        s = von_neumann_entropy(rho)
        worst = max(worst, -s, s - 2.0)
        for side in ("A", "B"):
            s1 = von_neumann_entropy(partial_trace(rho, side))
            worst = max(worst, -s1, s1 - 1.0)
    return CheckResult("entropy-range", worst, 1e-12)


def check_partial_trace_product() -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(5):
        rho_a = random_density(rng, 2)
        rho_b = random_density(rng, 2)
        product = np.kron(rho_a, rho_b)
        worst = max(worst, float(np.max(np.abs(partial_trace(product, "A") - rho_a))))
        worst = max(worst, float(np.max(np.abs(partial_trace(product, "B") - rho_b))))
    return CheckResult("partial-trace-product", worst, 1e-12)


def _temperatures(t_count: int) -> np.ndarray:
    return np.linspace(4.0 / t_count, 4.0, t_count)


def check_eur_validity(t_count: int = 40) -> CheckResult:
    worst = 0.0
    for delta0 in DELTA0_WIDE:
        for t in _temperatures(t_count):
            point = eur_point(stationary_xstate(delta0, gamma_from_temperature(1.0, float(t))))
            worst = max(worst, -point.tightness)
    return CheckResult("eur-validity", worst, 1e-9)


def check_entropy_route_agreement(t_count: int = 40) -> CheckResult:
    worst = 0.0
    for delta0 in DELTA0_WIDE:
        for t in _temperatures(t_count):
            state = stationary_xstate(delta0, gamma_from_temperature(1.0, float(t)))
            rho = xstate_to_density(state)
            worst = max(worst, abs(
                conditional_entropy_after_measurement(rho, "x") - conditional_entropy_x_closed(state)))
            worst = max(worst, abs(
                conditional_entropy_after_measurement(rho, "z") - conditional_entropy_z_closed(state)))
            worst = max(worst, abs(von_neumann_entropy(rho) - joint_entropy(state)))
    return CheckResult("entropy-route-agreement", worst, 1e-10)


def check_exchange_symmetry(t_count: int = 10) -> CheckResult:
    worst = 0.0
    for delta0 in DELTA0_PANEL:
        for t in _temperatures(t_count):
            rho = xstate_to_density(stationary_xstate(delta0, gamma_from_temperature(1.0, float(t))))
            for basis in ("x", "z"):
                worst = max(worst, abs(
                    conditional_entropy_after_measurement(rho, basis, measured="A")
                    - conditional_entropy_after_measurement(rho, basis, measured="B")))
    return CheckResult("exchange-symmetry", worst, 1e-10)


def _panel_curves(t_count: int, with_correlations: bool):
    temps = np.linspace(0.01, 4.0, t_count)
    curves = {}
    for delta0 in DELTA0_PANEL:
        rows = []
        for t in temps:
            state = stationary_xstate(delta0, gamma_from_temperature(1.0, float(t)))
            point = eur_point(state)
            entry = {"U": point.uncertainty, "tightness": point.tightness}
            if with_correlations:
                corr = discord_mod.correlation_point(xstate_to_density(state))
                entry["D"] = corr.discord
                entry["M"] = corr.missing_info
            rows.append(entry)
        curves[delta0] = {key: [r[key] for r in rows] for key in rows[0]}
    return curves


def check_uncertainty_shapes(t_count: int = 60) -> CheckResult:
    """Panel shapes of U and tightness versus temperature."""
    curves = _panel_curves(t_count, with_correlations=False)
    slack = 1e-9
    failures = []
    for delta0 in DELTA0_PANEL:
        if monotone_violation(curves[delta0]["U"], increasing=True) > slack:
            failures.append(f"U not nondecreasing at delta0={delta0}")
    if monotone_violation(curves[-1.0]["tightness"], increasing=False) > slack:
        failures.append("tightness not nonincreasing at delta0=-1")
    if interior_minimum_margin(curves[0.5]["tightness"]) <= 1e-6:
        failures.append("tightness lacks interior minimum at delta0=0.5")
    if monotone_violation(curves[1.0]["tightness"], increasing=True) > slack:
        failures.append("tightness not nondecreasing at delta0=1")
    if curves[1.0]["tightness"][0] > 1e-6:
        failures.append("tightness does not start near 0 at delta0=1")
    return CheckResult("uncertainty-shapes", float(len(failures)), 0.5,
                       note="; ".join(failures))


def check_correlation_shapes(t_count: int = 40) -> CheckResult:
    """Panel shapes of discord and missing information versus temperature."""
    curves = _panel_curves(t_count, with_correlations=True)
    slack = 1e-9
    failures = []
    if monotone_violation(curves[-1.0]["D"], increasing=False) > slack:
        failures.append("D not nonincreasing at delta0=-1")
    if interior_minimum_margin(curves[0.5]["D"]) <= 1e-6:
        failures.append("D lacks interior minimum at delta0=0.5")
    if monotone_violation(curves[1.0]["D"], increasing=True) > slack:
        failures.append("D not nondecreasing at delta0=1")
    for delta0 in DELTA0_PANEL:
        if monotone_violation(curves[delta0]["M"], increasing=True) > slack:
            failures.append(f"M not nondecreasing at delta0={delta0}")
    return CheckResult("correlation-shapes", float(len(failures)), 0.5,
                       note="; ".join(failures))


def check_bdm_identity(t_count: int = 40) -> CheckResult:
    worst = 0.0
    for delta0 in DELTA0_PANEL:
        for t in _temperatures(t_count):
            state = stationary_xstate(delta0, gamma_from_temperature(1.0, float(t)))
            rho = xstate_to_density(state)
            point = eur_point(state)
            corr = discord_mod.correlation_point(rho)
            rewritten = discord_mod.bound_via_discord(0.5, corr.missing_info, corr.discord)
            worst = max(worst, abs(point.bound - rewritten))
    return CheckResult("bound-discord-identity", worst, 1e-6)


def check_discord_nonnegativity(t_count: int = 15) -> CheckResult:
    worst = 0.0
    for delta0 in DELTA0_WIDE:
        for t in _temperatures(t_count):
            rho = xstate_to_density(stationary_xstate(delta0, gamma_from_temperature(1.0, float(t))))
            corr = discord_mod.correlation_point(rho)
            worst = max(worst, -corr.discord)
    return CheckResult("discord-nonnegativity", worst, 1e-9)


def check_optimizer_vs_bruteforce(points: int = 4, resolution: int = 512, seed: int = 5) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(points):
        delta0 = float(rng.choice(DELTA0_PANEL))
        t = float(rng.uniform(0.01, 4.0))
        rho = xstate_to_density(stationary_xstate(delta0, gamma_from_temperature(1.0, t)))
        refined, _ = discord_mod.minimal_missing_information(rho)
        brute, _, _ = discord_mod.brute_force_missing_information(rho, resolution)
        worst = max(worst, abs(refined - brute))
    return CheckResult("optimizer-vs-bruteforce", worst, 1e-6)


def check_projector_relabeling(count: int = 4, seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for rho in _sample_states(count, seed=17):
        for _ in range(6):
            theta = float(rng.uniform(0, math.pi))
            phi = float(rng.uniform(0, 2 * math.pi))
            direct = discord_mod.post_measurement_remainder(rho, BlochProjector(theta, phi))
            relabeled = discord_mod.post_measurement_remainder(
                rho, BlochProjector(math.pi - theta, (phi + math.pi) % (2 * math.pi)))
            worst = max(worst, abs(direct - relabeled))
    return CheckResult("projector-relabel-symmetry", worst, 1e-12)


def check_remainder_routes(count: int = 4, seed: int = 23) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for rho in _sample_states(count, seed=29):
        thetas = rng.uniform(0, math.pi, 5)
        phis = rng.uniform(0, 2 * math.pi, 5)
        profile = discord_mod.remainder_profile(rho, thetas, phis)
        for i, theta in enumerate(thetas):
            for j, phi in enumerate(phis):
                direct = discord_mod.post_measurement_remainder(
                    rho, BlochProjector(float(theta), float(phi)))
                worst = max(worst, abs(direct - profile[i, j]))
    return CheckResult("remainder-route-agreement", worst, 1e-10)


def check_lindblad_fixed_point(pairs: int = 10, seed: int = 19) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        delta0 = float(rng.uniform(-3.0, 1.0))
        gamma = float(rng.uniform(0.0, 1.0))
        scale = float(rng.uniform(0.1, 3.0))
        rho = xstate_to_density(stationary_xstate(delta0, gamma))
        for gamma_zero in (0.0, 0.4 * scale, -0.3 * scale):
            params = lindblad_mod.KossakowskiParams(
                gamma_plus=scale, gamma_minus=gamma * scale,
                gamma_zero=gamma_zero, omega_tilde=1.0)
            liouvillian = lindblad_mod.liouvillian_from_params(params)
            worst = max(worst, lindblad_mod.fixed_point_residual(liouvillian, rho))
    return CheckResult("lindblad-fixed-point", worst, 1e-10)


def trajectory_battery(n_states: int = 3, seed: int = 41, horizon: float = 100.0):
    """Shared dynamics run: returns (conservation, preservation, convergence) residuals."""
    rng = np.random.default_rng(seed)
    params = lindblad_mod.thermal_kossakowski(1.0, 1.0)
    liouvillian = lindblad_mod.liouvillian_from_params(params)
    gamma = params.ratio
    dtau = 0.01 / params.gamma_plus
    worst_drift = 0.0
    worst_preserve = 0.0
    worst_distance = 0.0
    for _ in range(n_states):
        rho0 = random_density(rng, 4)
        delta0 = lindblad_mod.pauli_correlation(rho0)
        target = xstate_to_density(stationary_xstate(delta0, gamma))
        trajectory = lindblad_mod.integrate(
            liouvillian, rho0, horizon / params.gamma_plus, dtau, sample_stride=50)
        for state in trajectory.states:
            worst_preserve = max(
                worst_preserve,
                abs(float(np.trace(state).real) - 1.0),
                float(np.max(np.abs(state - state.conj().T))),
            )
            worst_drift = max(worst_drift, abs(lindblad_mod.pauli_correlation(state) - delta0))
        worst_distance = max(worst_distance, float(np.linalg.norm(trajectory.final_state() - target)))
    return worst_drift, worst_preserve, worst_distance


def run_all_checks(full: bool = False) -> list[CheckResult]:
    """Execute the whole suite; `full` enlarges grids to the reference sizes."""
    t_big = 200 if full else 40
    results = [
        check_stationary_algebra(),
        check_bloch_xstate_map(),
        check_xstate_positivity(),
        check_xstate_limits(),
        check_xstate_monotonicity(),
        check_measurement_reassembly(),
        check_entropy_range(),
        check_partial_trace_product(),
        check_eur_validity(t_big),
        check_entropy_route_agreement(t_big),
        check_exchange_symmetry(),
        check_uncertainty_shapes(200 if full else 60),
        check_bdm_identity(t_big if full else 40),
        check_discord_nonnegativity(30 if full else 15),
        check_correlation_shapes(t_big if full else 40),
        check_optimizer_vs_bruteforce(20 if full else 4),
        check_projector_relabeling(),
        check_remainder_routes(),
        check_lindblad_fixed_point(30 if full else 10),
    ]
    drift, preserve, distance = trajectory_battery(10 if full else 3)
    results.append(CheckResult("delta-conservation", drift, 1e-8))
    results.append(CheckResult("trajectory-preservation", preserve, 1e-12))
    results.append(CheckResult("dynamics-convergence", distance, 1e-6))
    return results
