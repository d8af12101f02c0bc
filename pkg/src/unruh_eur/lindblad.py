"""Kossakowski-Lindblad generator for the accelerating detector pair.

The weak-coupling master equation for two identical detectors coupled to the
same field reads

    drho/dtau = -i [(omega_tilde / 2) Sigma_3, rho]
                + sum_ij sum_ab (C_ij / 2) (2 s_j^b rho s_i^a - {s_i^a s_j^b, rho}),

with s_i^a the Pauli matrix i of detector a, Sigma_3 the total z spin, and
one Kossakowski block C shared by all detector pairs (co-located detectors,
so cross-dissipation carries the same rates).  C is fixed by three rates:

    C_ij = (gamma_plus / 2) delta_ij - i (gamma_minus / 2) eps_ij3
           + gamma_zero delta_3i delta_3j.

The rates come from the field response G at frequencies +-omega and 0;
thermality (the KMS condition G(w) = exp(beta w) G(-w)) makes
gamma_minus / gamma_plus = tanh(beta omega / 2), the same ratio that fixes
the closed-form stationary state.  The generator is assembled as a dense
16x16 superoperator; the closed-form state must be its fixed point to
1e-10 gamma_plus for every admissible gamma_zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError, StepSizeError
from .qstate import IDENTITY_2, PAULI, PAULI_EXCHANGE_SUM, validate_state

_TWO_PI = 2.0 * math.pi

#: one-detector Pauli operators embedded in the pair space, indexed [detector][i]
_EMBEDDED = (
    tuple(np.kron(p, IDENTITY_2) for p in PAULI),
    tuple(np.kron(IDENTITY_2, p) for p in PAULI),
)
_SIGMA3_TOTAL = _EMBEDDED[0][2] + _EMBEDDED[1][2]
_VEC_IDENTITY = np.eye(4, dtype=complex).reshape(16)


@dataclass(frozen=True)
class KossakowskiParams:
    """Dissipation rates and the renormalized gap of the master equation."""

    gamma_plus: float
    gamma_minus: float
    gamma_zero: float
    omega_tilde: float

    def __post_init__(self):
        if self.gamma_plus <= 0.0:
            raise DomainError(f"gamma_plus must be positive, got {self.gamma_plus!r}")
        if abs(self.gamma_minus) > self.gamma_plus * (1.0 + 1e-12):
            raise DomainError("must have |gamma_minus| <= gamma_plus")

    @property
    def ratio(self) -> float:
        """Thermal ratio gamma_minus / gamma_plus."""
        return self.gamma_minus / self.gamma_plus


def kms_rates(omega: float, beta: float, g_omega: float, g_zero: float) -> KossakowskiParams:
    """Rates from the field response at +-omega and 0 under detailed balance.

    gamma_plus = (1 + e^{-beta omega}) G(omega),
    gamma_minus = (1 - e^{-beta omega}) G(omega),
    gamma_zero = G(0) - gamma_plus / 2.
    """
    if omega <= 0.0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    if beta <= 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    if g_omega <= 0.0:
        raise DomainError(f"G(omega) must be positive, got {g_omega!r}")
    if g_zero < 0.0:
        raise DomainError(f"G(0) must be nonnegative, got {g_zero!r}")
    boltzmann = math.exp(-beta * omega)
    gamma_plus = (1.0 + boltzmann) * g_omega
    gamma_minus = (1.0 - boltzmann) * g_omega
    return KossakowskiParams(
        gamma_plus=gamma_plus,
        gamma_minus=gamma_minus,
        gamma_zero=g_zero - gamma_plus / 2.0,
        omega_tilde=omega,
    )


def default_wightman(omega: float, beta: float) -> tuple[float, float]:
    """KMS-compatible response model G(w) = w / (2 pi (1 - e^{-beta w})).

    The stationary state depends on the response only through the ratio
    gamma_minus / gamma_plus = tanh(beta omega / 2), so any detailed-balance
    model gives the same asymptotics; this one is the massless-field choice
    with the finite limit G(0) = 1 / (2 pi beta).
    """
    if omega <= 0.0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    if beta <= 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    g_omega = omega / (_TWO_PI * (1.0 - math.exp(-beta * omega)))
    g_zero = 0.0 if math.isinf(beta) else 1.0 / (_TWO_PI * beta)
    return g_omega, g_zero


def thermal_kossakowski(omega: float, temperature: float) -> KossakowskiParams:
    """Rates of the default response model at a given Unruh temperature."""
    beta = math.inf if temperature == 0.0 else 1.0 / temperature
    if temperature < 0.0:
        raise DomainError(f"temperature must be nonnegative, got {temperature!r}")
    return kms_rates(omega, beta, *default_wightman(omega, beta))


def kossakowski_matrix(params: KossakowskiParams) -> np.ndarray:
    """3x3 Kossakowski block shared by all detector pairs."""
    gp, gm, g0 = params.gamma_plus, params.gamma_minus, params.gamma_zero
    c = np.array([
        [gp / 2.0, -1j * gm / 2.0, 0.0],
        [1j * gm / 2.0, gp / 2.0, 0.0],
        [0.0, 0.0, gp / 2.0 + g0],
    ], dtype=complex)
    return c


class Liouvillian:
    """Dense superoperator representation of the master-equation generator.

    Acts on row-major vectorized 4x4 matrices.  Construction verifies trace
    preservation; complete positivity for admissible rates is exercised by
    the integration tests.
    """

    def __init__(self, matrix: np.ndarray, omega_tilde: float, gamma_plus: float):
        self.matrix = matrix
        self.omega_tilde = omega_tilde
        self.gamma_plus = gamma_plus
        residual = float(np.linalg.norm(_VEC_IDENTITY @ matrix))
        scale = max(1.0, float(np.linalg.norm(matrix)))
        if residual > 1e-12 * scale:
            raise ConsistencyError(f"generator is not trace preserving ({residual:.3e})")

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """drho/dtau for one density matrix."""
        return (self.matrix @ np.asarray(rho, dtype=complex).reshape(16)).reshape(4, 4)


def build_generator(omega_tilde: float, c_matrix: np.ndarray) -> Liouvillian:
    """Assemble the 16x16 generator from a Kossakowski block.

    The coherent part uses (omega_tilde / 2) Sigma_3, which commutes with
    every state in the stationary family, so the fixed points do not depend
    on the gap renormalization.
    """
    c_matrix = np.asarray(c_matrix, dtype=complex)
    if c_matrix.shape != (3, 3):
        raise DomainError(f"Kossakowski matrix must be 3x3, got {c_matrix.shape}")
    eye4 = np.eye(4, dtype=complex)
    hamiltonian = (omega_tilde / 2.0) * _SIGMA3_TOTAL
    # row-major vec: vec(A rho B) = kron(A, B^T) vec(rho)
    matrix = -1j * (np.kron(hamiltonian, eye4) - np.kron(eye4, hamiltonian.T))
    for i in range(3):
        for j in range(3):
            coeff = c_matrix[i, j] / 2.0
            if coeff == 0:
                continue
            for alpha in range(2):
                for beta in range(2):
                    s_i = _EMBEDDED[alpha][i]
                    s_j = _EMBEDDED[beta][j]
                    prod = s_i @ s_j
                    matrix += coeff * (
                        2.0 * np.kron(s_j, s_i.T)
                        - np.kron(prod, eye4)
                        - np.kron(eye4, prod.T)
                    )
    gamma_plus = float(2.0 * c_matrix[0, 0].real)
    return Liouvillian(matrix, float(omega_tilde), gamma_plus)


def liouvillian_from_params(params: KossakowskiParams) -> Liouvillian:
    return build_generator(params.omega_tilde, kossakowski_matrix(params))


def fixed_point_residual(liouvillian: Liouvillian, rho: np.ndarray) -> float:
    """Frobenius norm of the generator action, in units of gamma_plus."""
    rho = validate_state(rho, name="candidate fixed point")
    return float(np.linalg.norm(liouvillian.apply(rho))) / liouvillian.gamma_plus


def pauli_correlation(rho: np.ndarray, *, psd_atol: float = 1e-9) -> float:
    """Tr[rho S] with S the Pauli exchange sum; lies in [-3, 1] for states."""
    rho = validate_state(rho, psd_atol=psd_atol, name="state")
    value = float(np.trace(rho @ PAULI_EXCHANGE_SUM).real)
    if value < -3.0 - 1e-9 or value > 1.0 + 1e-9:
        raise ConsistencyError(f"Tr[rho S] = {value!r} outside [-3, 1]")
    return min(1.0, max(-3.0, value))


@dataclass(frozen=True)
class Trajectory:
    """Integrated evolution: sampled proper times and states, plus the step."""

    taus: np.ndarray
    states: np.ndarray
    step: float

    def __len__(self) -> int:
        return len(self.taus)

    def final_state(self) -> np.ndarray:
        return self.states[-1]


def integrate(
    liouvillian: Liouvillian,
    rho0: np.ndarray,
    tau_max: float,
    dtau: float,
    *,
    sample_stride: int = 1,
) -> Trajectory:
    """Fixed-step 4th-order Runge-Kutta integration of the master equation.

    Every step re-Hermitizes and renormalizes the state; recorded samples
    are checked for positivity (eigenvalue floor -1e-6, beyond which a
    StepSizeError advises a smaller dtau).  Requires dtau gamma_plus <= 0.01.
    """
    rho0 = validate_state(rho0, name="initial state")
    if rho0.shape != (4, 4):
        raise DomainError("initial state must be 4x4")
    if dtau <= 0.0 or tau_max <= 0.0:
        raise DomainError("tau_max and dtau must be positive")
    if dtau * liouvillian.gamma_plus > 0.01 + 1e-12:
        raise StepSizeError(
            f"dtau gamma_plus = {dtau * liouvillian.gamma_plus:.3g} exceeds the "
            "stability guard 0.01; reduce dtau"
        )
    if sample_stride < 1:
        raise DomainError("sample_stride must be >= 1")

    generator = liouvillian.matrix
    steps = max(1, int(round(tau_max / dtau)))
    vec = rho0.reshape(16).astype(complex)
    taus = [0.0]
    samples = [rho0.copy()]

    def record(step_index: int, state: np.ndarray) -> None:
        low = float(np.linalg.eigvalsh(state).min())
        if low < -1e-6:
            raise StepSizeError(
                f"positivity violated at tau = {step_index * dtau:.6g} "
                f"(eigenvalue {low:.3e}); reduce dtau"
            )
        taus.append(step_index * dtau)
        samples.append(state)

    for step_index in range(1, steps + 1):
        k1 = generator @ vec
        k2 = generator @ (vec + 0.5 * dtau * k1)
        k3 = generator @ (vec + 0.5 * dtau * k2)
        k4 = generator @ (vec + dtau * k3)
        vec = vec + (dtau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        state = vec.reshape(4, 4)
        state = 0.5 * (state + state.conj().T)
        state = state / np.trace(state).real
        vec = state.reshape(16)
        if step_index % sample_stride == 0 or step_index == steps:
            record(step_index, state)

    return Trajectory(taus=np.array(taus), states=np.array(samples), step=dtau)
