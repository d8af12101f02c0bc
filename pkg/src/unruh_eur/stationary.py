"""Closed-form stationary state of two co-accelerating detectors.

A uniformly accelerating two-level detector sees the vacuum as a thermal
bath at the Unruh temperature T = a / (2 pi).  For a symmetric pair of such
detectors the late-time state is an X-shaped two-qubit density matrix fixed
entirely by the thermal ratio gamma = tanh(omega / (2 T)) and by the initial
correlation parameter delta0 = Tr[rho(0) S], where S is the Pauli exchange
sum.  delta0 ranges over [-3, 1]; the singlet saturates the lower bound and
every triplet the upper one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError

_TWO_PI = 2.0 * math.pi


def _check_delta0(delta0: float) -> float:
    if not (-3.0 <= delta0 <= 1.0):
        raise DomainError(f"delta0 {delta0!r} outside [-3, 1]")
    return float(delta0)


def _check_gamma(gamma: float) -> float:
    if not (0.0 <= gamma <= 1.0):
        raise DomainError(f"gamma {gamma!r} outside [0, 1]")
    return float(gamma)


def gamma_from_temperature(omega: float, temperature: float) -> float:
    """Thermal ratio tanh(omega / (2 T)); exactly 1 in the T = 0 limit."""
    if omega <= 0.0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    if temperature < 0.0:
        raise DomainError(f"temperature must be nonnegative, got {temperature!r}")
    if temperature == 0.0:
        return 1.0
    return math.tanh(omega / (2.0 * temperature))


def temperature_from_acceleration(acceleration: float) -> float:
    """Unruh temperature T = a / (2 pi) of a proper acceleration a."""
    if acceleration <= 0.0:
        raise DomainError(f"acceleration must be positive, got {acceleration!r}")
    return acceleration / _TWO_PI


@dataclass(frozen=True)
class UnruhParams:
    """Detector gap and thermal parameters of one operating point."""

    omega: float
    temperature: float
    beta: float
    gamma: float

    def __post_init__(self):
        if self.omega <= 0.0:
            raise DomainError(f"omega must be positive, got {self.omega!r}")
        if self.temperature < 0.0:
            raise DomainError(f"temperature must be nonnegative, got {self.temperature!r}")
        if self.temperature > 0.0 and abs(self.beta * self.temperature - 1.0) > 1e-12:
            raise DomainError("beta and temperature are not mutual inverses")

    @classmethod
    def from_temperature(cls, omega: float, temperature: float) -> "UnruhParams":
        gamma = gamma_from_temperature(omega, temperature)
        beta = math.inf if temperature == 0.0 else 1.0 / temperature
        return cls(omega=omega, temperature=float(temperature), beta=beta, gamma=gamma)

    @classmethod
    def from_acceleration(cls, omega: float, acceleration: float) -> "UnruhParams":
        return cls.from_temperature(omega, temperature_from_acceleration(acceleration))


@dataclass(frozen=True)
class BlochComponents:
    """Pauli components of the symmetric subspace: u both local z-components,
    w the in-plane xx = yy correlation, v the zz correlation."""

    u: float
    w: float
    v: float


def bloch_components(delta0: float, gamma: float) -> BlochComponents:
    """Stationary Pauli components for given initial correlation and ratio."""
    delta0 = _check_delta0(delta0)
    gamma = _check_gamma(gamma)
    den = 3.0 + gamma * gamma
    u = -(3.0 + delta0) * gamma / den
    w = (delta0 - gamma * gamma) / den
    v = (delta0 + (delta0 + 2.0) * gamma * gamma) / den
    return BlochComponents(u=u, w=w, v=v)


def algebraic_residuals(components: BlochComponents, delta0: float, gamma: float) -> tuple[float, float, float]:
    """Residuals of the three stationarity conditions; zero at the solution."""
    g2 = gamma * gamma
    den = 3.0 + g2
    return (
        den * components.u + (3.0 + delta0) * gamma,
        den * components.w - (delta0 - g2),
        den * components.v - (delta0 + (delta0 + 2.0) * g2),
    )


@dataclass(frozen=True)
class XState:
    """Coefficients of the X-shaped stationary state.

    The density matrix has diagonal (x, y, y, z) and a real coherence d
    between |01> and |10>.  Valid coefficients satisfy x + 2y + z = 1,
    x >= 0, z >= 0 and y >= |d|.
    """

    x: float
    y: float
    z: float
    d: float

    def eigenvalues(self) -> tuple[float, float, float, float]:
        """Spectrum (x, z, y + d, y - d) from the block structure."""
        return (self.x, self.z, self.y + self.d, self.y - self.d)

    def reduced_populations(self) -> tuple[float, float]:
        """Diagonal (x + y, y + z) of either one-qubit marginal."""
        return (self.x + self.y, self.y + self.z)


def check_xstate(state: XState, *, atol: float = 1e-12) -> XState:
    """Raise ConsistencyError unless the XState invariants hold."""
    trace_gap = abs(state.x + 2.0 * state.y + state.z - 1.0)
    if trace_gap > atol:
        raise ConsistencyError(f"x + 2y + z - 1 = {trace_gap:.3e} exceeds {atol}")
    margin = min(state.x, state.z, state.y - abs(state.d))
    if margin < -atol:
        raise ConsistencyError(f"X-block positivity violated by {margin:.3e}")
    return state


def stationary_xstate(delta0: float, gamma: float) -> XState:
    """Late-time X-state coefficients; always passes check_xstate for valid inputs."""
    delta0 = _check_delta0(delta0)
    gamma = _check_gamma(gamma)
    g2 = gamma * gamma
    den4 = 4.0 * (3.0 + g2)
    state = XState(
        x=(3.0 + delta0) * (gamma - 1.0) ** 2 / den4,
        y=(3.0 - delta0 - (delta0 + 1.0) * g2) / den4,
        z=(3.0 + delta0) * (gamma + 1.0) ** 2 / den4,
        d=(delta0 - g2) / (2.0 * (3.0 + g2)),
    )
    return check_xstate(state)


def xstate_from_bloch(components: BlochComponents) -> XState:
    """Coefficient map x = (1 + 2u + v)/4, y = (1 - v)/4, z = (1 - 2u + v)/4, d = w/2."""
    u, w, v = components.u, components.w, components.v
    return XState(
        x=(1.0 + 2.0 * u + v) / 4.0,
        y=(1.0 - v) / 4.0,
        z=(1.0 - 2.0 * u + v) / 4.0,
        d=w / 2.0,
    )


def bloch_from_xstate(state: XState) -> BlochComponents:
    """Inverse coefficient map; useful for consistency probes."""
    return BlochComponents(u=state.x - state.z, w=2.0 * state.d, v=1.0 - 4.0 * state.y)


def xstate_to_density(state: XState) -> np.ndarray:
    """4x4 density matrix of an XState in the computational basis."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = state.x
    rho[1, 1] = state.y
    rho[2, 2] = state.y
    rho[3, 3] = state.z
    rho[1, 2] = state.d
    rho[2, 1] = state.d
    return rho
