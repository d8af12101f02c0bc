"""Two-qubit density-matrix primitives.

Pauli algebra, entropies, partial traces and projective measurements for
2x2 and 4x4 density matrices.  The two-qubit basis order is the
computational product basis |00>, |01>, |10>, |11> with sigma_z |0> = +|0>.
All entropies are in bits (logarithms base 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidStateError

IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

#: sum_i sigma_i (x) sigma_i; eigenvalues 1 (triplet) and -3 (singlet).
PAULI_EXCHANGE_SUM = sum(np.kron(p, p) for p in PAULI)
#: swap operator, PAULI_EXCHANGE_SUM = 2 SWAP - I.
SWAP = (PAULI_EXCHANGE_SUM + IDENTITY_4) / 2

_HERM_ATOL = 1e-10
_TRACE_ATOL = 1e-10
_PSD_ATOL = 1e-12
_PROB_FLOOR = 1e-14


def binary_entropy(p: float) -> float:
    """Entropy -p log2 p - (1-p) log2 (1-p) of a bit with bias p.

    Inputs within 1e-12 outside [0, 1] are clamped; anything further out
    raises DomainError.
    """
    if p < 0.0:
        if p < -1e-12:
            raise DomainError(f"probability {p!r} outside [0, 1]")
        p = 0.0
    elif p > 1.0:
        if p > 1.0 + 1e-12:
            raise DomainError(f"probability {p!r} outside [0, 1]")
        p = 1.0
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def validate_state(rho: np.ndarray, *, psd_atol: float = _PSD_ATOL, name: str = "state") -> np.ndarray:
    """Check Hermiticity, unit trace and positivity of a density matrix.

    Returns the input unchanged so calls can be chained.  Raises
    InvalidStateError on failure.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"{name}: expected a square matrix, got shape {rho.shape}")
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    if herm > _HERM_ATOL:
        raise InvalidStateError(f"{name}: not Hermitian (max deviation {herm:.3e})")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > _TRACE_ATOL:
        raise InvalidStateError(f"{name}: trace {tr!r} differs from 1")
    lo = float(np.linalg.eigvalsh(rho).min())
    if lo < -psd_atol:
        raise InvalidStateError(f"{name}: negative eigenvalue {lo:.3e}")
    return rho


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy -sum lam log2 lam in bits.

    Eigenvalues below 1e-14 are treated as exact zeros.
    """
    rho = validate_state(rho)
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > _PROB_FLOOR]
    return float(-np.sum(ev * np.log2(ev)))


def _reduce(mat: np.ndarray, keep: str) -> np.ndarray:
    """Partial trace of a 4x4 matrix without state validation."""
    r = np.asarray(mat, dtype=complex).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ikjk->ij", r)
    if keep == "B":
        return np.einsum("kikj->ij", r)
    raise DomainError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced one-qubit state of a two-qubit density matrix."""
    rho = validate_state(rho, name="two-qubit state")
    if rho.shape != (4, 4):
        raise InvalidStateError(f"partial_trace expects a 4x4 state, got {rho.shape}")
    return _reduce(rho, keep)


@dataclass(frozen=True)
class BlochProjector:
    """Projective qubit measurement along the Bloch direction (theta, phi).

    The two projectors are (I +- n.sigma)/2 with
    n = (sin theta cos phi, sin theta sin phi, cos theta); they are rank-1,
    orthogonal and sum to the identity by construction.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (-1e-12 <= self.theta <= math.pi + 1e-12):
            raise DomainError(f"theta {self.theta!r} outside [0, pi]")
        if not (-1e-12 <= self.phi < 2 * math.pi + 1e-12):
            raise DomainError(f"phi {self.phi!r} outside [0, 2 pi)")

    def direction(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Orthonormal eigenvectors of n.sigma with eigenvalues +1, -1."""
        c, s = math.cos(self.theta / 2), math.sin(self.theta / 2)
        phase = complex(math.cos(self.phi), math.sin(self.phi))
        v0 = np.array([c, phase * s], dtype=complex)
        v1 = np.array([-phase.conjugate() * s, c], dtype=complex)
        return v0, v1

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        v0, v1 = self.vectors()
        return np.outer(v0, v0.conj()), np.outer(v1, v1.conj())


def normalize_angles(theta: float, phi: float) -> tuple[float, float]:
    """Map arbitrary real angles onto the canonical ranges [0, pi] x [0, 2 pi)."""
    theta = theta % (2 * math.pi)
    if theta > math.pi:
        theta = 2 * math.pi - theta
        phi = phi + math.pi
    return theta, phi % (2 * math.pi)


_NAMED_BASES = {
    "x": BlochProjector(math.pi / 2, 0.0),
    "y": BlochProjector(math.pi / 2, math.pi / 2),
    "z": BlochProjector(0.0, 0.0),
}


def basis_vectors(basis) -> tuple[np.ndarray, np.ndarray]:
    """Resolve a named Pauli basis ('x'|'y'|'z') or a BlochProjector to vectors."""
    if isinstance(basis, str):
        try:
            basis = _NAMED_BASES[basis.lower()]
        except KeyError:
            raise DomainError(f"unknown basis {basis!r}; expected 'x', 'y', 'z' or BlochProjector") from None
    if not isinstance(basis, BlochProjector):
        raise DomainError(f"basis must be a name or BlochProjector, got {type(basis).__name__}")
    return basis.vectors()


def _measurement_operators(which: str, basis) -> tuple[np.ndarray, np.ndarray]:
    v0, v1 = basis_vectors(basis)
    ops = []
    for v in (v0, v1):
        proj = np.outer(v, v.conj())
        if which == "A":
            ops.append(np.kron(proj, IDENTITY_2))
        elif which == "B":
            ops.append(np.kron(IDENTITY_2, proj))
        else:
            raise DomainError(f"subsystem must be 'A' or 'B', got {which!r}")
    return ops[0], ops[1]


def measure_subsystem(rho: np.ndarray, which: str, basis) -> list[tuple[float, np.ndarray | None]]:
    """Projectively measure one qubit of a two-qubit state.

    Returns, per outcome, the probability and the conditional state of the
    other qubit.  Outcomes with probability below 1e-14 are reported with
    probability 0.0 and a None conditional (undefined); no division by a
    vanishing norm ever happens.
    """
    rho = validate_state(rho, name="two-qubit state")
    keep = "B" if which == "A" else "A"
    outcomes: list[tuple[float, np.ndarray | None]] = []
    for op in _measurement_operators(which, basis):
        sandwich = op @ rho @ op
        p = float(np.trace(sandwich).real)
        if p < _PROB_FLOOR:
            outcomes.append((0.0, None))
        else:
            outcomes.append((p, _reduce(sandwich, keep) / p))
    return outcomes


def dephase(rho: np.ndarray, which: str, basis) -> np.ndarray:
    """Post-measurement (unread outcome) state sum_k P_k rho P_k."""
    rho = validate_state(rho, name="two-qubit state")
    op0, op1 = _measurement_operators(which, basis)
    return op0 @ rho @ op0 + op1 @ rho @ op1


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    """Bloch vector (r_x, r_y, r_z) of a one-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    return np.array([float(np.trace(rho @ p).real) for p in PAULI])


def correlation_data(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Bloch vectors of both marginals and the 3x3 Pauli correlation matrix."""
    rho = np.asarray(rho, dtype=complex)
    a = bloch_vector(_reduce(rho, "A"))
    b = bloch_vector(_reduce(rho, "B"))
    t = np.empty((3, 3))
    for i, pi in enumerate(PAULI):
        for j, pj in enumerate(PAULI):
            t[i, j] = float(np.trace(rho @ np.kron(pi, pj)).real)
    return a, b, t


def random_density(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Random full-rank density matrix from the Ginibre ensemble."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _sqrt_psd(rho: np.ndarray) -> np.ndarray:
    ev, vec = np.linalg.eigh(rho)
    ev = np.clip(ev, 0.0, None)
    return (vec * np.sqrt(ev)) @ vec.conj().T


def state_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clipped to [0, 1]."""
    root = _sqrt_psd(np.asarray(rho, dtype=complex))
    inner = root @ np.asarray(sigma, dtype=complex) @ root
    ev = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    return float(min(1.0, np.sum(np.sqrt(ev)) ** 2))


def ket(bits: str) -> np.ndarray:
    """Computational basis vector for a bit string such as '01'."""
    index = int(bits, 2)
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[index] = 1.0
    return v


def pure_density(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    vec = vec / np.linalg.norm(vec)
    return np.outer(vec, vec.conj())


def bell_singlet() -> np.ndarray:
    """Density matrix of (|01> - |10>)/sqrt(2)."""
    return pure_density(ket("01") - ket("10"))


_NAMED_STATES = {
    "singlet": lambda: bell_singlet(),
    "triplet-zz": lambda: pure_density(ket("01") + ket("10")),
    "product-00": lambda: pure_density(ket("00")),
    "maximally-mixed": lambda: IDENTITY_4 / 4,
}


def named_state(name: str) -> np.ndarray:
    """Look up one of the named two-qubit states used by the CLI.

    'triplet-zz' is the zero-magnetization triplet (|01> + |10>)/sqrt(2).
    """
    try:
        return _NAMED_STATES[name]()
    except KeyError:
        raise DomainError(
            f"unknown state {name!r}; expected one of {sorted(_NAMED_STATES)}"
        ) from None
