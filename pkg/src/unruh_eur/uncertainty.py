"""Entropic uncertainty with a quantum memory.

For complementary Pauli measurements X and Z on detector A, with detector B
kept as memory, the conditional entropies obey

    S(X|B) + S(Z|B) >= log2(1/c) + S(A|B),

where c is the maximal squared overlap of the two measurement bases
(c = 1/2 for X and Z, so the first term is one bit).  The left-hand side is
the uncertainty sum, the right-hand side its bound, and their difference the
tightness of the relation.

The conditional entropies are evaluated through the defining dephasing
channel.  For X-states closed forms are provided as an independent fast
path; the two routes must agree to 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .qstate import (
    BlochProjector,
    basis_vectors,
    binary_entropy,
    dephase,
    partial_trace,
    von_neumann_entropy,
)
from .stationary import XState, xstate_to_density

_ENTROPY_FLOOR = 1e-14


def _plogp_sum(values) -> float:
    return float(-sum(v * math.log2(v) for v in values if v > _ENTROPY_FLOOR))


def max_basis_overlap(basis1, basis2) -> float:
    """Maximal squared overlap c = max_ij |<x_i|z_j>|^2 of two qubit bases.

    Bases may be given as names ('x'|'y'|'z'), BlochProjector instances, or
    2x2 arrays whose columns are the basis vectors.  Mutually unbiased bases
    give 1/2, identical bases give 1.
    """
    cols = []
    for basis in (basis1, basis2):
        if isinstance(basis, np.ndarray):
            mat = np.asarray(basis, dtype=complex)
            if mat.shape != (2, 2):
                raise DomainError(f"basis matrix must be 2x2, got {mat.shape}")
            gram = mat.conj().T @ mat
            if np.max(np.abs(gram - np.eye(2))) > 1e-10:
                raise DomainError("basis columns are not orthonormal")
            cols.append((mat[:, 0], mat[:, 1]))
        else:
            cols.append(basis_vectors(basis))
    best = 0.0
    for vi in cols[0]:
        for wj in cols[1]:
            best = max(best, abs(np.vdot(vi, wj)) ** 2)
    return float(best)


def conditional_entropy_after_measurement(rho: np.ndarray, basis, measured: str = "A") -> float:
    """S(M|memory) = S(rho_MB) - S(rho_memory) for a projective measurement.

    rho_MB is the state dephased in the measurement basis on the measured
    qubit; the memory is the other qubit.
    """
    memory = "B" if measured == "A" else "A"
    dephased = dephase(rho, measured, basis)
    return von_neumann_entropy(dephased) - von_neumann_entropy(partial_trace(rho, memory))


def joint_entropy(state: XState) -> float:
    """S(rho_AB) from the X-block spectrum {x, z, y + d, y - d}."""
    return _plogp_sum(state.eigenvalues())


def memory_entropy(state: XState) -> float:
    """Entropy of either marginal, binary_entropy(x + y)."""
    return binary_entropy(state.x + state.y)


def conditional_entropy_ab(state: XState) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B); negative iff the state is entangled enough."""
    return joint_entropy(state) - memory_entropy(state)


def conditional_entropy_x_closed(state: XState) -> float:
    """Closed form of S(X|B): both X outcomes are equiprobable and their
    conditional spectra coincide."""
    spread = math.sqrt((state.x - state.z) ** 2 + 4.0 * state.d * state.d)
    return 1.0 + binary_entropy(0.5 * (1.0 + spread)) - memory_entropy(state)


def conditional_entropy_z_closed(state: XState) -> float:
    """Closed form of S(Z|B); the outcome-mixture and marginal entropies cancel."""
    p0, p1 = state.reduced_populations()
    total = 0.0
    if p0 > _ENTROPY_FLOOR:
        total += p0 * binary_entropy(state.x / p0)
    if p1 > _ENTROPY_FLOOR:
        total += p1 * binary_entropy(state.y / p1)
    return total


def uncertainty_sum(state: XState) -> float:
    """S(X|B) + S(Z|B) via the dephasing-channel route."""
    rho = xstate_to_density(state)
    return (conditional_entropy_after_measurement(rho, "x")
            + conditional_entropy_after_measurement(rho, "z"))


def uncertainty_bound(state: XState) -> float:
    """log2(1/c) + S(A|B) with c = 1/2 for the X/Z pair."""
    return 1.0 + conditional_entropy_ab(state)


def tightness(uncertainty: float, bound: float) -> float:
    """Gap uncertainty - bound; raises if it is negative beyond tolerance."""
    gap = uncertainty - bound
    if gap < -1e-9:
        raise ConsistencyError(f"uncertainty relation violated: gap {gap:.3e}")
    return gap


@dataclass(frozen=True)
class EurPoint:
    """All uncertainty-relation quantities of one state, in bits."""

    uncertainty: float
    bound: float
    tightness: float
    s_x_given_b: float
    s_z_given_b: float
    s_ab: float
    s_b: float
    s_a_given_b: float
    overlap: float


def eur_point(state: XState) -> EurPoint:
    """Evaluate the uncertainty relation at one X-state."""
    rho = xstate_to_density(state)
    sxb = conditional_entropy_after_measurement(rho, "x")
    szb = conditional_entropy_after_measurement(rho, "z")
    s_ab = joint_entropy(state)
    s_b = memory_entropy(state)
    s_cond = s_ab - s_b
    uncertainty = sxb + szb
    bound = 1.0 + s_cond
    return EurPoint(
        uncertainty=uncertainty,
        bound=bound,
        tightness=tightness(uncertainty, bound),
        s_x_given_b=sxb,
        s_z_given_b=szb,
        s_ab=s_ab,
        s_b=s_b,
        s_a_given_b=s_cond,
        overlap=0.5,
    )


def uncertainty_of_density(rho: np.ndarray) -> tuple[float, float]:
    """(uncertainty sum, bound) for an arbitrary two-qubit state.

    Used along dynamical trajectories, where the state need not have the
    X shape.  Everything goes through the generic eigensolver route.
    """
    u = (conditional_entropy_after_measurement(rho, "x")
         + conditional_entropy_after_measurement(rho, "z"))
    bound = 1.0 + von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, "B"))
    return u, bound


__all__ = [
    "BlochProjector",
    "EurPoint",
    "conditional_entropy_ab",
    "conditional_entropy_after_measurement",
    "conditional_entropy_x_closed",
    "conditional_entropy_z_closed",
    "eur_point",
    "joint_entropy",
    "max_basis_overlap",
    "memory_entropy",
    "tightness",
    "uncertainty_bound",
    "uncertainty_of_density",
    "uncertainty_sum",
]
