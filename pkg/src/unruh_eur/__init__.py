"""Entropic uncertainty with quantum memory for accelerating detector pairs.

The package builds the closed-form stationary two-qubit state of two
uniformly accelerating two-level detectors, evaluates the
quantum-memory-assisted entropic uncertainty relation (uncertainty sum,
bound, tightness), quantum discord and minimal missing information, and
cross-validates everything against an explicit Kossakowski-Lindblad
generator.
"""

from .discord import (
    CorrelationPoint,
    OptimizerDiagnostics,
    bound_via_discord,
    brute_force_missing_information,
    classical_correlation,
    correlation_point,
    minimal_missing_information,
    mutual_information,
    post_measurement_remainder,
    quantum_discord,
    remainder_profile,
)
from .errors import (
    ConsistencyError,
    DomainError,
    InvalidStateError,
    OptimizerError,
    StepSizeError,
)
from .lindblad import (
    KossakowskiParams,
    Liouvillian,
    Trajectory,
    build_generator,
    default_wightman,
    fixed_point_residual,
    integrate,
    kms_rates,
    kossakowski_matrix,
    liouvillian_from_params,
    pauli_correlation,
    thermal_kossakowski,
)
from .qstate import (
    BlochProjector,
    bell_singlet,
    binary_entropy,
    measure_subsystem,
    named_state,
    partial_trace,
    random_density,
    state_fidelity,
    validate_state,
    von_neumann_entropy,
)
from .stationary import (
    BlochComponents,
    UnruhParams,
    XState,
    algebraic_residuals,
    bloch_components,
    bloch_from_xstate,
    gamma_from_temperature,
    stationary_xstate,
    temperature_from_acceleration,
    xstate_from_bloch,
    xstate_to_density,
)
from .sweep import SweepConfig, SweepRow, compute_row, run_and_write, run_sweep
from .uncertainty import (
    EurPoint,
    conditional_entropy_ab,
    conditional_entropy_after_measurement,
    eur_point,
    joint_entropy,
    max_basis_overlap,
    tightness,
    uncertainty_bound,
    uncertainty_of_density,
    uncertainty_sum,
)

__version__ = "0.1.0"
