"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input parameter lies outside its physical domain."""


class InvalidStateError(ValueError):
    """A matrix fails the density-matrix checks (Hermiticity, trace, positivity)."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree disagreed, or an internal invariant failed."""


class OptimizerError(RuntimeError):
    """Measurement-basis minimization exhausted its evaluation budget.

    Carries the best value and angles found before giving up.
    """

    def __init__(self, message: str, best_value: float, best_angles: tuple, evaluations: int):
        super().__init__(message)
        self.best_value = best_value
        self.best_angles = best_angles
        self.evaluations = evaluations


class StepSizeError(RuntimeError):
    """Integration step too large for the stability or positivity guards."""
