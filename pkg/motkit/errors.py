"""
Exception hierarchy shared by every motkit sub-package.

Validation failures subclass ValueError so callers that only know about
ValueError keep catching them.
"""


class MotkitError(Exception):
    pass


class InvalidMeasureError(MotkitError, ValueError):
    """A measure (or a measure file) violates the probability-measure invariants."""


class DimensionMismatchError(MotkitError, ValueError):
    pass


class ParameterError(MotkitError, ValueError):
    """A construction or operation parameter is outside its admissible range."""


class SolverError(MotkitError, RuntimeError):
    pass


class IterationLimitExceeded(SolverError):
    def __init__(self, iterations: int, phase: str):
        super().__init__(f"Simplex pivot budget exhausted after {iterations} iterations ({phase})")
        self.iterations = iterations
        self.phase = phase


class CertificationError(SolverError):
    """A candidate optimum failed its primal residual or duality-gap certificate."""


class NotInConvexOrder(MotkitError):
    """
    Raised when the martingale coupling polytope is empty, i.e. mu <=_c nu fails.
    Never returned as a value: an infeasible instance must not read as cost 0.
    """
