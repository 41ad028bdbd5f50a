"""
Error types and exit codes for creep-rheology.
"""

from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    """Process exit codes returned by the command-line interface."""

    OK = 0
    USAGE = 1
    IO = 2
    NUMERICAL = 3
    VALIDATION = 4


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class QuadratureConvergenceError(RuntimeError):
    """Raised when an integral does not reach its tolerance within the node budget."""

    def __init__(
        self,
        message: str,
        error_estimate: float,
        tolerance: float,
        evaluations: Optional[int] = None,
    ):
        super().__init__(message)
        self.error_estimate = error_estimate
        self.tolerance = tolerance
        self.evaluations = evaluations


class SolverNumericalError(RuntimeError):
    """Raised when the relaxation recursion produces a non-finite value."""

    def __init__(self, message: str, index: int, time: float):
        super().__init__(message)
        self.index = index
        self.time = time


class SolverInternalError(RuntimeError):
    """Raised when the implicit step denominator is not positive."""


class PrecisionFloorError(RuntimeError):
    """Raised when successive refinements can no longer be told apart."""

    def __init__(self, message: str, difference: float):
        super().__init__(message)
        self.difference = difference


class FigureConfigError(OSError):
    """Raised when the figure-set file is missing or malformed."""
