"""
Utilities module for creep-rheology.
"""

from creep_rheology.utils.errors import (
    DomainError,
    ExitCode,
    FigureConfigError,
    PrecisionFloorError,
    QuadratureConvergenceError,
    SolverInternalError,
    SolverNumericalError,
)

__all__ = [
    "DomainError",
    "ExitCode",
    "FigureConfigError",
    "PrecisionFloorError",
    "QuadratureConvergenceError",
    "SolverInternalError",
    "SolverNumericalError",
]
