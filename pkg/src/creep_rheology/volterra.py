"""
Relaxation functions from the creep rate.

The dimensionless relaxation function phi(t) = J_U G(t) obeys the Volterra
equation of the second kind

    phi(t) = 1 - q int_0^t psi'(t') phi(t - t') dt'

which is solved here by implicit trapezoidal product integration on a uniform
grid.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.interpolate import PchipInterpolator

from creep_rheology.models import MaterialParams, ModelKind, dpsi
from creep_rheology.utils.errors import (
    DomainError,
    PrecisionFloorError,
    SolverInternalError,
    SolverNumericalError,
)

logger = logging.getLogger(__name__)

TRAPEZOIDAL_SCHEME = "implicit-trapezoidal-product-integration"

# Refinement differences below this cannot be told apart from rounding.
PRECISION_FLOOR = 1e-14


class TimeGrid(BaseModel):
    """Uniform grid on [0, t_max] with n_steps intervals."""

    model_config = ConfigDict(frozen=True)

    t_max: float = Field(..., gt=0, allow_inf_nan=False)
    n_steps: int = Field(..., ge=1)

    @property
    def step(self) -> float:
        """Uniform step h = t_max / n_steps."""
        return self.t_max / self.n_steps

    def times(self) -> np.ndarray:
        """Grid nodes t_n = n h, n = 0 .. n_steps."""
        return self.step * np.arange(self.n_steps + 1, dtype=float)

    def refined(self) -> "TimeGrid":
        """Grid with the step halved."""
        return TimeGrid(t_max=self.t_max, n_steps=2 * self.n_steps)

    @classmethod
    def from_step(cls, t_max: float, step: float) -> "TimeGrid":
        """
        Build the grid whose step is the largest one not exceeding ``step``.

        Args:
            t_max: End of the grid.
            step: Requested step.

        Returns:
            TimeGrid: Grid covering [0, t_max].
        """
        if not math.isfinite(step) or step <= 0:
            raise DomainError(f"step must be finite and positive, got {step}")
        if not math.isfinite(t_max) or t_max <= 0:
            raise DomainError(f"t_max must be finite and positive, got {t_max}")
        # tolerate ratios like 100 / 0.005 landing a hair above an integer
        n_steps = max(1, math.ceil(t_max / step * (1.0 - 1e-12)))
        return cls(t_max=t_max, n_steps=n_steps)


class RelaxationSolution(BaseModel):
    """Discrete relaxation function on a uniform grid."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ModelKind
    q: float
    times: np.ndarray
    phi: np.ndarray
    step: float
    scheme: str = TRAPEZOIDAL_SCHEME

    @model_validator(mode="after")
    def _check_values(self) -> "RelaxationSolution":
        if self.times.shape != self.phi.shape or self.times.ndim != 1:
            raise ValueError("times and phi must be one-dimensional arrays of equal length")
        if self.phi[0] != 1.0:
            raise ValueError(f"phi(0) must be exactly 1, got {self.phi[0]}")
        if not np.all(np.isfinite(self.phi)):
            raise ValueError("phi contains non-finite values")
        if len(self.times) > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("times must be strictly ascending")
        return self

    @property
    def t_max(self) -> float:
        return float(self.times[-1])


def kernel_samples(kind: ModelKind, times: np.ndarray) -> np.ndarray:
    """Creep rate psi'(t_n) on the grid nodes."""
    return np.array([dpsi(kind, t) for t in times], dtype=float)


def solve_relaxation(kind: ModelKind, q: float, grid: TimeGrid) -> RelaxationSolution:
    """
    Solve the relaxation equation on a uniform grid.

    With k_m = psi'(t_m), phi_0 = 1 and for n >= 1

        phi_n (1 + q h k_0 / 2) = 1 - q h [k_n phi_0 / 2 + sum_{j=1}^{n-1} k_{n-j} phi_j]

    Args:
        kind: Rheological model.
        q: Dimensionless material constant, q >= 0.
        grid: Uniform time grid.

    Returns:
        RelaxationSolution: phi on the grid nodes.

    Raises:
        DomainError: If q is negative or not finite.
        SolverInternalError: If the implicit step denominator is not positive.
        SolverNumericalError: If a non-finite value appears; carries the failing index.
    """
    if not math.isfinite(q) or q < 0:
        raise DomainError(f"q must be finite and non-negative, got {q}")

    h = grid.step
    times = grid.times()
    kernel = kernel_samples(kind, times)
    denominator = 1.0 + q * h * kernel[0] / 2.0
    if not denominator > 0.0:
        raise SolverInternalError(f"Implicit step denominator {denominator} is not positive")

    phi = np.empty_like(times)
    phi[0] = 1.0
    for n in range(1, grid.n_steps + 1):
        # kernel[n-1:0:-1] is k_{n-1}, ..., k_1, aligned with phi_1, ..., phi_{n-1}
        history = float(np.dot(kernel[n - 1 : 0 : -1], phi[1:n]))
        value = (1.0 - q * h * (0.5 * kernel[n] * phi[0] + history)) / denominator
        if not math.isfinite(value):
            raise SolverNumericalError(
                f"Non-finite relaxation value at index {n} (t={times[n]})",
                index=n,
                time=float(times[n]),
            )
        phi[n] = value

    logger.debug(
        f"Solved {kind.value} relaxation with q={q} on {grid.n_steps} steps (h={h:.3e}), "
        f"phi(t_max)={phi[-1]:.6g}"
    )
    return RelaxationSolution(kind=kind, q=q, times=times, phi=phi, step=h)


def sample_solution(sol: RelaxationSolution, times: Sequence[float]) -> np.ndarray:
    """
    Sample phi at arbitrary times by monotone cubic interpolation.

    Raises:
        DomainError: If a time lies outside [0, t_max].
    """
    query = np.asarray(times, dtype=float)
    if np.any(~np.isfinite(query)) or np.any(query < 0) or np.any(query > sol.t_max * (1 + 1e-12)):
        raise DomainError(f"sample times must lie in [0, {sol.t_max}]")
    if len(sol.times) < 3:
        return np.interp(query, sol.times, sol.phi)
    return PchipInterpolator(sol.times, sol.phi, extrapolate=True)(query)


def relaxation_rate(sol: RelaxationSolution) -> np.ndarray:
    """Rate of relaxation -d phi / dt on the grid nodes, second-order differences."""
    if len(sol.times) < 3:
        return -np.gradient(sol.phi, sol.step)
    return -np.gradient(sol.phi, sol.step, edge_order=2)


def relaxation_modulus(
    params: MaterialParams, sol: RelaxationSolution
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Dimensional relaxation modulus G(t) = phi(t / tau0) / J_U.

    Args:
        params: Material parameters.
        sol: Dimensionless relaxation solution.

    Returns:
        Tuple[np.ndarray, np.ndarray]: Times in the units of tau0 and modulus values.
    """
    return sol.times * params.tau0, sol.phi / params.j_u


def refinement_differences(solutions: Sequence[RelaxationSolution]) -> List[float]:
    """Max-norm differences between successive solutions on the coarser grid nodes."""
    return [
        float(np.max(np.abs(coarse.phi - fine.phi[::2])))
        for coarse, fine in zip(solutions[:-1], solutions[1:])
    ]


def estimate_order(
    kind: ModelKind,
    q: float,
    t_max: float,
    levels: int = 3,
    base_steps: int = 1000,
    parallel: bool = True,
) -> float:
    """
    Observed convergence order from successive grid halvings.

    Solves on n, 2n, 4n, ... steps and returns
    p = log2(|phi_n - phi_2n| / |phi_2n - phi_4n|) for the final refinement pair.

    Args:
        kind: Rheological model.
        q: Dimensionless material constant.
        t_max: End of the time interval.
        levels: Number of grids, at least 3.
        base_steps: Steps on the coarsest grid.
        parallel: Solve the levels on a thread pool.

    Returns:
        float: Observed order p.

    Raises:
        DomainError: If fewer than 3 levels are requested.
        PrecisionFloorError: If the refinements are indistinguishable.
    """
    if levels < 3:
        raise DomainError(f"levels must be at least 3, got {levels}")

    grids = [TimeGrid(t_max=t_max, n_steps=base_steps * 2**level) for level in range(levels)]
    if parallel:
        with ThreadPoolExecutor(max_workers=levels) as executor:
            solutions = list(executor.map(lambda g: solve_relaxation(kind, q, g), grids))
    else:
        solutions = [solve_relaxation(kind, q, grid) for grid in grids]

    differences = refinement_differences(solutions)
    coarse_diff, fine_diff = differences[-2], differences[-1]
    if min(coarse_diff, fine_diff) < PRECISION_FLOOR:
        raise PrecisionFloorError(
            f"Refinements of {kind.value} relaxation are indistinguishable "
            f"(difference {min(coarse_diff, fine_diff):.3e})",
            difference=min(coarse_diff, fine_diff),
        )

    order = math.log2(coarse_diff / fine_diff)
    logger.debug(f"Observed order for {kind.value}: {order:.4f} (differences {differences})")
    return order
