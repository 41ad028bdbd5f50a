"""
Relaxation tools for creep-rheology.

This module solves the relaxation equation for both models and tabulates the
relaxation functions, the relaxation moduli and the rates of relaxation.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator

from creep_rheology.models import ModelKind
from creep_rheology.tools.common import CommandResponse, build_chart, check_columns, emit
from creep_rheology.utils.config import GridScale, GridSpec, OutputRequest, RunConfig
from creep_rheology.utils.output import Table
from creep_rheology.volterra import (
    RelaxationSolution,
    TimeGrid,
    relaxation_modulus,
    relaxation_rate,
    sample_solution,
    solve_relaxation,
)

logger = logging.getLogger(__name__)

RELAX_COLUMNS = ("phi_becker", "phi_lomnitz")
RELAX_AVAILABLE = (
    ("time",) + RELAX_COLUMNS + ("g_becker", "g_lomnitz", "dphi_becker", "dphi_lomnitz")
)

DEFAULT_STEP = 5e-3
DEFAULT_LOG_T_MIN = 1e-2
DEFAULT_POINTS = 101


class RelaxParams(BaseModel):
    """Parameters for tabulating relaxation functions."""

    grid_max: float = Field(100.0, gt=0, allow_inf_nan=False, description="End of the time grid")
    step: float = Field(DEFAULT_STEP, gt=0, allow_inf_nan=False, description="Solver step")
    scale: GridScale = Field(GridScale.LINEAR, description="Spacing of the output rows")
    t_min: Optional[float] = Field(None, ge=0, description="First output time")
    points: Optional[int] = Field(None, ge=2, description="Output rows; solver nodes when absent")
    out: OutputRequest = Field(..., description="Output request")

    @model_validator(mode="after")
    def _check_step(self) -> "RelaxParams":
        if self.grid_max <= self.step:
            raise ValueError(f"grid_max ({self.grid_max}) must exceed step ({self.step})")
        return self

    def sample_grid(self) -> Optional[GridSpec]:
        """Output grid, or None when the solver nodes are written as they are."""
        if self.scale == GridScale.LINEAR and self.points is None and self.t_min is None:
            return None
        default_min = DEFAULT_LOG_T_MIN if self.scale == GridScale.LOG else 0.0
        return GridSpec(
            t_min=default_min if self.t_min is None else self.t_min,
            t_max=self.grid_max,
            points=self.points or DEFAULT_POINTS,
            scale=self.scale,
        )


def solve_both(q: float, grid: TimeGrid) -> Dict[ModelKind, RelaxationSolution]:
    """Solve the relaxation equation for both models concurrently."""
    with ThreadPoolExecutor(max_workers=len(ModelKind)) as executor:
        futures = {kind: executor.submit(solve_relaxation, kind, q, grid) for kind in ModelKind}
        return {kind: future.result() for kind, future in futures.items()}


def relaxation_table(
    config: RunConfig,
    solutions: Dict[ModelKind, RelaxationSolution],
    columns: Sequence[str],
    times: Optional[Sequence[float]] = None,
) -> Table:
    """
    Tabulate relaxation series, on the solver nodes or at given times.

    Args:
        config: Run configuration.
        solutions: Relaxation solutions keyed by model.
        columns: Series identifiers.
        times: Dimensionless output times; solver nodes when None.

    Returns:
        Table: Column ``t`` followed by the requested series.
    """
    material = config.material
    reference = next(iter(solutions.values()))
    t = reference.times if times is None else np.asarray(times, dtype=float)

    series: Dict[str, np.ndarray] = {"time": t * material.tau0}
    for kind, sol in solutions.items():
        if times is None:
            phi = sol.phi
            rate = relaxation_rate(sol)
            modulus = relaxation_modulus(material, sol)[1]
        else:
            phi = sample_solution(sol, t)
            rate = np.interp(t, sol.times, relaxation_rate(sol))
            modulus = phi / material.j_u
        series[f"phi_{kind.value}"] = phi
        series[f"g_{kind.value}"] = modulus
        series[f"dphi_{kind.value}"] = rate

    return Table.from_columns(["t"] + list(columns), [t] + [series[name] for name in columns])


def cmd_relax(config: RunConfig, params: RelaxParams) -> CommandResponse:
    """
    Solve and tabulate the relaxation functions of both models.

    Args:
        config: Run configuration (q is taken from the material parameters).
        params: Solver grid and output request.

    Returns:
        CommandResponse: Result with the table text when written to stdout.

    Raises:
        SolverNumericalError: If the recursion produces a non-finite value.
    """
    check_columns(params.out.columns, RELAX_AVAILABLE, "relax")
    grid = TimeGrid.from_step(params.grid_max, params.step)
    logger.info(
        f"Solving relaxation with q={config.material.q} on {grid.n_steps} steps (h={grid.step:.3e})"
    )
    solutions = solve_both(config.material.q, grid)

    sample = params.sample_grid()
    times = None if sample is None else sample.values()
    table = relaxation_table(config, solutions, params.out.columns, times)
    chart = build_chart(table, "Relaxation functions", "phi(t)", params.scale)
    return emit(table, params.out, chart, "relax")
