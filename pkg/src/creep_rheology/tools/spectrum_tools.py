"""
Retardation spectrum tools for creep-rheology.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import model_validator

from creep_rheology.models import ModelKind, spectrum
from creep_rheology.tools.common import (
    CommandResponse,
    TableParams,
    build_chart,
    check_columns,
    emit,
)
from creep_rheology.utils.config import GridScale, RunConfig
from creep_rheology.utils.output import Table
from creep_rheology.utils.svg import ChartSeries, LineChart

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ("r_becker", "r_lomnitz")

# Retardation time of the Becker cut-off
BECKER_JUMP = 1.0


class SpectrumParams(TableParams):
    """Parameters for tabulating retardation spectra; the grid runs over tau."""

    @model_validator(mode="after")
    def _check_positive(self) -> "SpectrumParams":
        if self.grid.t_min <= 0:
            raise ValueError("retardation-time grid requires t_min > 0")
        return self


def spectrum_table(taus: Sequence[float], columns: Sequence[str]) -> Table:
    """Tabulate the closed-form spectra; column ``tau`` followed by the requested ones."""
    taus = np.asarray(taus, dtype=float)
    kinds = {"r_becker": ModelKind.BECKER, "r_lomnitz": ModelKind.LOMNITZ}
    values = [taus] + [np.array([spectrum(kinds[name], tau) for tau in taus]) for name in columns]
    return Table.from_columns(["tau"] + list(columns), values)


def with_becker_jump(chart: LineChart, table: Table) -> LineChart:
    """Draw the Becker cut-off as a vertical segment at tau = 1."""
    if "r_becker" not in table.columns:
        return chart
    series = []
    for name, item in zip([c for c in table.columns[1:] if c != "time"], chart.series):
        if name != "r_becker" or not item.x or not item.x[0] < BECKER_JUMP <= item.x[-1]:
            series.append(item)
            continue
        points = [(x, y) for x, y in zip(item.x, item.y) if x != BECKER_JUMP]
        split = next((i for i, (x, _) in enumerate(points) if x > BECKER_JUMP), len(points))
        points[split:split] = [(BECKER_JUMP, 0.0), (BECKER_JUMP, 1.0 / BECKER_JUMP)]
        series.append(
            ChartSeries(label=item.label, x=[x for x, _ in points], y=[y for _, y in points])
        )
    return chart.model_copy(update={"series": series})


def spectrum_chart(
    table: Table, x_scale: GridScale, x_range: Optional[Sequence[float]] = None
) -> LineChart:
    chart = build_chart(table, "Retardation spectra", "R(tau)", x_scale, x_range)
    return with_becker_jump(chart, table)


def cmd_spectrum(config: RunConfig, params: SpectrumParams) -> CommandResponse:
    """
    Tabulate the retardation spectra of both models.

    Args:
        config: Run configuration.
        params: Grid over retardation times and output request.

    Returns:
        CommandResponse: Result with the table text when written to stdout.
    """
    check_columns(params.out.columns, SPECTRUM_COLUMNS, "spectrum")
    table = spectrum_table(params.grid.values(), params.out.columns)
    chart = spectrum_chart(table, params.grid.scale)
    logger.info(f"Tabulated retardation spectra on {len(table.rows)} points")
    return emit(table, params.out, chart, "spectrum")
