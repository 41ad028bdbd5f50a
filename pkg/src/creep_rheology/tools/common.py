"""
Shared models and helpers for the creep-rheology commands.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from creep_rheology.utils.config import GridScale, GridSpec, OutputRequest
from creep_rheology.utils.errors import ExitCode
from creep_rheology.utils.output import Table, write_table
from creep_rheology.utils.svg import ChartSeries, LineChart, write_svg

logger = logging.getLogger(__name__)

SERIES_LABELS = {
    "time": "time",
    "psi_becker": "Becker",
    "psi_lomnitz": "Lomnitz",
    "j_becker": "Becker J(t)",
    "j_lomnitz": "Lomnitz J(t)",
    "dpsi_becker": "Becker",
    "dpsi_lomnitz": "Lomnitz",
    "phi_becker": "Becker",
    "phi_lomnitz": "Lomnitz",
    "g_becker": "Becker G(t)",
    "g_lomnitz": "Lomnitz G(t)",
    "dphi_becker": "Becker -dphi/dt",
    "dphi_lomnitz": "Lomnitz -dphi/dt",
    "r_becker": "Becker",
    "r_lomnitz": "Lomnitz",
}


class TableParams(BaseModel):
    """Parameters for commands that tabulate closed-form functions on a grid."""

    grid: GridSpec = Field(..., description="Sample points")
    out: OutputRequest = Field(..., description="Output request")


class CommandResponse(BaseModel):
    """Response from command execution."""

    success: bool = Field(..., description="Whether the command succeeded")
    message: str = Field(..., description="Message describing the result")
    exit_code: ExitCode = Field(ExitCode.OK, description="Process exit code")
    files: List[str] = Field(default_factory=list, description="Files written")
    output: Optional[str] = Field(None, description="Text destined for stdout")
    details: Dict[str, Any] = Field(default_factory=dict, description="Extra result data")


def check_columns(columns: Sequence[str], allowed: Sequence[str], command: str) -> None:
    """
    Ensure every requested column is produced by the command.

    Raises:
        ValueError: If a column is not available for the command.
    """
    unavailable = [column for column in columns if column not in allowed]
    if unavailable:
        raise ValueError(
            f"Columns {unavailable} are not available for '{command}'; choose from {list(allowed)}"
        )


def build_chart(
    table: Table,
    title: str,
    y_label: str,
    x_scale: GridScale,
    x_range: Optional[Sequence[float]] = None,
) -> LineChart:
    """Chart every non-time column of ``table`` against its first column."""
    abscissa = table.column(table.columns[0])
    series = []
    for name in table.columns[1:]:
        if name == "time":
            continue
        points = [
            (x, y)
            for x, y in zip(abscissa, table.column(name))
            if x_range is None or x_range[0] <= x <= x_range[1]
        ]
        series.append(
            ChartSeries(
                label=SERIES_LABELS.get(name, name),
                x=[x for x, _ in points],
                y=[y for _, y in points],
            )
        )
    return LineChart(
        title=title,
        x_label=table.columns[0],
        y_label=y_label,
        x_scale=x_scale,
        series=series,
    )


def emit(
    table: Table, out: OutputRequest, chart: Optional[LineChart], command: str
) -> CommandResponse:
    """
    Write a table (and optional chart) as requested.

    Raises:
        OSError: If an output file cannot be written.
    """
    text = write_table(table, out.format, out.path)
    files = [out.path] if out.path else []
    if chart is not None and out.chart_path:
        write_svg(chart, out.chart_path)
        files.append(out.chart_path)

    return CommandResponse(
        success=True,
        message=f"{command}: {len(table.rows)} rows",
        files=files,
        output=None if out.path else text,
    )
