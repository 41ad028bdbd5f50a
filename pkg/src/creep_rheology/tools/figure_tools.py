"""
Figure tools for creep-rheology.

This module reproduces the comparison figures of the two rheologies: creep
functions, rates of creep, relaxation functions and retardation spectra, each
as a CSV table plus one SVG chart per abscissa scale.
"""

import logging
import os
from typing import Dict, List, Literal, Optional

import numpy as np
import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from creep_rheology.tools.common import CommandResponse, build_chart
from creep_rheology.tools.creep_tools import creep_table
from creep_rheology.tools.relaxation_tools import relaxation_table, solve_both
from creep_rheology.tools.spectrum_tools import spectrum_chart, spectrum_table
from creep_rheology.utils.config import (
    KNOWN_SERIES,
    GridScale,
    GridSpec,
    OutputFormat,
    RunConfig,
)
from creep_rheology.utils.errors import FigureConfigError
from creep_rheology.utils.output import Table, write_table
from creep_rheology.utils.svg import write_svg
from creep_rheology.volterra import TimeGrid

logger = logging.getLogger(__name__)

CHART_SUFFIX = {GridScale.LINEAR: "a", GridScale.LOG: "b"}


class FigureDefinition(BaseModel):
    """One figure of the figure set."""

    name: str
    slug: str
    command: Literal["creep", "rate", "relax", "spectrum"]
    title: str
    y_label: str
    columns: List[str] = Field(..., min_length=1)
    step: Optional[float] = Field(None, gt=0, description="Solver step for relax figures")
    charts: Dict[GridScale, GridSpec] = Field(..., min_length=1)

    @field_validator("columns")
    @classmethod
    def _check_columns(cls, columns: List[str]) -> List[str]:
        unknown = [column for column in columns if column not in KNOWN_SERIES]
        if unknown:
            raise ValueError(f"Unknown series {unknown}")
        return columns

    @property
    def csv_name(self) -> str:
        return f"{self.name}_{self.slug}.csv"

    def svg_name(self, scale: GridScale) -> str:
        return f"{self.name}{CHART_SUFFIX[scale]}_{self.slug}_{scale.value}.svg"

    def sample_points(self) -> np.ndarray:
        """Sorted union of every chart grid."""
        points = np.array([], dtype=float)
        for grid in self.charts.values():
            points = np.union1d(points, grid.values())
        return points


class FigureSet(BaseModel):
    figures: List[FigureDefinition] = Field(..., min_length=1)


class FiguresParams(BaseModel):
    """Parameters for reproducing the figure set."""

    out_dir: str = Field(..., description="Directory receiving the figure files")


def load_figure_set(path: str) -> FigureSet:
    """
    Load the figure definitions from a YAML file.

    Args:
        path: Path to the figure-set YAML file.

    Returns:
        FigureSet: Validated figure definitions.

    Raises:
        FigureConfigError: If the file is missing, unreadable or malformed.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
    except FileNotFoundError as e:
        raise FigureConfigError(f"Figure config file not found at {path}") from e
    except yaml.YAMLError as e:
        raise FigureConfigError(f"Error parsing figure config file {path}: {e}") from e

    if not isinstance(loaded, dict):
        raise FigureConfigError(
            f"Invalid format in {path}: expected a mapping, got {type(loaded).__name__}"
        )
    try:
        figure_set = FigureSet(**loaded)
    except ValidationError as e:
        raise FigureConfigError(f"Invalid figure definitions in {path}: {e}") from e

    logger.info(f"Loaded {len(figure_set.figures)} figure definitions from {path}")
    return figure_set


def figure_table(config: RunConfig, figure: FigureDefinition) -> Table:
    """Compute the table of a figure on the union of its chart grids."""
    points = figure.sample_points()
    if figure.command in ("creep", "rate"):
        return creep_table(config, points, figure.columns)
    if figure.command == "spectrum":
        return spectrum_table(points, figure.columns)

    step = figure.step or 5e-3
    grid = TimeGrid.from_step(float(points[-1]), step)
    solutions = solve_both(config.material.q, grid)
    return relaxation_table(config, solutions, figure.columns, points)


def render_figure(config: RunConfig, figure: FigureDefinition, out_dir: str) -> List[str]:
    """
    Write the CSV table and the SVG charts of one figure.

    Returns:
        List[str]: Paths written.

    Raises:
        OSError: If a file cannot be written.
    """
    table = figure_table(config, figure)
    csv_path = os.path.join(out_dir, figure.csv_name)
    write_table(table, OutputFormat.CSV, csv_path)
    written = [csv_path]

    for scale in (GridScale.LINEAR, GridScale.LOG):
        grid = figure.charts.get(scale)
        if grid is None:
            continue
        x_range = (grid.t_min, grid.t_max)
        if figure.command == "spectrum":
            chart = spectrum_chart(table, scale, x_range)
        else:
            chart = build_chart(table, figure.title, figure.y_label, scale, x_range)
        svg_path = os.path.join(out_dir, figure.svg_name(scale))
        write_svg(chart, svg_path)
        written.append(svg_path)
    return written


def cmd_figures(config: RunConfig, params: FiguresParams) -> CommandResponse:
    """
    Reproduce every figure of the figure set into ``out_dir``.

    Args:
        config: Run configuration (figure set path, material parameters).
        params: Output directory.

    Returns:
        CommandResponse: Result listing the files written.

    Raises:
        OSError: If the directory or a file cannot be written.
    """
    figure_set = load_figure_set(config.figure_config_path)
    os.makedirs(params.out_dir, exist_ok=True)

    files: List[str] = []
    for figure in figure_set.figures:
        files.extend(render_figure(config, figure, params.out_dir))
        logger.info(f"Rendered {figure.name} ({figure.title})")

    return CommandResponse(
        success=True,
        message=f"figures: wrote {len(files)} files to {params.out_dir}",
        files=files,
    )
