"""
Configuration module for creep-rheology.
"""

import math
import os
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from creep_rheology.models import DEFAULT_QUADRATURE, MaterialParams, QuadratureConfig
from creep_rheology.specfun import DEFAULT_EVAL_CONTROL, EvalControl

DEFAULT_FIGURE_CONFIG_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config", "figures.yaml"
)

# Every column identifier a table may carry besides its abscissa.
KNOWN_SERIES = (
    "time",
    "psi_becker",
    "psi_lomnitz",
    "j_becker",
    "j_lomnitz",
    "dpsi_becker",
    "dpsi_lomnitz",
    "phi_becker",
    "phi_lomnitz",
    "g_becker",
    "g_lomnitz",
    "dphi_becker",
    "dphi_lomnitz",
    "r_becker",
    "r_lomnitz",
)


class GridScale(str, Enum):
    """Spacing of sample points."""

    LINEAR = "linear"
    LOG = "log"


class OutputFormat(str, Enum):
    """Table serialization formats."""

    CSV = "csv"
    JSON = "json"


class GridSpec(BaseModel):
    """Sample points over dimensionless time (or retardation time)."""

    t_min: float = Field(0.0, ge=0, allow_inf_nan=False)
    t_max: float = Field(..., gt=0, allow_inf_nan=False)
    points: int = Field(101, ge=2)
    scale: GridScale = GridScale.LINEAR

    @model_validator(mode="after")
    def _check_range(self) -> "GridSpec":
        if self.t_max <= self.t_min:
            raise ValueError(f"t_max ({self.t_max}) must exceed t_min ({self.t_min})")
        if self.scale == GridScale.LOG and self.t_min <= 0:
            raise ValueError("log scale requires t_min > 0")
        return self

    def values(self) -> np.ndarray:
        """Sample points, ends included exactly."""
        if self.scale == GridScale.LOG:
            points = np.logspace(math.log10(self.t_min), math.log10(self.t_max), self.points)
        else:
            points = np.linspace(self.t_min, self.t_max, self.points)
        points[0], points[-1] = self.t_min, self.t_max
        return points


class OutputRequest(BaseModel):
    """Where and how a table is written."""

    format: OutputFormat = OutputFormat.CSV
    path: Optional[str] = Field(None, description="Table file; stdout when absent")
    chart_path: Optional[str] = Field(None, description="Optional SVG chart file")
    columns: List[str] = Field(..., min_length=1)

    @field_validator("columns")
    @classmethod
    def _check_columns(cls, columns: List[str]) -> List[str]:
        unknown = [column for column in columns if column not in KNOWN_SERIES]
        if unknown:
            raise ValueError(f"Unknown series {unknown}; known series: {list(KNOWN_SERIES)}")
        return columns


class RunConfig(BaseModel):
    """Run-wide configuration shared by every command."""

    material: MaterialParams = MaterialParams()
    eval_control: EvalControl = DEFAULT_EVAL_CONTROL
    quadrature: QuadratureConfig = DEFAULT_QUADRATURE
    figure_config_path: str = DEFAULT_FIGURE_CONFIG_PATH
    debug: bool = False
