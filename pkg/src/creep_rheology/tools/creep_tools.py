"""
Creep tools for creep-rheology.

This module tabulates the creep functions and the rates of creep of the
Becker and Lomnitz models.
"""

import logging
from typing import Callable, Dict, Sequence

import numpy as np

from creep_rheology.models import ModelKind, compliance, dpsi, psi
from creep_rheology.tools.common import (
    CommandResponse,
    TableParams,
    build_chart,
    check_columns,
    emit,
)
from creep_rheology.utils.config import RunConfig
from creep_rheology.utils.output import Table

logger = logging.getLogger(__name__)

CREEP_COLUMNS = ("psi_becker", "psi_lomnitz")
RATE_COLUMNS = ("dpsi_becker", "dpsi_lomnitz")

CREEP_AVAILABLE = ("time",) + CREEP_COLUMNS + ("j_becker", "j_lomnitz")
RATE_AVAILABLE = ("time",) + RATE_COLUMNS


class CreepParams(TableParams):
    """Parameters for tabulating creep functions."""


class RateParams(TableParams):
    """Parameters for tabulating rates of creep."""


def _series_functions(config: RunConfig) -> Dict[str, Callable[[float], float]]:
    material = config.material
    ctl = config.eval_control
    return {
        "time": lambda t: t * material.tau0,
        "psi_becker": lambda t: psi(ModelKind.BECKER, t, ctl),
        "psi_lomnitz": lambda t: psi(ModelKind.LOMNITZ, t, ctl),
        "j_becker": lambda t: compliance(material, ModelKind.BECKER, t * material.tau0, ctl),
        "j_lomnitz": lambda t: compliance(material, ModelKind.LOMNITZ, t * material.tau0, ctl),
        "dpsi_becker": lambda t: dpsi(ModelKind.BECKER, t),
        "dpsi_lomnitz": lambda t: dpsi(ModelKind.LOMNITZ, t),
    }


def creep_table(config: RunConfig, times: Sequence[float], columns: Sequence[str]) -> Table:
    """
    Evaluate creep-law series on dimensionless times.

    Args:
        config: Run configuration.
        times: Dimensionless sample times.
        columns: Series identifiers (creep, compliance, rate or time).

    Returns:
        Table: Column ``t`` followed by the requested series.
    """
    functions = _series_functions(config)
    times = np.asarray(times, dtype=float)
    values = [times] + [np.array([functions[name](t) for t in times]) for name in columns]
    return Table.from_columns(["t"] + list(columns), values)


def cmd_creep(config: RunConfig, params: CreepParams) -> CommandResponse:
    """
    Tabulate the creep functions psi of both models.

    Args:
        config: Run configuration.
        params: Grid and output request.

    Returns:
        CommandResponse: Result with the table text when written to stdout.
    """
    check_columns(params.out.columns, CREEP_AVAILABLE, "creep")
    table = creep_table(config, params.grid.values(), params.out.columns)
    chart = build_chart(table, "Creep functions", "psi(t)", params.grid.scale)
    logger.info(f"Tabulated creep functions on {len(table.rows)} points")
    return emit(table, params.out, chart, "creep")


def cmd_rate(config: RunConfig, params: RateParams) -> CommandResponse:
    """
    Tabulate the rates of creep d psi / dt of both models.

    Args:
        config: Run configuration.
        params: Grid and output request.

    Returns:
        CommandResponse: Result with the table text when written to stdout.
    """
    check_columns(params.out.columns, RATE_AVAILABLE, "rate")
    table = creep_table(config, params.grid.values(), params.out.columns)
    chart = build_chart(table, "Rate of creep", "dpsi/dt", params.grid.scale)
    logger.info(f"Tabulated rates of creep on {len(table.rows)} points")
    return emit(table, params.out, chart, "rate")
