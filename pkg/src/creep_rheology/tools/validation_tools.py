"""
Validation tools for creep-rheology.

This module runs the acceptance checks of the library against independent
oracles: adaptive quadrature for the special functions, the closed-form creep
functions for the spectral reconstruction, small-time series for the
relaxation functions and grid refinement for the solver order.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

import numpy as np
from pydantic import BaseModel, Field
from scipy.integrate import quad

from creep_rheology.models import (
    ModelKind,
    dpsi,
    psi,
    spectrum,
    spectrum_peak,
    spectrum_reconstruct,
)
from creep_rheology.specfun import e1, ein, regime_gap
from creep_rheology.tools.common import CommandResponse
from creep_rheology.utils.config import RunConfig
from creep_rheology.utils.errors import ExitCode
from creep_rheology.volterra import TimeGrid, estimate_order, sample_solution, solve_relaxation

logger = logging.getLogger(__name__)

# Second-order coefficient b of phi(t) = 1 - t + b t^2 for q = 1
SMALL_TIME_COEFFICIENTS = {ModelKind.BECKER: 0.75, ModelKind.LOMNITZ: 1.0}
SMALL_TIMES = (0.0025, 0.005, 0.0075, 0.01)
ORDERING_STEP = 5e-3
ORDERING_MARGIN = 1e-12
MONOTONE_T_MAX = 100.0


class ValidateParams(BaseModel):
    """Parameters for the validation suite."""

    step: float = Field(1e-4, gt=0, le=0.5, description="Solver step of the small-time check")
    spectrum_normalization: float = Field(
        1.0, gt=0, description="Factor applied to the reconstructed creep in the round trip"
    )
    order_t_max: float = Field(10.0, gt=0, description="Interval of the convergence study")
    order_base_steps: int = Field(1000, ge=1, description="Steps on the coarsest grid")
    order_levels: int = Field(3, ge=3, description="Number of refinement levels")


class CheckResult(BaseModel):
    """Outcome of one validation check."""

    name: str
    passed: bool
    achieved: float = Field(..., description="Achieved error or observed value")
    tolerance: str = Field(..., description="Acceptance criterion")
    detail: str = ""


Check = Callable[[], CheckResult]


def _oracle(f: Callable[[float], float], a: float, b: float) -> float:
    return quad(f, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)[0]


def _result(
    name: str, achieved: float, passed: bool, tolerance: str, detail: str = ""
) -> CheckResult:
    return CheckResult(
        name=name, passed=bool(passed), achieved=float(achieved), tolerance=tolerance, detail=detail
    )


def check_special_functions(config: RunConfig) -> CheckResult:
    ctl = config.eval_control
    ein_oracle = _oracle(lambda u: -math.expm1(-u) / u if u > 0 else 1.0, 0.0, 1.0)
    e1_oracles = {t: _oracle(lambda u: math.exp(-u) / u, t, math.inf) for t in (1.0, 10.0)}
    errors = [abs(ein(1.0, ctl) - ein_oracle)]
    errors += [abs(e1(t, ctl) - value) for t, value in e1_oracles.items()]
    worst = max(errors)
    return _result("special_functions", worst, worst <= 1e-10, "<= 1e-10")


def check_regime_overlap(config: RunConfig) -> CheckResult:
    ctl = config.eval_control
    low, high = ctl.series_threshold / 2.0, 2.0 * ctl.series_threshold
    gaps = [regime_gap(t, ctl) for t in np.linspace(low, high, 25)]
    worst = max(gaps)
    return _result("regime_overlap", worst, worst <= 1e-12, "<= 1e-12", f"t in [{low}, {high}]")


def check_spectral_round_trip(
    config: RunConfig, kind: ModelKind, normalization: float
) -> CheckResult:
    errors = []
    for t in np.logspace(-2.0, 2.0, 50):
        rebuilt = normalization * spectrum_reconstruct(kind, t, config.quadrature)
        errors.append(abs(rebuilt - psi(kind, t, config.eval_control)))
    worst = max(errors)
    return _result(f"spectral_round_trip_{kind.value}", worst, worst <= 1e-8, "<= 1e-8")


def check_small_time_series(kind: ModelKind, step: float) -> CheckResult:
    grid = TimeGrid.from_step(max(SMALL_TIMES[-1], 2.0 * step), step)
    sol = solve_relaxation(kind, 1.0, grid)
    b = SMALL_TIME_COEFFICIENTS[kind]
    times = np.array(SMALL_TIMES)
    phi = sample_solution(sol, times)
    excess = np.abs(phi - (1.0 - times + b * times**2)) / (10.0 * times**3)
    worst = float(np.max(excess))
    return _result(
        f"small_t_series_{kind.value}",
        worst,
        worst <= 1.0,
        "error / (10 t^3) <= 1",
        f"h={grid.step:.3g}",
    )


def check_convergence_order(kind: ModelKind, params: ValidateParams) -> CheckResult:
    order = estimate_order(
        kind, 1.0, params.order_t_max, params.order_levels, params.order_base_steps
    )
    return _result(
        f"convergence_order_{kind.value}", order, 1.8 <= order <= 2.2, "p in [1.8, 2.2]"
    )


def check_ordering(config: RunConfig) -> CheckResult:
    times = np.logspace(-3.0, 2.0, 200)
    grid = TimeGrid.from_step(float(times[-1]), ORDERING_STEP)
    becker = sample_solution(solve_relaxation(ModelKind.BECKER, 1.0, grid), times)
    lomnitz = sample_solution(solve_relaxation(ModelKind.LOMNITZ, 1.0, grid), times)
    margins = []
    for t, phi_b, phi_l in zip(times, becker, lomnitz):
        ctl = config.eval_control
        margins.append(psi(ModelKind.BECKER, t, ctl) - psi(ModelKind.LOMNITZ, t, ctl))
        margins.append(dpsi(ModelKind.BECKER, t) - dpsi(ModelKind.LOMNITZ, t))
        margins.append(phi_l - phi_b)
    smallest = min(margins)
    return _result("ordering", smallest, smallest > ORDERING_MARGIN, f"margin > {ORDERING_MARGIN}")


def check_monotone_relaxation(step: float = ORDERING_STEP) -> CheckResult:
    """phi strictly decreasing and positive on (0, 100] for q = 1."""
    grid = TimeGrid.from_step(MONOTONE_T_MAX, step)
    smallest = math.inf
    for kind in ModelKind:
        phi = solve_relaxation(kind, 1.0, grid).phi
        smallest = min(smallest, float(np.min(-np.diff(phi))), float(np.min(phi)))
    return _result(
        "monotone_relaxation",
        smallest,
        smallest > 0.0,
        "min(-d phi, phi) > 0",
        f"h={grid.step:.3g}",
    )


def check_asymptotics() -> CheckResult:
    t = 1000.0
    values = [t * dpsi(kind, t) for kind in ModelKind]
    values += [t * spectrum(kind, t) for kind in ModelKind]
    worst = max(abs(1.0 - v) for v in values)
    passed = all(0.99 <= v <= 1.0 + 1e-12 for v in values)
    return _result("asymptotics", worst, passed, "t psi'(t), tau R(tau) in [0.99, 1]")


def check_spectrum_peak() -> CheckResult:
    taus = sorted(set(np.logspace(-2.0, 3.0, 501).tolist()) | {1.0})
    peak_tau, peak_value = spectrum_peak(ModelKind.LOMNITZ, taus)
    spacing = 10 ** (5.0 / 500) - 1.0
    lomnitz_error = abs(peak_value - math.exp(-1.0)) if abs(peak_tau - 1.0) <= spacing else math.inf
    becker_exact = spectrum(ModelKind.BECKER, 1.0) == 1.0 and all(
        spectrum(ModelKind.BECKER, tau) == (1.0 / tau if tau >= 1.0 else 0.0) for tau in taus
    )
    passed = becker_exact and lomnitz_error <= 1e-12
    return _result(
        "spectrum_peak", lomnitz_error, passed, "Lomnitz peak e^-1 +/- 1e-12 at tau=1"
    )


def build_checks(config: RunConfig, params: ValidateParams) -> List[Tuple[str, Check]]:
    """Assemble the independent checks of the suite."""
    checks: List[Tuple[str, Check]] = [
        ("special_functions", lambda: check_special_functions(config)),
        ("regime_overlap", lambda: check_regime_overlap(config)),
    ]
    for kind in ModelKind:
        checks += [
            (
                f"spectral_round_trip_{kind.value}",
                lambda kind=kind: check_spectral_round_trip(
                    config, kind, params.spectrum_normalization
                ),
            ),
            (
                f"small_t_series_{kind.value}",
                lambda kind=kind: check_small_time_series(kind, params.step),
            ),
            (
                f"convergence_order_{kind.value}",
                lambda kind=kind: check_convergence_order(kind, params),
            ),
        ]
    checks += [
        ("ordering", lambda: check_ordering(config)),
        ("monotone_relaxation", check_monotone_relaxation),
        ("asymptotics", check_asymptotics),
        ("spectrum_peak", check_spectrum_peak),
    ]
    return checks


def _run_check(name: str, check: Check) -> CheckResult:
    try:
        return check()
    except Exception as e:
        logger.error(f"Validation check '{name}' raised: {e}", exc_info=True)
        return _result(name, math.nan, False, "no error", f"{type(e).__name__}: {e}")


def format_report(results: List[CheckResult]) -> str:
    """Fixed-width pass/fail table."""
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  {'status':<6}  {'achieved':>12}  criterion"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status:<6}  {r.achieved:>12.4e}  {r.tolerance}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_validate(config: RunConfig, params: ValidateParams) -> CommandResponse:
    """
    Run the validation suite.

    Args:
        config: Run configuration.
        params: Suite parameters, including the negative-control knobs.

    Returns:
        CommandResponse: Exit code 0 when every check passes, 4 otherwise.
    """
    checks = build_checks(config, params)
    with ThreadPoolExecutor() as executor:
        results = list(executor.map(lambda item: _run_check(*item), checks))

    failed = [r.name for r in results if not r.passed]
    report = format_report(results)
    if failed:
        logger.error(f"Validation failed: {failed}")
        return CommandResponse(
            success=False,
            message=f"validate: {len(failed)} of {len(results)} checks failed: {failed}",
            exit_code=ExitCode.VALIDATION,
            output=report,
            details={"results": [r.model_dump() for r in results]},
        )

    logger.info(f"Validation passed: {len(results)} checks")
    return CommandResponse(
        success=True,
        message=f"validate: all {len(results)} checks passed",
        output=report,
        details={"results": [r.model_dump() for r in results]},
    )
