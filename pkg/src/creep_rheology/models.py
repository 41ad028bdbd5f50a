"""
Material functions of the Becker and Lomnitz rheological models.

This module provides the creep functions, their rates, the dimensional creep
compliance J(t) = J_U [1 + q psi(t / tau0)], the closed-form retardation
spectra and a quadrature reconstruction of the creep function from its
spectrum.
"""

import logging
import math
from enum import Enum
from typing import Callable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field
from scipy.integrate import quad

from creep_rheology.specfun import (
    DEFAULT_EVAL_CONTROL,
    EvalControl,
    becker_rate,
    ein,
    lomnitz_rate,
    log1p_safe,
)
from creep_rheology.utils.errors import DomainError, QuadratureConvergenceError

logger = logging.getLogger(__name__)

# Gauss-Kronrod 21-point rule used by QUADPACK's qags
_NODES_PER_PANEL = 21


class ModelKind(str, Enum):
    """Rheological models supported by creep-rheology."""

    BECKER = "becker"
    LOMNITZ = "lomnitz"


class MaterialParams(BaseModel):
    """Physical parameters of the creep law J(t) = J_U [1 + q psi(t / tau0)]."""

    model_config = ConfigDict(frozen=True)

    j_u: float = Field(1.0, gt=0, allow_inf_nan=False, description="Un-relaxed compliance")
    q: float = Field(1.0, gt=0, allow_inf_nan=False, description="Dimensionless material constant")
    tau0: float = Field(1.0, gt=0, allow_inf_nan=False, description="Characteristic time")


class QuadratureConfig(BaseModel):
    """Tolerances and node budget for the spectral integral."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(1e-9, gt=0, allow_inf_nan=False)
    rel_tol: float = Field(1e-9, gt=0, allow_inf_nan=False)
    max_nodes: int = Field(4096, ge=16)


DEFAULT_QUADRATURE = QuadratureConfig()


def psi(kind: ModelKind, t: float, ctl: EvalControl = DEFAULT_EVAL_CONTROL) -> float:
    """
    Dimensionless creep function psi(t) with tau0 = 1.

    Args:
        kind: Rheological model.
        t: Dimensionless time, t >= 0.
        ctl: Evaluation controls for Ein.

    Returns:
        float: Ein(t) for Becker, log(1 + t) for Lomnitz.
    """
    if kind == ModelKind.BECKER:
        return ein(t, ctl)
    return log1p_safe(t)


def dpsi(kind: ModelKind, t: float) -> float:
    """Rate of creep d psi / dt with tau0 = 1."""
    if kind == ModelKind.BECKER:
        return becker_rate(t)
    return lomnitz_rate(t)


def compliance(
    params: MaterialParams,
    kind: ModelKind,
    t: float,
    ctl: EvalControl = DEFAULT_EVAL_CONTROL,
) -> float:
    """
    Creep compliance J(t) = J_U [1 + q psi(t / tau0)].

    Args:
        params: Material parameters.
        kind: Rheological model.
        t: Time in the units of tau0, t >= 0.
        ctl: Evaluation controls for Ein.

    Returns:
        float: Compliance in reciprocal stress units.
    """
    return params.j_u * (1.0 + params.q * psi(kind, t / params.tau0, ctl))


def spectrum(kind: ModelKind, tau: float) -> float:
    """
    Closed-form retardation spectrum.

    Becker: H(tau - 1) / tau with H(0) = 1. Lomnitz: exp(-1/tau) / tau.

    Raises:
        DomainError: If tau is not a finite positive number.
    """
    tau = float(tau)
    if not math.isfinite(tau) or tau <= 0:
        raise DomainError(f"tau must be finite and positive, got {tau}")
    if kind == ModelKind.BECKER:
        return 1.0 / tau if tau >= 1.0 else 0.0
    return math.exp(-1.0 / tau) / tau


def spectrum_peak(kind: ModelKind, taus: Sequence[float]) -> Tuple[float, float]:
    """Return (tau, value) of the largest sampled spectrum value; first one wins ties."""
    if not taus:
        raise DomainError("at least one retardation time is required")
    best_tau, best_value = taus[0], spectrum(kind, taus[0])
    for tau in taus[1:]:
        value = spectrum(kind, tau)
        if value > best_value:
            best_tau, best_value = tau, value
    return float(best_tau), best_value


def _saturation(t: float, rate: float) -> float:
    # 1 - exp(-t * rate) without cancellation
    return -math.expm1(-t * rate)


def _spectral_panels(kind: ModelKind, t: float) -> List[Callable[[float], float]]:
    """
    Integrands of the reconstruction split at tau = 1, each over [0, 1].

    The tail tau in [1, inf) is mapped by s = 1/tau, where
    R(tau) (1 - exp(-t/tau)) d tau becomes R(1/s) (1 - exp(-t s)) / s^2 ds.
    """

    def tail(s: float) -> float:
        if s <= 0.0:
            return t
        weight = 1.0 if kind == ModelKind.BECKER else math.exp(-s)
        return weight * _saturation(t, s) / s

    if kind == ModelKind.BECKER:
        return [tail]

    def head(tau: float) -> float:
        if tau <= 0.0:
            return 0.0
        return math.exp(-1.0 / tau) / tau * _saturation(t, 1.0 / tau)

    return [head, tail]


def spectrum_reconstruct(
    kind: ModelKind,
    t: float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """
    Rebuild psi(t) from the retardation spectrum.

    Evaluates int_0^inf R(tau) (1 - exp(-t/tau)) d tau under the normalization
    J_U q = 1, which the closed-form spectra reproduce exactly.

    Args:
        kind: Rheological model.
        t: Dimensionless time, t >= 0.
        cfg: Quadrature tolerances and node budget.

    Returns:
        float: The reconstructed creep function.

    Raises:
        DomainError: If t is negative or not finite.
        QuadratureConvergenceError: If the tolerance is not met within max_nodes.
    """
    t = float(t)
    if not math.isfinite(t) or t < 0:
        raise DomainError(f"t must be finite and non-negative, got {t}")
    if t == 0.0:
        return 0.0

    panels = _spectral_panels(kind, t)
    # each bisection of qags costs two panels
    limit = max(1, cfg.max_nodes // (2 * _NODES_PER_PANEL * len(panels)))
    total = 0.0
    total_error = 0.0
    evaluations = 0
    for integrand in panels:
        result = quad(
            integrand,
            0.0,
            1.0,
            epsabs=cfg.abs_tol / len(panels),
            epsrel=cfg.rel_tol,
            limit=limit,
            full_output=1,
        )
        value, error, info = result[0], result[1], result[2]
        evaluations += int(info["neval"])
        total += value
        total_error += error
        if len(result) > 3:
            raise QuadratureConvergenceError(
                f"Spectral integral for {kind.value} at t={t} did not converge: {result[3]}",
                error_estimate=total_error,
                tolerance=cfg.abs_tol + cfg.rel_tol * abs(total),
                evaluations=evaluations,
            )

    # per-panel targets add up
    tolerance = cfg.abs_tol + cfg.rel_tol * abs(total)
    if total_error > tolerance or evaluations > cfg.max_nodes:
        raise QuadratureConvergenceError(
            f"Spectral integral for {kind.value} at t={t} reached error {total_error:.3e} "
            f"with {evaluations} evaluations (tolerance {tolerance:.3e}, budget {cfg.max_nodes})",
            error_estimate=total_error,
            tolerance=tolerance,
            evaluations=evaluations,
        )

    logger.debug(
        f"Reconstructed {kind.value} creep at t={t}: {total} "
        f"(error {total_error:.2e}, {evaluations} evaluations)"
    )
    return total


def compliance_from_spectrum(
    params: MaterialParams,
    kind: ModelKind,
    t: float,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> float:
    """Creep compliance rebuilt from the spectrum, J_U [1 + q * reconstruction(t / tau0)]."""
    return params.j_u * (1.0 + params.q * spectrum_reconstruct(kind, t / params.tau0, cfg))
