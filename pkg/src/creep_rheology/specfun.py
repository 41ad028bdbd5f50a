"""
Special functions behind the Becker and Lomnitz creep laws.

This module provides scalar binary64 evaluations of the modified exponential
integral Ein, the exponential integral E1, log(1 + t) and the two creep rates.
Ein is summed as a power series for small arguments and through the identity
Ein(t) = gamma + log(t) + E1(t) otherwise, with E1 taken from a continued
fraction above t = 1.
"""

import logging
import math
import sys
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from creep_rheology.utils.errors import DomainError

logger = logging.getLogger(__name__)

# Euler-Mascheroni constant
EULER_GAMMA = 0.57721566490153286060651209008240243

# Below this argument the Becker rate is taken from its Taylor series.
BECKER_RATE_SERIES_LIMIT = 1e-4

# E1 switches from the Ein identity to the continued fraction above this argument.
E1_SERIES_LIMIT = 1.0

_CF_MAX_ITERATIONS = 500
_CF_TINY = 1e-300
_CF_EPS = 2.0 * sys.float_info.epsilon


class EvalControl(BaseModel):
    """Controls for the evaluation of Ein."""

    model_config = ConfigDict(frozen=True)

    series_threshold: float = Field(
        8.0, gt=0, allow_inf_nan=False, description="Switch point between series and E1 path"
    )
    max_terms: int = Field(500, ge=1, description="Maximum number of series terms")
    abs_tol: float = Field(
        1e-16, gt=0, allow_inf_nan=False, description="Series truncation tolerance"
    )


DEFAULT_EVAL_CONTROL = EvalControl()


def _check_time(t: float, name: str = "t") -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0:
        raise DomainError(f"{name} must be finite and non-negative, got {t}")
    return t


def ein_partial_sum(t: float, n_terms: int) -> float:
    """
    Partial sum of the alternating series sum (-1)^(n-1) t^n / (n n!).

    Args:
        t: Dimensionless time, t >= 0.
        n_terms: Number of terms to keep.

    Returns:
        float: Sum of the first ``n_terms`` terms.
    """
    t = _check_time(t)
    if n_terms < 0:
        raise DomainError(f"n_terms must be non-negative, got {n_terms}")

    total = 0.0
    power_over_factorial = 1.0
    for n in range(1, n_terms + 1):
        power_over_factorial *= t / n
        term = power_over_factorial / n
        total += term if n % 2 == 1 else -term
    return total


def ein_series(t: float, ctl: EvalControl = DEFAULT_EVAL_CONTROL) -> float:
    """
    Evaluate Ein(t) from its power series.

    The series is summed in the positive-term form
    Ein(t) = exp(-t) * sum H_n t^n / n!, H_n being the harmonic numbers, which
    has the same coefficients as the alternating series once expanded but
    keeps full relative accuracy up to t of a few tens.

    Args:
        t: Dimensionless time, t >= 0.
        ctl: Evaluation controls.

    Returns:
        float: Ein(t).
    """
    t = _check_time(t)
    if t == 0.0:
        return 0.0

    scale = math.exp(-t)
    total = 0.0
    power_over_factorial = 1.0
    harmonic = 0.0
    for n in range(1, ctl.max_terms + 1):
        power_over_factorial *= t / n
        harmonic += 1.0 / n
        term = harmonic * power_over_factorial
        total += term
        if n > t and scale * term <= ctl.abs_tol:
            return scale * total

    logger.warning(
        f"Ein series at t={t} not converged after {ctl.max_terms} terms "
        f"(last term {scale * term:.3e})"
    )
    return scale * total


def _e1_continued_fraction(t: float) -> float:
    # Modified Lentz evaluation of E1(t) = exp(-t) / (t + 1 - 1/(t + 3 - 4/(t + 5 - ...)))
    b = t + 1.0
    c = 1.0 / _CF_TINY
    d = 1.0 / b
    h = d
    for i in range(1, _CF_MAX_ITERATIONS + 1):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h * math.exp(-t)

    logger.warning(f"E1 continued fraction at t={t} not converged")
    return h * math.exp(-t)


def e1(t: float, ctl: EvalControl = DEFAULT_EVAL_CONTROL) -> float:
    """
    Evaluate the exponential integral E1(t) = int_t^inf exp(-u)/u du.

    Args:
        t: Dimensionless time, t > 0.
        ctl: Evaluation controls for the small-argument path.

    Returns:
        float: E1(t), positive and strictly decreasing.

    Raises:
        DomainError: If t is not a finite positive number.
    """
    t = float(t)
    if not math.isfinite(t) or t <= 0:
        raise DomainError(f"t must be finite and positive, got {t}")
    if t <= E1_SERIES_LIMIT:
        return ein_series(t, ctl) - EULER_GAMMA - math.log(t)
    return _e1_continued_fraction(t)


def ein_asymptotic(t: float, ctl: EvalControl = DEFAULT_EVAL_CONTROL) -> float:
    """Evaluate Ein(t) as gamma + log(t) + E1(t), for t > 0."""
    tail = e1(t, ctl)
    return EULER_GAMMA + math.log(t) + tail


def ein(t: float, ctl: EvalControl = DEFAULT_EVAL_CONTROL) -> float:
    """
    Evaluate the modified exponential integral Ein(t) = int_0^t (1 - exp(-u))/u du.

    Args:
        t: Dimensionless time, t >= 0.
        ctl: Evaluation controls.

    Returns:
        float: Ein(t), non-negative and strictly increasing.

    Raises:
        DomainError: If t is negative or not finite.
    """
    t = _check_time(t)
    if t <= ctl.series_threshold:
        return ein_series(t, ctl)
    return ein_asymptotic(t, ctl)


def becker_rate(t: float) -> float:
    """
    Rate of creep of the Becker model, (1 - exp(-t))/t, equal to 1 at t = 0.

    Raises:
        DomainError: If t is negative or not finite.
    """
    t = _check_time(t)
    if t < BECKER_RATE_SERIES_LIMIT:
        return 1.0 - t / 2.0 + t * t / 6.0 - t * t * t / 24.0
    return -math.expm1(-t) / t


def lomnitz_rate(t: float) -> float:
    """Rate of creep of the Lomnitz model, 1/(1 + t)."""
    t = _check_time(t)
    return 1.0 / (1.0 + t)


def log1p_safe(t: float) -> float:
    """log(1 + t) without cancellation for small t."""
    t = _check_time(t)
    return math.log1p(t)


def regime_gap(t: float, ctl: Optional[EvalControl] = None) -> float:
    """Absolute difference between the series and the E1 paths of Ein at t > 0."""
    ctl = ctl or DEFAULT_EVAL_CONTROL
    return abs(ein_series(t, ctl) - ein_asymptotic(t, ctl))
