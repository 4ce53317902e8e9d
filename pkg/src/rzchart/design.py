"""One-sided chart design for a finite production run.

The false-alarm probability ``alpha0`` is solved so that the in-control
truncated average run length equals the target (the number of planned
inspections by default), then the single probability limit is placed at the
matching quantile of the in-control sample-ratio distribution: the
``alpha0`` quantile for a lower chart, the ``1 - alpha0`` quantile for an
upper chart.  The unused bound is an explicit sentinel (+inf, or 0 for the
upper chart's lower bound) and never triggers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .ratio import SampleRatioParams, sample_ratio_idf
from .run_length import tarl

_ALPHA_LO = 1e-12
_ALPHA_HI = 1.0 - 1e-12
_ALPHA_RESIDUAL = 1e-12
_MAX_BISECT = 200


class ChartSide(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class ChartConfig:
    """A designed one-sided chart.

    ``lcl``/``ucl`` hold the solved probability limit on the monitored side
    and the never-triggering sentinel on the other: a lower chart has
    ``ucl = +inf``, an upper chart has ``lcl = 0``.
    """

    side: ChartSide
    n: int
    horizon_inspections: int
    z0: float
    rho0: float
    gamma_x: float
    gamma_y: float
    alpha0: float
    lcl: float
    ucl: float
    tarl0_target: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha0 < 1.0:
            raise ValueError(f"alpha0 must lie in (0, 1), got {self.alpha0!r}")
        if self.side is ChartSide.LOWER:
            if not (math.isfinite(self.lcl) and math.isinf(self.ucl) and self.ucl > 0):
                raise ValueError("lower chart requires finite lcl and ucl = +inf")
        else:
            if not (self.lcl == 0.0 and math.isfinite(self.ucl)):
                raise ValueError("upper chart requires lcl = 0 and finite ucl")
        if not self.lcl < self.z0 < self.ucl:
            raise ValueError(
                f"limits must straddle z0: lcl={self.lcl!r} z0={self.z0!r} ucl={self.ucl!r}")

    def sample_params(self) -> SampleRatioParams:
        return SampleRatioParams(self.n, self.gamma_x, self.gamma_y,
                                 self.z0, self.rho0)


@dataclass(frozen=True)
class RunPlan:
    """Production-run schedule: horizon in hours, inspections, lot size."""

    horizon_hours: float
    inspections: int
    lot_size: int

    def __post_init__(self) -> None:
        if not self.horizon_hours > 0.0:
            raise ValueError(f"horizon_hours must be > 0, got {self.horizon_hours!r}")
        if not (isinstance(self.inspections, int) and self.inspections >= 1):
            raise ValueError(f"inspections must be an integer >= 1, got {self.inspections!r}")
        if not (isinstance(self.lot_size, int) and self.lot_size >= 1):
            raise ValueError(f"lot_size must be an integer >= 1, got {self.lot_size!r}")


def sampling_frequency(plan: RunPlan) -> float:
    """Time between consecutive inspections, H / (I + 1) hours."""
    return plan.horizon_hours / (plan.inspections + 1)


def solve_alpha_for_tarl0(horizon: int, target: float | None = None) -> float:
    """Solve tarl(alpha, I) = target for alpha.

    ``target`` defaults to ``I``.  ``tarl`` decreases monotonically from
    I + 1 (alpha -> 0) to 1 (alpha = 1), so plain bisection is safe; it
    stops once the residual drops under 1e-12.

    Raises:
        ValueError: if the target is outside the attainable range (1, I+1).
    """
    if not (isinstance(horizon, int) and horizon >= 2):
        raise ValueError(f"horizon must be an integer >= 2, got {horizon!r}")
    target = float(horizon) if target is None else float(target)
    if not 1.0 < target < horizon + 1:
        raise ValueError(
            f"tarl0 target must lie in (1, {horizon + 1}), got {target!r}")
    lo, hi = _ALPHA_LO, _ALPHA_HI
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        r = tarl(mid, horizon) - target
        if abs(r) <= _ALPHA_RESIDUAL:
            return mid
        if r > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def design_chart(side: ChartSide, n: int, gamma_x: float, gamma_y: float,
                 z0: float, rho0: float, horizon_inspections: int,
                 tarl0_target: float | None = None) -> ChartConfig:
    """Design a one-sided chart for the given process parameters.

    The solved limit is the alpha0 quantile (lower side) or 1 - alpha0
    quantile (upper side) of the in-control distribution of the ratio of
    sample means.
    """
    side = ChartSide(side)
    sp = SampleRatioParams(n, gamma_x, gamma_y, z0, rho0)
    alpha0 = solve_alpha_for_tarl0(horizon_inspections, tarl0_target)
    if side is ChartSide.LOWER:
        lcl = sample_ratio_idf(alpha0, sp)
        ucl = math.inf
    else:
        lcl = 0.0
        ucl = sample_ratio_idf(1.0 - alpha0, sp)
    return ChartConfig(side=side, n=n, horizon_inspections=horizon_inspections,
                       z0=z0, rho0=rho0, gamma_x=gamma_x, gamma_y=gamma_y,
                       alpha0=alpha0, lcl=lcl, ucl=ucl,
                       tarl0_target=float(horizon_inspections)
                       if tarl0_target is None else float(tarl0_target))
