"""Out-of-control performance of a designed chart.

A shift multiplies the in-control ratio by ``tau`` (and may change the
correlation to ``rho1``).  ``error_probabilities`` evaluates the chart's
type-I and type-II error under that scenario; ``tarl1`` converts the
detection probability into the expected truncated run length.

The per-sample dispersions are assumed to stay proportional to the process
means, so the standard-deviation ratio follows the shifted ratio
(``omega1 = tau*z0*gamma_x/gamma_y``).  ``omega_mode="in_control"`` instead
holds the numerator dispersion at its pre-shift level, which is the other
defensible reading; the regenerated reference tables confirm the
proportional one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .design import ChartConfig, ChartSide
from .normal import std_normal_cdf
from .ratio import SampleRatioParams, sample_ratio_cdf
from .run_length import tarl

OMEGA_MODES = ("proportional", "in_control")


@dataclass(frozen=True)
class ShiftScenario:
    """Out-of-control state: shifted ratio z1 = tau*z0, correlation rho1."""

    tau: float
    rho1: float

    def __post_init__(self) -> None:
        if not self.tau > 0.0:
            raise ValueError(f"tau must be > 0, got {self.tau!r}")
        if not -1.0 < self.rho1 < 1.0:
            raise ValueError(f"rho1 must lie in (-1, 1), got {self.rho1!r}")


def _shifted_cdf(z: float, cfg: ChartConfig, sc: ShiftScenario,
                 omega_mode: str) -> float:
    z1 = sc.tau * cfg.z0
    if omega_mode == "proportional":
        sp1 = SampleRatioParams(cfg.n, cfg.gamma_x, cfg.gamma_y, z1, sc.rho1)
        return sample_ratio_cdf(z, sp1)
    if omega_mode == "in_control":
        # sigma_x frozen at the in-control level: the numerator CV becomes
        # gamma_x*z0/z1 while omega stays omega0; the median still moves to z1.
        omega0 = cfg.z0 * cfg.gamma_x / cfg.gamma_y
        b2 = omega0 * omega0 - 2.0 * sc.rho1 * omega0 * z + z * z
        a = math.sqrt(cfg.n) * (z - z1) / cfg.gamma_y
        return std_normal_cdf(a / math.sqrt(b2))
    raise ValueError(f"omega_mode must be one of {OMEGA_MODES}, got {omega_mode!r}")


def error_probabilities(cfg: ChartConfig, sc: ShiftScenario,
                        omega_mode: str = "proportional") -> tuple[float, float]:
    """(alpha, beta) for the chart under the given shift scenario.

    alpha is the in-control probability of a point beyond the limit; beta is
    the probability that a shifted point stays inside it.
    """
    sp0 = cfg.sample_params()
    if cfg.side is ChartSide.LOWER:
        alpha = sample_ratio_cdf(cfg.lcl, sp0)
        beta = 1.0 - _shifted_cdf(cfg.lcl, cfg, sc, omega_mode)
    else:
        alpha = 1.0 - sample_ratio_cdf(cfg.ucl, sp0)
        beta = _shifted_cdf(cfg.ucl, cfg, sc, omega_mode)
    return alpha, beta


def tarl1(cfg: ChartConfig, sc: ShiftScenario,
          omega_mode: str = "proportional") -> float:
    """Expected truncated run length under the shift scenario."""
    _, beta = error_probabilities(cfg, sc, omega_mode)
    return tarl(1.0 - beta, cfg.horizon_inspections)
