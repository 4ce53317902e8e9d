"""Truncated run-length law for a finite-horizon chart.

With a constant per-inspection signal probability ``p`` and ``I`` planned
inspections, the run length is geometric, truncated at ``I + 1``: the event
``l = I + 1`` means the run completed with no signal.  ``tarl`` is the
expectation of that law; in control it is the chart's design target, under a
shift it measures detection speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class TrlDistribution:
    """Truncated run-length law with signal probability p and horizon I."""

    p: float
    horizon: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        if not (isinstance(self.horizon, int) and self.horizon >= 1):
            raise ValueError(f"horizon must be an integer >= 1, got {self.horizon!r}")

    def support(self) -> range:
        return range(1, self.horizon + 2)


def _pow_1m(p: float, k: int) -> float:
    """(1 - p)**k via exp(k*log1p(-p)), exact for the edge cases."""
    if k == 0:
        return 1.0
    if p == 0.0:
        return 1.0
    if p == 1.0:
        return 0.0
    return math.exp(k * math.log1p(-p))


def trl_pmf(l: int, d: TrlDistribution) -> float:
    """P(TRL = l): geometric mass for l <= I, survival mass at l = I + 1."""
    if not (isinstance(l, int) and 1 <= l <= d.horizon + 1):
        raise DomainError(
            f"l = {l!r} outside the support 1..{d.horizon + 1}")
    if l <= d.horizon:
        return d.p * _pow_1m(d.p, l - 1)
    return _pow_1m(d.p, d.horizon)


def trl_cdf(l: int, d: TrlDistribution) -> float:
    """P(TRL <= l): 1 - (1-p)**l for l <= I, exactly 1 at l = I + 1."""
    if not (isinstance(l, int) and 1 <= l <= d.horizon + 1):
        raise DomainError(
            f"l = {l!r} outside the support 1..{d.horizon + 1}")
    if l <= d.horizon:
        return -math.expm1(l * math.log1p(-d.p)) if 0.0 < d.p < 1.0 else (
            0.0 if d.p == 0.0 else 1.0)
    return 1.0


def tarl(p: float, horizon: int) -> float:
    """Expected truncated run length, (1 - (1-p)**(I+1)) / p.

    The p = 0 limit is I + 1 (the run always completes unsignalled).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if not (isinstance(horizon, int) and horizon >= 1):
        raise ValueError(f"horizon must be an integer >= 1, got {horizon!r}")
    if p == 0.0:
        return float(horizon + 1)
    # -expm1((I+1)*log1p(-p)) = 1 - (1-p)**(I+1) without cancellation.
    if p == 1.0:
        return 1.0
    return -math.expm1((horizon + 1) * math.log1p(-p)) / p
