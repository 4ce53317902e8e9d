"""Approximate distribution of the ratio of two correlated normal variables.

``Z = X / Y`` for a bivariate normal ``(X, Y)`` is parameterised here by the
coefficients of variation ``gamma_x = sigma_x/mu_x`` and
``gamma_y = sigma_y/mu_y``, the standard-deviation ratio
``omega = sigma_x/sigma_y`` and the correlation ``rho``.  When the
coefficients of variation are small the cdf is well approximated by

    F(z) = Phi(A / B),   A = z/gamma_y - omega/gamma_x,
                         B = sqrt(omega^2 - 2*rho*omega*z + z^2),

with matching closed forms for the density and the inverse (the inverse is
the admissible root of a quadratic).  The same machinery serves the ratio of
two sample means: averaging n items divides both coefficients of variation
by sqrt(n) and fixes the standard-deviation ratio at ``z0*gamma_x/gamma_y``,
where ``z0`` is the ratio of the means.

Accuracy note: the approximation error grows with the coefficients of
variation.  Values above 0.2 (the largest level it has been validated at)
raise :class:`~rzchart.errors.ApproximationWarning`; values above 0.5 are
rejected.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ApproximationWarning, DomainError
from .normal import std_normal_cdf, std_normal_pdf, std_normal_quantile

# Validity thresholds for coefficients of variation.
CV_WARN_THRESHOLD = 0.2
CV_MAX = 0.5

# Guards from the numerical design notes.
_B2_MIN = 1e-300            # below this, B^2 is treated as vanished
_C1_DEGENERATE = 1e-14      # |C1| <= 1e-14 / gamma_y^2 -> linear fallback
_DISC_CLAMP = 1e-10         # negative-discriminant clamp, relative to C2^2


def _check_cv(value: float, name: str) -> None:
    if not value > 0.0:
        raise ValueError(f"{name} must be > 0, got {value!r}")
    if value > CV_MAX:
        raise ValueError(
            f"{name} = {value!r} exceeds {CV_MAX}; the normal-ratio "
            "approximation is unusable that far from small-CV conditions")
    if value > CV_WARN_THRESHOLD:
        warnings.warn(
            f"{name} = {value!r} is above {CV_WARN_THRESHOLD}; the "
            "normal-ratio approximation loses accuracy for large "
            "coefficients of variation", ApproximationWarning, stacklevel=3)


def _check_rho(value: float, name: str = "rho") -> None:
    if not -1.0 < value < 1.0:
        raise ValueError(f"{name} must lie in (-1, 1), got {value!r}")


@dataclass(frozen=True)
class RatioParams:
    """Parameters of the ratio distribution.

    Attributes:
        gamma_x: coefficient of variation of the numerator, > 0.
        gamma_y: coefficient of variation of the denominator, > 0.
        omega: standard-deviation ratio sigma_x / sigma_y, > 0.
        rho: correlation coefficient, in (-1, 1).
    """

    gamma_x: float
    gamma_y: float
    omega: float
    rho: float

    def __post_init__(self) -> None:
        _check_cv(self.gamma_x, "gamma_x")
        _check_cv(self.gamma_y, "gamma_y")
        if not self.omega > 0.0:
            raise ValueError(f"omega must be > 0, got {self.omega!r}")
        _check_rho(self.rho)

    @property
    def median(self) -> float:
        """The point where A = 0, i.e. the median of the approximation."""
        return self.omega * self.gamma_y / self.gamma_x


@dataclass(frozen=True)
class SampleRatioParams:
    """Parameters of the distribution of a ratio of two sample means.

    ``n`` items are averaged per inspection; ``z0`` is the in-control ratio
    of the two process means and ``rho0`` the in-control correlation.  The
    per-sample coefficients of variation are ``gamma_x/sqrt(n)`` and
    ``gamma_y/sqrt(n)`` and the implied standard-deviation ratio is
    ``z0*gamma_x/gamma_y``.
    """

    n: int
    gamma_x: float
    gamma_y: float
    z0: float
    rho0: float

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        if not self.z0 > 0.0:
            raise ValueError(f"z0 must be > 0, got {self.z0!r}")
        root_n = math.sqrt(self.n)
        _check_cv(self.gamma_x / root_n, "gamma_x/sqrt(n)")
        _check_cv(self.gamma_y / root_n, "gamma_y/sqrt(n)")
        _check_rho(self.rho0, "rho0")

    @property
    def omega0(self) -> float:
        """In-control standard-deviation ratio z0 * gamma_x / gamma_y."""
        return self.z0 * self.gamma_x / self.gamma_y

    def to_ratio_params(self) -> RatioParams:
        """The plain ratio-distribution parameters of the sample-mean ratio."""
        root_n = math.sqrt(self.n)
        return RatioParams(self.gamma_x / root_n, self.gamma_y / root_n,
                           self.omega0, self.rho0)


def _b_squared(z: float, omega: float, rho: float) -> float:
    b2 = omega * omega - 2.0 * rho * omega * z + z * z
    if not b2 >= _B2_MIN:
        raise DomainError(
            f"B^2 = {b2!r} vanished at z = {z!r}; the cdf approximation is "
            "undefined there")
    return b2


def ratio_cdf(z: float, params: RatioParams) -> float:
    """Approximate cdf of Z = X/Y at z.

    A is evaluated in the mean-centred form (z - median)/gamma_y so that the
    value at the median is exactly 0.5.
    """
    b2 = _b_squared(z, params.omega, params.rho)
    a = (z - params.median) / params.gamma_y
    return std_normal_cdf(a / math.sqrt(b2))


def ratio_pdf(z: float, params: RatioParams) -> float:
    """Approximate density of Z = X/Y at z."""
    b2 = _b_squared(z, params.omega, params.rho)
    b = math.sqrt(b2)
    a = (z - params.median) / params.gamma_y
    t = a / b
    return (1.0 / (b * params.gamma_y)
            - (z - params.rho * params.omega) * a / (b2 * b)) * std_normal_pdf(t)


def ratio_idf(p: float, params: RatioParams) -> float:
    """Approximate inverse cdf (quantile) of Z = X/Y.

    Solving Phi(A/B) = p squares away the sign of A, leaving the quadratic
    C1*z^2 + C2*z + C3 = 0 whose admissible root is the minus branch for
    p <= 0.5 and the plus branch for p >= 0.5.  The discriminant is
    evaluated in factored form,

        C2^2 - 4*C1*C3 = 4*omega^2*q^2*(D - q^2*(1 - rho^2)),
        D = (1/gamma_x - 1/gamma_y)^2 + 2*(1 - rho)/(gamma_x*gamma_y),

    which is exact at q = 0 and avoids the catastrophic cancellation the
    literal difference suffers near the median.  Roots are taken in the
    cancellation-free (Citardauq) arrangement.

    Raises:
        ValueError: if p is outside (0, 1).
        DomainError: if the quadratic degenerates completely or the
            discriminant is negative beyond the rounding tolerance.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"ratio_idf requires 0 < p < 1, got {p!r}")
    gx, gy, omega, rho = params.gamma_x, params.gamma_y, params.omega, params.rho
    q = std_normal_quantile(p)
    if q == 0.0:
        return params.median
    q2 = q * q

    c1 = 1.0 / (gy * gy) - q2
    c2 = 2.0 * omega * (rho * q2 - 1.0 / (gx * gy))
    c3 = omega * omega * (1.0 / (gx * gx) - q2)

    if abs(c1) <= _C1_DEGENERATE / (gy * gy):
        if c2 == 0.0:
            raise DomainError(
                "quadratic fully degenerate (C1 ~ 0 and C2 = 0); no "
                f"admissible quantile at p = {p!r}")
        return -c3 / c2

    d = (1.0 / gx - 1.0 / gy) ** 2 + 2.0 * (1.0 - rho) / (gx * gy)
    radicand = d - q2 * (1.0 - rho * rho)
    disc = 4.0 * omega * omega * q2 * radicand
    if disc < 0.0:
        if disc >= -_DISC_CLAMP * c2 * c2:
            disc = 0.0
        else:
            raise DomainError(
                f"negative discriminant ({disc!r}) at p = {p!r}; the "
                "quantile equation has no real root for these parameters")
    sqrt_disc = math.sqrt(disc)

    if c2 <= 0.0:
        t = -c2 + sqrt_disc
        root_minus = 2.0 * c3 / t
        root_plus = t / (2.0 * c1)
    else:
        t = -c2 - sqrt_disc
        root_minus = t / (2.0 * c1)
        root_plus = 2.0 * c3 / t
    return root_minus if p <= 0.5 else root_plus


def sample_ratio_cdf(z: float, sp: SampleRatioParams) -> float:
    """Cdf of the ratio of sample means at z.

    Identical to ``ratio_cdf(z, sp.to_ratio_params())`` after algebraic
    simplification; written in the form A = sqrt(n)*(z - z0)/gamma_y so the
    median identity F(z0) = 0.5 holds exactly in floating point.
    """
    omega0 = sp.omega0
    b2 = _b_squared(z, omega0, sp.rho0)
    a = math.sqrt(sp.n) * (z - sp.z0) / sp.gamma_y
    return std_normal_cdf(a / math.sqrt(b2))


def sample_ratio_idf(p: float, sp: SampleRatioParams) -> float:
    """Inverse cdf of the ratio of sample means.

    The in-control ratio factors out of the quantile equation: the quantile
    is ``z0`` times the quantile of the reduced distribution with
    standard-deviation ratio ``gamma_x/gamma_y``.
    """
    root_n = math.sqrt(sp.n)
    reduced = RatioParams(sp.gamma_x / root_n, sp.gamma_y / root_n,
                          sp.gamma_x / sp.gamma_y, sp.rho0)
    return sp.z0 * ratio_idf(p, reduced)
