"""Monte-Carlo validation of the analytic run-length pipeline.

Inspection samples are true bivariate normals built from two independent
standard normals (X leans on Y's driver by rho), so the simulation shares no
code path with the cdf approximation it cross-checks.

Randomness comes from a counter-based Philox generator keyed by the caller's
seed.  Each replication owns a fixed, padded block of the counter range
(``stride`` uniforms, ``stride/4`` counter blocks), which gives every
replication its own deterministic substream: ``replication_rng`` jumps
straight to replication r, and ``estimate_tarl`` draws whole chunks of
replications in bulk without changing a single value.  Normal variates use
the inverse-cdf transform; the vectorised inverse is scipy's ``ndtri``,
which the test-suite audits against ``normal.std_normal_quantile``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .design import ChartConfig, ChartSide
from .performance import ShiftScenario

_CHUNK = 16384


@dataclass(frozen=True)
class SimulationSpec:
    """A reproducible finite-horizon simulation.

    ``mu_y_schedule`` optionally sets the denominator process mean per
    inspection (the numerator mean follows as z1 * mu_y); the default is a
    constant 1.0.  The monitored ratio is scale-free, so the schedule only
    exercises the sampler's handling of drifting sample units.
    """

    cfg: ChartConfig
    scenario: ShiftScenario
    replications: int
    seed: int
    mu_y_schedule: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if not (isinstance(self.replications, int) and self.replications >= 1):
            raise ValueError(
                f"replications must be an integer >= 1, got {self.replications!r}")
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2**64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.mu_y_schedule is not None:
            if len(self.mu_y_schedule) != self.cfg.horizon_inspections:
                raise ValueError(
                    f"mu_y_schedule has {len(self.mu_y_schedule)} entries, "
                    f"expected {self.cfg.horizon_inspections}")
            if any(not m > 0.0 for m in self.mu_y_schedule):
                raise ValueError("mu_y_schedule entries must be > 0")

    @property
    def stride(self) -> int:
        """Uniform draws reserved per replication (padded to whole counter blocks)."""
        raw = self.cfg.horizon_inspections * 2 * self.cfg.n
        return -(-raw // 4) * 4


@dataclass(frozen=True)
class TarlEstimate:
    """Empirical TARL with its Monte-Carlo standard error.

    ``signal_fraction`` is the share of replications that signalled before
    the run ended; ``nonpositive_ybar`` counts inspections whose sample mean
    of Y came out <= 0 (treated as immediate domain-flagged signals).
    """

    mean: float
    standard_error: float
    replications: int
    signal_fraction: float
    nonpositive_ybar: int = 0


def _philox(seed: int) -> np.random.Philox:
    return np.random.Philox(key=np.array([seed, 0], dtype=np.uint64))


def replication_rng(spec: SimulationSpec, replication: int) -> np.random.Generator:
    """Generator positioned at the start of one replication's substream."""
    if not 0 <= replication < spec.replications:
        raise ValueError(f"replication index {replication!r} out of range")
    bg = _philox(spec.seed)
    bg.advance(replication * (spec.stride // 4))
    return np.random.Generator(bg)


def sample_inspection(mu_x: float, mu_y: float, gamma_x: float, gamma_y: float,
                      rho: float, n: int, rng: np.random.Generator
                      ) -> tuple[np.ndarray, np.ndarray]:
    """Draw one inspection: n correlated (X, Y) pairs.

    Standard deviations are proportional to the means (sigma = gamma * mu).
    Consumes exactly 2n uniforms: the first n drive Y, the next n add X's
    independent component.  gamma = 0 is allowed (degenerate, test use).
    """
    u = ndtri(rng.random(2 * n))
    uy, vx = u[:n], u[n:]
    y = mu_y + gamma_y * mu_y * uy
    x = mu_x + gamma_x * mu_x * (rho * uy + math.sqrt(1.0 - rho * rho) * vx)
    return x, y


def _schedule(spec: SimulationSpec) -> np.ndarray:
    if spec.mu_y_schedule is None:
        return np.ones(spec.cfg.horizon_inspections)
    return np.asarray(spec.mu_y_schedule, dtype=float)


def simulate_trl(spec: SimulationSpec, rng: np.random.Generator) -> int:
    """Run one replication; return the first signalling inspection, or I + 1.

    A non-positive sample mean of Y counts as an immediate signal (the
    estimator tallies those separately).
    """
    cfg = spec.cfg
    z1 = spec.scenario.tau * cfg.z0
    mu_y = _schedule(spec)
    for i in range(cfg.horizon_inspections):
        x, y = sample_inspection(z1 * mu_y[i], mu_y[i], cfg.gamma_x,
                                 cfg.gamma_y, spec.scenario.rho1, cfg.n, rng)
        y_bar = float(y.mean())
        if y_bar <= 0.0:
            return i + 1
        z_hat = float(x.mean()) / y_bar
        if cfg.side is ChartSide.LOWER:
            if z_hat < cfg.lcl:
                return i + 1
        elif z_hat > cfg.ucl:
            return i + 1
    return cfg.horizon_inspections + 1


def estimate_tarl(spec: SimulationSpec) -> TarlEstimate:
    """Mean and standard error of ``simulate_trl`` over all replications.

    Chunk-vectorised, but draw-for-draw identical to looping
    ``simulate_trl(spec, replication_rng(spec, r))`` over r.
    """
    cfg = spec.cfg
    horizon, n = cfg.horizon_inspections, cfg.n
    z1 = spec.scenario.tau * cfg.z0
    rho1 = spec.scenario.rho1
    mu_y = _schedule(spec)[None, :, None]
    mu_x = z1 * mu_y
    rho_c = math.sqrt(1.0 - rho1 * rho1)

    gen = np.random.Generator(_philox(spec.seed))
    total = 0.0
    total_sq = 0.0
    signalled = 0
    bad_ybar = 0
    done = 0
    while done < spec.replications:
        c = min(_CHUNK, spec.replications - done)
        u = gen.random((c, spec.stride))
        z = ndtri(u[:, :horizon * 2 * n].reshape(c, horizon, 2 * n))
        uy = z[:, :, :n]
        vx = z[:, :, n:]
        y_bar = (mu_y + cfg.gamma_y * mu_y * uy).mean(axis=2)
        x_bar = (mu_x + cfg.gamma_x * mu_x * (rho1 * uy + rho_c * vx)).mean(axis=2)
        bad = y_bar <= 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            z_hat = x_bar / y_bar
        if cfg.side is ChartSide.LOWER:
            sig = z_hat < cfg.lcl
        else:
            sig = z_hat > cfg.ucl
        sig |= bad
        any_sig = sig.any(axis=1)
        trl = np.where(any_sig, sig.argmax(axis=1) + 1, horizon + 1)
        # only inspections a sequential run would have reached
        reached = np.arange(1, horizon + 1)[None, :] <= trl[:, None]
        bad_ybar += int((bad & reached).sum())
        total += float(trl.sum())
        total_sq += float((trl.astype(float) ** 2).sum())
        signalled += int(any_sig.sum())
        done += c

    r = spec.replications
    mean = total / r
    if r > 1:
        var = max(0.0, (total_sq - r * mean * mean) / (r - 1))
        se = math.sqrt(var / r)
    else:
        se = 0.0
    return TarlEstimate(mean=mean, standard_error=se, replications=r,
                        signal_fraction=signalled / r, nonpositive_ybar=bad_ybar)
