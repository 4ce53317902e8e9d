"""Regeneration of the reference design tables.

``gen_limits_table`` produces the (LCL, UCL) pairs over a parameter grid;
``gen_tarl_table`` the out-of-control expected truncated run lengths.  Rows
carry the values at their published rendering precision (4 decimals for
limits, 1 for TARL) so that serialisation round-trips exactly; full-precision
numbers are available from ``design_chart``/``tarl1`` directly.

The default grid reproduces the published study: z0 = 1, coefficients of
variation in {0.01, 0.2} (all four pairings), correlations in
{0, +/-0.4, +/-0.8}, sample sizes {1, 5, 7, 10, 15}, horizons {10, 30, 50}
and shifts {0.9, 0.95, 0.98, 0.99, 1, 1.01, 1.02, 1.05, 1.1}.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .design import ChartSide, design_chart
from .performance import ShiftScenario, tarl1

DEFAULT_GAMMA_PAIRS: tuple[tuple[float, float], ...] = (
    (0.01, 0.01), (0.2, 0.2), (0.01, 0.2), (0.2, 0.01))
DEFAULT_RHOS: tuple[float, ...] = (-0.8, -0.4, 0.0, 0.4, 0.8)
DEFAULT_NS: tuple[int, ...] = (1, 5, 7, 10, 15)
DEFAULT_HORIZONS: tuple[int, ...] = (10, 30, 50)
DEFAULT_TAUS: tuple[float, ...] = (0.9, 0.95, 0.98, 0.99, 1.0, 1.01, 1.02, 1.05, 1.1)
# (rho0, rho1) pairs used by the rho1 != rho0 study tables.
DEFAULT_RHO_SHIFT_PAIRS: tuple[tuple[float, float], ...] = (
    (-0.4, -0.2), (-0.4, -0.8), (0.4, 0.2), (0.4, 0.8))

LIMITS_HEADER = ("gamma_x", "gamma_y", "rho0", "n", "I", "lcl", "ucl")
TARL_HEADER = ("gamma_x", "gamma_y", "rho0", "rho1", "n", "I", "tau", "side", "tarl1")


class RenderFormat(str, Enum):
    CSV = "csv"
    ALIGNED_TEXT = "text"


class LimitRow(NamedTuple):
    gamma_x: float
    gamma_y: float
    rho0: float
    n: int
    horizon: int
    lcl: float
    ucl: float


class TarlRow(NamedTuple):
    gamma_x: float
    gamma_y: float
    rho0: float
    rho1: float
    n: int
    horizon: int
    tau: float
    side: str
    tarl1: float


@dataclass(frozen=True)
class GridSpec:
    """Parameter grid for table regeneration.

    ``rho_pairs`` of (rho0, rho1) switches the TARL grid to the
    shifted-correlation study; ``None`` keeps rho1 = rho0 over ``rhos``.
    """

    gamma_pairs: tuple[tuple[float, float], ...] = DEFAULT_GAMMA_PAIRS
    rhos: tuple[float, ...] = DEFAULT_RHOS
    ns: tuple[int, ...] = DEFAULT_NS
    horizons: tuple[int, ...] = DEFAULT_HORIZONS
    taus: tuple[float, ...] = DEFAULT_TAUS
    rho_pairs: tuple[tuple[float, float], ...] | None = None
    z0: float = 1.0


def gen_limits_table(grid: GridSpec) -> list[LimitRow]:
    """One row per grid cell, limits rounded to 4 decimals."""
    rows = []
    for horizon in grid.horizons:
        for gx, gy in grid.gamma_pairs:
            for rho in grid.rhos:
                for n in grid.ns:
                    lower = design_chart(ChartSide.LOWER, n, gx, gy, grid.z0,
                                         rho, horizon)
                    upper = design_chart(ChartSide.UPPER, n, gx, gy, grid.z0,
                                         rho, horizon)
                    rows.append(LimitRow(gx, gy, rho, n, horizon,
                                         round(lower.lcl, 4), round(upper.ucl, 4)))
    return rows


def _tarl_sides(tau: float) -> tuple[ChartSide, ...]:
    if tau < 1.0:
        return (ChartSide.LOWER,)
    if tau > 1.0:
        return (ChartSide.UPPER,)
    return (ChartSide.LOWER, ChartSide.UPPER)


def gen_tarl_table(grid: GridSpec) -> list[TarlRow]:
    """Expected truncated run lengths, rounded to 1 decimal.

    The lower chart covers tau < 1, the upper chart tau > 1; tau = 1 rows
    report both sides (they coincide only when rho1 = rho0).
    """
    rho_pairs = (grid.rho_pairs if grid.rho_pairs is not None
                 else tuple((r, r) for r in grid.rhos))
    rows = []
    designs: dict = {}
    for horizon in grid.horizons:
        for gx, gy in grid.gamma_pairs:
            for rho0, rho1 in rho_pairs:
                for tau in grid.taus:
                    for n in grid.ns:
                        for side in _tarl_sides(tau):
                            key = (side, n, gx, gy, rho0, horizon)
                            cfg = designs.get(key)
                            if cfg is None:
                                cfg = design_chart(side, n, gx, gy, grid.z0,
                                                   rho0, horizon)
                                designs[key] = cfg
                            value = tarl1(cfg, ShiftScenario(tau, rho1))
                            rows.append(TarlRow(gx, gy, rho0, rho1, n, horizon,
                                                tau, side.value, round(value, 1)))
    return rows


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _row_cells(row) -> list[str]:
    if isinstance(row, LimitRow):
        return [_format_cell(row.gamma_x), _format_cell(row.gamma_y),
                _format_cell(row.rho0), str(row.n), str(row.horizon),
                f"{row.lcl:.4f}", f"{row.ucl:.4f}"]
    if isinstance(row, TarlRow):
        return [_format_cell(row.gamma_x), _format_cell(row.gamma_y),
                _format_cell(row.rho0), _format_cell(row.rho1), str(row.n),
                str(row.horizon), _format_cell(row.tau), row.side,
                f"{row.tarl1:.1f}"]
    raise TypeError(f"unsupported row type {type(row)!r}")


def _header_for(rows) -> tuple[str, ...]:
    return LIMITS_HEADER if isinstance(rows[0], LimitRow) else TARL_HEADER


def render(rows, fmt: RenderFormat = RenderFormat.CSV) -> bytes:
    """Serialise table rows to UTF-8 bytes (CSV with LF endings, or
    fixed-width aligned text)."""
    if not rows:
        raise ValueError("cannot render an empty table")
    fmt = RenderFormat(fmt)
    header = _header_for(rows)
    cells = [_row_cells(r) for r in rows]
    if fmt is RenderFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue().encode("utf-8")
    widths = [max(len(h), *(len(row[i]) for row in cells))
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths))
                 for row in cells)
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_csv(data: bytes) -> list[LimitRow] | list[TarlRow]:
    """Inverse of ``render(..., CSV)``: bytes back to typed rows."""
    text = data.decode("utf-8")
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    rows: list = []
    if header == LIMITS_HEADER:
        for rec in reader:
            rows.append(LimitRow(float(rec[0]), float(rec[1]), float(rec[2]),
                                 int(rec[3]), int(rec[4]), float(rec[5]),
                                 float(rec[6])))
    elif header == TARL_HEADER:
        for rec in reader:
            rows.append(TarlRow(float(rec[0]), float(rec[1]), float(rec[2]),
                                float(rec[3]), int(rec[4]), int(rec[5]),
                                float(rec[6]), rec[7], float(rec[8])))
    else:
        raise ValueError(f"unrecognised table header {header!r}")
    return rows
