"""Live monitoring of a short production run.

A :class:`ChartState` accumulates one :class:`InspectionRecord` per
inspection: the raw sample, the ratio of sample means and the signal flag
(strict comparison against the chart's one-sided limit).  The run completes
when the planned number of inspections is reached; a signal does not stop
ingestion (the process is typically allowed to continue while the cause is
investigated), it only moves the status to ``signaled_active``.

States serialise to a single JSON document (the never-triggering infinite
bound is encoded as ``null``) and :class:`ChartStore` persists one file per
chart id with atomic write-rename.
"""

from __future__ import annotations

import csv
import json
import math
import os
import tempfile
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from .design import ChartConfig, ChartSide

SAMPLES_CSV_HEADER = ("inspection", "label", "x", "y")


class CompletedRunError(RuntimeError):
    """An inspection was submitted to a chart whose run already completed."""


class ChartStatus(str, Enum):
    ACTIVE = "active"
    SIGNALED_ACTIVE = "signaled_active"
    COMPLETED = "completed"


@dataclass(frozen=True)
class InspectionRecord:
    index: int
    x_values: tuple[float, ...]
    y_values: tuple[float, ...]
    x_bar: float
    y_bar: float
    z_hat: float
    signal: bool
    timestamp: str | None = None
    label: str | None = None


@dataclass
class ChartState:
    id: str
    cfg: ChartConfig
    records: list[InspectionRecord] = field(default_factory=list)
    status: ChartStatus = ChartStatus.ACTIVE
    created_at: str = ""
    updated_at: str = ""
    parent_id: str | None = None
    client_token: str | None = None


@dataclass(frozen=True)
class ChartSummary:
    status: ChartStatus
    signal_count: int
    signal_indices: tuple[int, ...]
    inspections_done: int
    inspections_remaining: int
    last_z_hat: float | None
    lcl: float
    ucl: float


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def create_chart(cfg: ChartConfig, chart_id: str | None = None,
                 now: str | None = None,
                 client_token: str | None = None) -> ChartState:
    """Fresh monitoring state for a designed chart."""
    if not isinstance(cfg, ChartConfig):
        raise ValueError(f"cfg must be a ChartConfig, got {type(cfg)!r}")
    stamp = now if now is not None else _now_iso()
    return ChartState(id=chart_id if chart_id is not None else uuid.uuid4().hex,
                      cfg=cfg, records=[], status=ChartStatus.ACTIVE,
                      created_at=stamp, updated_at=stamp,
                      client_token=client_token)


def _is_signal(cfg: ChartConfig, z_hat: float) -> bool:
    if cfg.side is ChartSide.LOWER:
        return z_hat < cfg.lcl
    return z_hat > cfg.ucl


def ingest_inspection(state: ChartState, x_values, y_values,
                      label: str | None = None,
                      timestamp: str | None = None
                      ) -> tuple[ChartState, InspectionRecord]:
    """Append one inspection; returns the updated state and its record.

    Raises:
        CompletedRunError: the run already reached its planned length.
        ValueError: wrong sample size, non-finite values, or a non-positive
            sample mean of Y.
    """
    if state.status is ChartStatus.COMPLETED:
        raise CompletedRunError(
            f"chart {state.id} already completed its "
            f"{state.cfg.horizon_inspections} inspections")
    xs = tuple(float(v) for v in x_values)
    ys = tuple(float(v) for v in y_values)
    n = state.cfg.n
    if len(xs) != n or len(ys) != n:
        raise ValueError(
            f"expected {n} values per variable, got {len(xs)} x and {len(ys)} y")
    if not all(map(math.isfinite, xs + ys)):
        raise ValueError("sample values must be finite")
    x_bar = math.fsum(xs) / n
    y_bar = math.fsum(ys) / n
    if y_bar <= 0.0:
        raise ValueError(
            f"sample mean of y is {y_bar!r}; the monitored ratio requires a "
            "positive denominator")
    z_hat = x_bar / y_bar
    record = InspectionRecord(index=len(state.records) + 1, x_values=xs,
                              y_values=ys, x_bar=x_bar, y_bar=y_bar,
                              z_hat=z_hat, signal=_is_signal(state.cfg, z_hat),
                              timestamp=timestamp, label=label)
    state.records.append(record)
    if len(state.records) == state.cfg.horizon_inspections:
        state.status = ChartStatus.COMPLETED
    elif record.signal or state.status is ChartStatus.SIGNALED_ACTIVE:
        state.status = ChartStatus.SIGNALED_ACTIVE
    state.updated_at = timestamp if timestamp is not None else _now_iso()
    return state, record


def chart_status(state: ChartState) -> ChartSummary:
    """Read-only summary of a monitoring run."""
    signal_indices = tuple(r.index for r in state.records if r.signal)
    done = len(state.records)
    return ChartSummary(status=state.status, signal_count=len(signal_indices),
                        signal_indices=signal_indices, inspections_done=done,
                        inspections_remaining=state.cfg.horizon_inspections - done,
                        last_z_hat=state.records[-1].z_hat if state.records else None,
                        lcl=state.cfg.lcl, ucl=state.cfg.ucl)


def reset_chart(state: ChartState, chart_id: str | None = None,
                now: str | None = None) -> ChartState:
    """Start a new run with the same configuration; links to the parent."""
    fresh = create_chart(state.cfg, chart_id=chart_id, now=now)
    fresh.parent_id = state.id
    return fresh


# --- serialisation -----------------------------------------------------

def config_to_dict(cfg: ChartConfig) -> dict:
    return {
        "side": cfg.side.value,
        "n": cfg.n,
        "horizon_inspections": cfg.horizon_inspections,
        "z0": cfg.z0,
        "rho0": cfg.rho0,
        "gamma_x": cfg.gamma_x,
        "gamma_y": cfg.gamma_y,
        "alpha0": cfg.alpha0,
        "lcl": cfg.lcl,
        "ucl": None if math.isinf(cfg.ucl) else cfg.ucl,
        "tarl0_target": cfg.tarl0_target,
    }


def config_from_dict(d: dict) -> ChartConfig:
    ucl = d["ucl"]
    return ChartConfig(side=ChartSide(d["side"]), n=int(d["n"]),
                       horizon_inspections=int(d["horizon_inspections"]),
                       z0=float(d["z0"]), rho0=float(d["rho0"]),
                       gamma_x=float(d["gamma_x"]), gamma_y=float(d["gamma_y"]),
                       alpha0=float(d["alpha0"]), lcl=float(d["lcl"]),
                       ucl=math.inf if ucl is None else float(ucl),
                       tarl0_target=float(d["tarl0_target"]))


def record_to_dict(r: InspectionRecord) -> dict:
    return {
        "index": r.index,
        "x_values": list(r.x_values),
        "y_values": list(r.y_values),
        "x_bar": r.x_bar,
        "y_bar": r.y_bar,
        "z_hat": r.z_hat,
        "signal": r.signal,
        "timestamp": r.timestamp,
        "label": r.label,
    }


def record_from_dict(d: dict) -> InspectionRecord:
    return InspectionRecord(index=int(d["index"]),
                            x_values=tuple(float(v) for v in d["x_values"]),
                            y_values=tuple(float(v) for v in d["y_values"]),
                            x_bar=float(d["x_bar"]), y_bar=float(d["y_bar"]),
                            z_hat=float(d["z_hat"]), signal=bool(d["signal"]),
                            timestamp=d.get("timestamp"), label=d.get("label"))


def state_to_dict(state: ChartState) -> dict:
    return {
        "id": state.id,
        "cfg": config_to_dict(state.cfg),
        "records": [record_to_dict(r) for r in state.records],
        "status": state.status.value,
        "created_at": state.created_at,
        "updated_at": state.updated_at,
        "parent_id": state.parent_id,
        "client_token": state.client_token,
    }


def state_from_dict(d: dict) -> ChartState:
    return ChartState(id=d["id"], cfg=config_from_dict(d["cfg"]),
                      records=[record_from_dict(r) for r in d["records"]],
                      status=ChartStatus(d["status"]),
                      created_at=d["created_at"], updated_at=d["updated_at"],
                      parent_id=d.get("parent_id"),
                      client_token=d.get("client_token"))


class ChartStore:
    """One JSON document per chart id, written atomically (write + rename).

    Writes to a given id must be serialised by the caller (the HTTP layer
    holds a per-id lock); readers always see a committed snapshot.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._io_lock = threading.Lock()

    def _path(self, chart_id: str) -> Path:
        if not chart_id or any(c in chart_id for c in "/\\.") :
            raise ValueError(f"invalid chart id {chart_id!r}")
        return self.root / f"{chart_id}.json"

    def save(self, state: ChartState) -> None:
        payload = json.dumps(state_to_dict(state), indent=2, allow_nan=False)
        with self._io_lock:
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write(payload)
                os.replace(tmp, self._path(state.id))
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise

    def load(self, chart_id: str) -> ChartState:
        path = self._path(chart_id)
        if not path.exists():
            raise KeyError(chart_id)
        with open(path, encoding="utf-8") as fh:
            return state_from_dict(json.load(fh))

    def exists(self, chart_id: str) -> bool:
        return self._path(chart_id).exists()

    def list_states(self) -> list[ChartState]:
        states = [self.load(p.stem) for p in sorted(self.root.glob("*.json"))]
        states.sort(key=lambda s: (s.updated_at, s.id), reverse=True)
        return states

    def find_by_token(self, token: str) -> ChartState | None:
        for state in self.list_states():
            if state.client_token == token:
                return state
        return None


def read_samples_csv(source) -> list[tuple[int, str | None, list[float], list[float]]]:
    """Parse the long-format sample CSV: header inspection,label,x,y, one row
    per item, n consecutive rows per inspection.

    Returns (inspection, label, xs, ys) groups in file order; inspection
    numbers must be contiguous from 1.
    """
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return read_samples_csv(fh)
    reader = csv.reader(source)
    header = tuple(next(reader, ()))
    if header != SAMPLES_CSV_HEADER:
        raise ValueError(
            f"expected header {','.join(SAMPLES_CSV_HEADER)!r}, got {header!r}")
    groups: list[tuple[int, str | None, list[float], list[float]]] = []
    for lineno, rec in enumerate(reader, start=2):
        if not rec:
            continue
        if len(rec) != 4:
            raise ValueError(f"line {lineno}: expected 4 fields, got {len(rec)}")
        idx = int(rec[0])
        label = rec[1] or None
        x, y = float(rec[2]), float(rec[3])
        if groups and groups[-1][0] == idx:
            if groups[-1][1] != label:
                raise ValueError(
                    f"line {lineno}: label changed within inspection {idx}")
            groups[-1][2].append(x)
            groups[-1][3].append(y)
        else:
            if idx != len(groups) + 1:
                raise ValueError(
                    f"line {lineno}: inspection {idx} out of order "
                    f"(expected {len(groups) + 1})")
            groups.append((idx, label, [x], [y]))
    return groups
