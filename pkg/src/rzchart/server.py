"""Local HTTP JSON API for chart design, TARL evaluation and monitoring.

Plain-stdlib threading HTTP server: requests are handled concurrently,
writes to a single chart id are serialised through a per-id lock, and the
design/TARL endpoints are stateless.  All payloads are UTF-8 JSON; the
infinite bound of a lower chart serialises as ``null`` so responses never
carry non-finite numbers.

Error contract: every non-2xx response is ``{"error": {"code", "message",
"detail"?}}`` with codes invalid_params (400), domain_error (422),
not_found (404), conflict (409) and io_error (500).
"""

from __future__ import annotations

import json
import math
import re
import threading
from collections import defaultdict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import __version__
from .design import ChartSide, design_chart
from .errors import DomainError
from .monitor import (ChartStore, CompletedRunError, chart_status,
                      create_chart, ingest_inspection, record_to_dict,
                      reset_chart, state_to_dict)
from .performance import ShiftScenario, tarl1

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8642

_CHART_RE = re.compile(r"^/api/charts/([0-9a-zA-Z_-]+)$")
_INSPECT_RE = re.compile(r"^/api/charts/([0-9a-zA-Z_-]+)/inspections$")
_RESET_RE = re.compile(r"^/api/charts/([0-9a-zA-Z_-]+)/reset$")

_MIME = {".html": "text/html; charset=utf-8",
         ".js": "text/javascript; charset=utf-8",
         ".mjs": "text/javascript; charset=utf-8",
         ".css": "text/css; charset=utf-8",
         ".json": "application/json; charset=utf-8",
         ".svg": "image/svg+xml",
         ".png": "image/png",
         ".ico": "image/x-icon"}

_DESIGN_FIELDS = ("side", "n", "gamma_x", "gamma_y", "z0", "rho0",
                  "horizon_inspections")

OPENAPI_DOC = {
    "openapi": "3.0.3",
    "info": {"title": "rzchart API",
             "version": __version__,
             "description": "Design, evaluate and monitor one-sided ratio "
                            "charts for short production runs."},
    "paths": {
        "/api/charts": {
            "post": {"summary": "Design a chart and create its monitoring state",
                     "requestBody": {"content": {"application/json": {"schema": {
                         "type": "object",
                         "required": list(_DESIGN_FIELDS),
                         "properties": {
                             "side": {"type": "string", "enum": ["lower", "upper"]},
                             "n": {"type": "integer", "minimum": 1},
                             "gamma_x": {"type": "number", "exclusiveMinimum": 0},
                             "gamma_y": {"type": "number", "exclusiveMinimum": 0},
                             "z0": {"type": "number", "exclusiveMinimum": 0},
                             "rho0": {"type": "number", "exclusiveMinimum": -1,
                                      "exclusiveMaximum": 1},
                             "horizon_inspections": {"type": "integer", "minimum": 2},
                             "tarl0_target": {"type": "number"},
                             "client_token": {"type": "string"},
                         }}}}},
                     "responses": {"201": {"description": "created chart state"},
                                   "200": {"description": "existing chart for client_token"}}},
            "get": {"summary": "List charts, most recently updated first"},
        },
        "/api/charts/{id}": {"get": {"summary": "Fetch one chart state"}},
        "/api/charts/{id}/inspections": {
            "post": {"summary": "Ingest one inspection sample",
                     "requestBody": {"content": {"application/json": {"schema": {
                         "type": "object",
                         "required": ["x_values", "y_values"],
                         "properties": {
                             "x_values": {"type": "array", "items": {"type": "number"}},
                             "y_values": {"type": "array", "items": {"type": "number"}},
                             "label": {"type": "string"},
                             "timestamp": {"type": "string", "format": "date-time"},
                         }}}}}}},
        "/api/charts/{id}/reset": {
            "post": {"summary": "Start a new run with the same configuration"}},
        "/api/tarl": {
            "get": {"summary": "Expected truncated run length over a shift grid",
                    "parameters": [
                        {"name": "n", "in": "query", "required": True},
                        {"name": "gamma_x", "in": "query", "required": True},
                        {"name": "gamma_y", "in": "query", "required": True},
                        {"name": "z0", "in": "query", "required": True},
                        {"name": "rho0", "in": "query", "required": True},
                        {"name": "I", "in": "query", "required": True},
                        {"name": "taus", "in": "query", "required": True,
                         "description": "comma-separated shift multipliers"},
                        {"name": "rho1", "in": "query",
                         "description": "defaults to rho0"},
                        {"name": "side", "in": "query",
                         "description": "lower|upper; default picks the side "
                                        "matching each tau"},
                    ]}},
    },
}


class _ApiFailure(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


def _bad_request(message, detail=None) -> _ApiFailure:
    return _ApiFailure(400, "invalid_params", message, detail)


def _require(body: dict, *names):
    missing = [n for n in names if n not in body]
    if missing:
        raise _bad_request(f"missing fields: {', '.join(missing)}",
                           {"missing": missing})


def _as_float(body: dict, name: str) -> float:
    try:
        value = float(body[name])
    except (TypeError, ValueError):
        raise _bad_request(f"{name} must be a number, got {body[name]!r}")
    if not math.isfinite(value):
        raise _bad_request(f"{name} must be finite")
    return value


def _as_int(body: dict, name: str) -> int:
    value = body[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise _bad_request(f"{name} must be an integer, got {value!r}")
    return value


class RzChartServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], store: ChartStore,
                 ui_dir: str | Path | None = None):
        super().__init__(address, ApiHandler)
        self.store = store
        self.ui_dir = Path(ui_dir).resolve() if ui_dir is not None else None
        self._locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()

    def chart_lock(self, chart_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks[chart_id]


class ApiHandler(BaseHTTPRequestHandler):
    server: RzChartServer
    protocol_version = "HTTP/1.1"

    # --- plumbing ---------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, status: int, payload) -> None:
        body = json.dumps(payload, allow_nan=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_failure(self, failure: _ApiFailure) -> None:
        error = {"code": failure.code, "message": failure.message}
        if failure.detail is not None:
            error["detail"] = failure.detail
        self._send_json(failure.status, {"error": error})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise _bad_request("request body required")
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise _bad_request(f"invalid JSON body: {exc}")
        if not isinstance(body, dict):
            raise _bad_request("JSON body must be an object")
        return body

    def _dispatch(self, handler) -> None:
        try:
            handler()
        except _ApiFailure as failure:
            self._send_failure(failure)
        except DomainError as exc:
            self._send_failure(_ApiFailure(422, "domain_error", str(exc)))
        except CompletedRunError as exc:
            self._send_failure(_ApiFailure(409, "conflict", str(exc)))
        except KeyError as exc:
            self._send_failure(_ApiFailure(404, "not_found",
                                           f"no such chart: {exc.args[0]}"))
        except ValueError as exc:
            self._send_failure(_ApiFailure(400, "invalid_params", str(exc)))
        except OSError as exc:
            self._send_failure(_ApiFailure(500, "io_error", str(exc)))

    # --- routes -----------------------------------------------------

    def do_GET(self):
        path, _, query = self.path.partition("?")
        if path == "/api/charts":
            return self._dispatch(self._list_charts)
        m = _CHART_RE.match(path)
        if m:
            return self._dispatch(lambda: self._get_chart(m.group(1)))
        if path == "/api/tarl":
            return self._dispatch(lambda: self._get_tarl(query))
        if path == "/api/openapi.json":
            return self._send_json(200, OPENAPI_DOC)
        if path.startswith("/api/"):
            return self._send_failure(_ApiFailure(404, "not_found",
                                                  f"unknown endpoint {path}"))
        return self._dispatch(lambda: self._serve_static(path))

    def do_POST(self):
        path = self.path.partition("?")[0]
        if path == "/api/charts":
            return self._dispatch(self._create_chart)
        m = _INSPECT_RE.match(path)
        if m:
            return self._dispatch(lambda: self._post_inspection(m.group(1)))
        m = _RESET_RE.match(path)
        if m:
            return self._dispatch(lambda: self._reset(m.group(1)))
        return self._send_failure(_ApiFailure(404, "not_found",
                                              f"unknown endpoint {path}"))

    # --- handlers ---------------------------------------------------

    def _create_chart(self):
        body = self._read_body()
        token = body.get("client_token")
        if token is not None:
            existing = self.server.store.find_by_token(str(token))
            if existing is not None:
                return self._send_json(200, state_to_dict(existing))
        _require(body, *_DESIGN_FIELDS)
        try:
            side = ChartSide(body["side"])
        except ValueError:
            raise _bad_request(f"side must be 'lower' or 'upper', got {body['side']!r}")
        cfg = design_chart(side, _as_int(body, "n"), _as_float(body, "gamma_x"),
                           _as_float(body, "gamma_y"), _as_float(body, "z0"),
                           _as_float(body, "rho0"),
                           _as_int(body, "horizon_inspections"),
                           _as_float(body, "tarl0_target")
                           if "tarl0_target" in body else None)
        state = create_chart(cfg, client_token=str(token) if token is not None else None)
        self.server.store.save(state)
        self._send_json(201, state_to_dict(state))

    def _list_charts(self):
        states = self.server.store.list_states()
        self._send_json(200, {"charts": [state_to_dict(s) for s in states]})

    def _get_chart(self, chart_id: str):
        state = self.server.store.load(chart_id)
        payload = state_to_dict(state)
        payload["summary"] = self._summary_dict(state)
        self._send_json(200, payload)

    def _summary_dict(self, state) -> dict:
        s = chart_status(state)
        return {"status": s.status.value, "signal_count": s.signal_count,
                "signal_indices": list(s.signal_indices),
                "inspections_done": s.inspections_done,
                "inspections_remaining": s.inspections_remaining,
                "last_z_hat": s.last_z_hat, "lcl": s.lcl,
                "ucl": None if math.isinf(s.ucl) else s.ucl}

    def _post_inspection(self, chart_id: str):
        body = self._read_body()
        _require(body, "x_values", "y_values")
        xs, ys = body["x_values"], body["y_values"]
        if not isinstance(xs, list) or not isinstance(ys, list):
            raise _bad_request("x_values and y_values must be arrays of numbers")
        label = body.get("label")
        timestamp = body.get("timestamp")
        with self.server.chart_lock(chart_id):
            state = self.server.store.load(chart_id)
            state, record = ingest_inspection(state, xs, ys,
                                              label=label, timestamp=timestamp)
            self.server.store.save(state)
        payload = record_to_dict(record)
        payload["chart_status"] = state.status.value
        self._send_json(200, payload)

    def _reset(self, chart_id: str):
        with self.server.chart_lock(chart_id):
            state = self.server.store.load(chart_id)
            fresh = reset_chart(state)
            self.server.store.save(fresh)
        self._send_json(201, state_to_dict(fresh))

    def _get_tarl(self, query: str):
        from urllib.parse import parse_qs
        params = {k: v[-1] for k, v in parse_qs(query, keep_blank_values=True).items()}
        for name in ("n", "gamma_x", "gamma_y", "z0", "rho0", "I", "taus"):
            if name not in params:
                raise _bad_request(f"missing query parameter: {name}")
        try:
            n = int(params["n"])
            horizon = int(params["I"])
            gx, gy = float(params["gamma_x"]), float(params["gamma_y"])
            z0, rho0 = float(params["z0"]), float(params["rho0"])
            rho1 = float(params["rho1"]) if "rho1" in params else rho0
            taus = [float(t) for t in params["taus"].split(",") if t.strip()]
        except ValueError as exc:
            raise _bad_request(f"malformed query parameter: {exc}")
        if not taus:
            raise _bad_request("taus must contain at least one shift value")
        fixed_side = None
        if "side" in params:
            try:
                fixed_side = ChartSide(params["side"])
            except ValueError:
                raise _bad_request(f"side must be 'lower' or 'upper', got {params['side']!r}")
        designs: dict[ChartSide, object] = {}

        def cfg_for(side: ChartSide):
            if side not in designs:
                designs[side] = design_chart(side, n, gx, gy, z0, rho0, horizon)
            return designs[side]

        results = []
        for tau in sorted(taus):
            if fixed_side is not None:
                sides = (fixed_side,)
            elif tau < 1.0:
                sides = (ChartSide.LOWER,)
            elif tau > 1.0:
                sides = (ChartSide.UPPER,)
            else:
                sides = (ChartSide.LOWER,)
            for side in sides:
                value = tarl1(cfg_for(side), ShiftScenario(tau, rho1))
                results.append({"tau": tau, "side": side.value, "tarl1": value})
        self._send_json(200, {"results": results})

    # --- static UI --------------------------------------------------

    def _serve_static(self, path: str):
        root = self.server.ui_dir
        if root is None:
            return self._send_json(200, {
                "service": "rzchart", "version": __version__,
                "api": "/api/openapi.json",
                "note": "no UI directory configured; start with --ui-dir to serve the frontend"})
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if root not in target.parents and target != root:
            raise _ApiFailure(404, "not_found", "path outside UI root")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            raise _ApiFailure(404, "not_found", f"no such file: {path}")
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type",
                         _MIME.get(target.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def make_server(host: str = DEFAULT_HOST, port: int = DEFAULT_PORT,
                store_dir: str | Path = "charts",
                ui_dir: str | Path | None = None) -> RzChartServer:
    """Build (but do not start) the API server; port 0 picks a free port."""
    return RzChartServer((host, port), ChartStore(store_dir), ui_dir=ui_dir)
