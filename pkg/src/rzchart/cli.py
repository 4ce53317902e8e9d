"""Command-line interface.

Subcommands: design, tarl, tables, monitor, simulate, serve.  Output goes to
stdout or --out and is byte-identical across identical invocations
(simulation included, via --seed).  Exit codes: 0 success, 1 validation
error, 2 domain/numerical error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .design import ChartSide, design_chart
from .errors import DomainError
from .monitor import (config_from_dict, config_to_dict, create_chart,
                      chart_status, ingest_inspection, read_samples_csv)
from .performance import ShiftScenario, tarl1
from .simulate import SimulationSpec, estimate_tarl
from .tables import (DEFAULT_HORIZONS, DEFAULT_RHO_SHIFT_PAIRS, GridSpec,
                     RenderFormat, gen_limits_table, gen_tarl_table, render)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    """argparse with exit code 1 for usage errors (default is 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_floats(text: str) -> list[float]:
    values = [float(t) for t in text.split(",") if t.strip()]
    if not values:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    return values


def _add_process_args(p: argparse.ArgumentParser, with_side: bool = True):
    if with_side:
        p.add_argument("--side", required=True, choices=["lower", "upper"])
    p.add_argument("--n", required=True, type=int, help="sample size per inspection")
    p.add_argument("--gamma-x", required=True, type=float,
                   help="coefficient of variation of X")
    p.add_argument("--gamma-y", required=True, type=float,
                   help="coefficient of variation of Y")
    p.add_argument("--z0", required=True, type=float, help="in-control ratio")
    p.add_argument("--rho0", required=True, type=float, help="in-control correlation")
    p.add_argument("--I", required=True, type=int, dest="horizon",
                   help="planned inspections in the run")
    p.add_argument("--tarl0-target", type=float, default=None,
                   help="in-control TARL target (default: I)")


def build_parser() -> _Parser:
    parser = _Parser(prog="rzchart",
                     description="One-sided ratio charts for short production runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", parents=[], help="solve a chart's control limit")
    _add_process_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("tarl", help="expected truncated run length over shifts")
    _add_process_args(p, with_side=False)
    p.add_argument("--side", choices=["lower", "upper"], default=None,
                   help="fix the chart side (default: pick per shift)")
    p.add_argument("--taus", required=True, type=_csv_floats,
                   help="comma-separated shift multipliers")
    p.add_argument("--rho1", type=float, default=None,
                   help="out-of-control correlation (default: rho0)")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("tables", help="regenerate the reference tables")
    p.add_argument("--which", required=True, choices=["limits", "tarl"])
    p.add_argument("--I", dest="horizons", type=str, default=None,
                   help="comma-separated horizons (default: 10,30,50)")
    p.add_argument("--rho1-rule", choices=["equal", "shifted"], default="equal",
                   help="tarl grid: rho1 = rho0, or the shifted-correlation pairs")
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("monitor", help="replay inspection samples against a chart")
    p.add_argument("--chart", required=True, type=Path,
                   help="chart configuration JSON (from: design --format json)")
    p.add_argument("--samples", required=True, type=Path,
                   help="long-format CSV: inspection,label,x,y")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("simulate", help="Monte-Carlo check of the analytic TARL")
    _add_process_args(p)
    p.add_argument("--tau", required=True, type=float)
    p.add_argument("--rho1", type=float, default=None)
    p.add_argument("--replications", type=int, default=100_000)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("serve", help="run the local HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--store-dir", type=Path, default=Path("charts"))
    p.add_argument("--ui-dir", type=Path, default=None,
                   help="static frontend directory to serve at /")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_bytes(text.encode("utf-8"))


def _design_cfg(args):
    return design_chart(ChartSide(args.side), args.n, args.gamma_x,
                        args.gamma_y, args.z0, args.rho0, args.horizon,
                        args.tarl0_target)


def _cmd_design(args) -> int:
    cfg = _design_cfg(args)
    if args.format == "json":
        _emit(json.dumps(config_to_dict(cfg), indent=2) + "\n", args.out)
    else:
        lines = [f"side={cfg.side.value}", f"n={cfg.n}",
                 f"gamma_x={cfg.gamma_x!r}", f"gamma_y={cfg.gamma_y!r}",
                 f"z0={cfg.z0!r}", f"rho0={cfg.rho0!r}",
                 f"I={cfg.horizon_inspections}",
                 f"tarl0_target={cfg.tarl0_target!r}",
                 f"alpha0={cfg.alpha0!r}",
                 f"lcl={format(cfg.lcl, '.4f')}",
                 f"ucl={'inf' if cfg.side is ChartSide.LOWER else format(cfg.ucl, '.4f')}"]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_tarl(args) -> int:
    rho1 = args.rho1 if args.rho1 is not None else args.rho0
    designs = {}

    def cfg_for(side: ChartSide):
        if side not in designs:
            designs[side] = design_chart(side, args.n, args.gamma_x, args.gamma_y,
                                         args.z0, args.rho0, args.horizon,
                                         args.tarl0_target)
        return designs[side]

    lines = ["tau,side,tarl1"]
    for tau in sorted(args.taus):
        if args.side is not None:
            sides = (ChartSide(args.side),)
        elif tau < 1.0:
            sides = (ChartSide.LOWER,)
        elif tau > 1.0:
            sides = (ChartSide.UPPER,)
        else:
            sides = (ChartSide.LOWER,)
        for side in sides:
            value = tarl1(cfg_for(side), ShiftScenario(tau, rho1))
            lines.append(f"{tau!r},{side.value},{value:.4f}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_tables(args) -> int:
    horizons = (tuple(int(h) for h in args.horizons.split(","))
                if args.horizons else DEFAULT_HORIZONS)
    grid = GridSpec(horizons=horizons,
                    rho_pairs=DEFAULT_RHO_SHIFT_PAIRS
                    if args.which == "tarl" and args.rho1_rule == "shifted" else None)
    rows = gen_limits_table(grid) if args.which == "limits" else gen_tarl_table(grid)
    data = render(rows, RenderFormat(args.format))
    if args.out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        args.out.write_bytes(data)
    return EXIT_OK


def _cmd_monitor(args) -> int:
    with open(args.chart, encoding="utf-8") as fh:
        cfg = config_from_dict(json.load(fh))
    groups = read_samples_csv(args.samples)
    state = create_chart(cfg, chart_id="replay", now="")
    lines = ["inspection,label,z_hat,signal"]
    for _, label, xs, ys, in groups:
        state, record = ingest_inspection(state, xs, ys, label=label, timestamp="")
        lines.append(f"{record.index},{label or ''},{record.z_hat:.3f},"
                     f"{'yes' if record.signal else 'no'}")
    summary = chart_status(state)
    limit = (f"lcl={cfg.lcl:.5f}" if cfg.side is ChartSide.LOWER
             else f"ucl={cfg.ucl:.5f}")
    lines.append(f"limit: {limit}")
    lines.append(f"status: {summary.status.value}")
    lines.append(f"signals: {','.join(str(i) for i in summary.signal_indices) or 'none'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    cfg = _design_cfg(args)
    scenario = ShiftScenario(args.tau, args.rho1 if args.rho1 is not None else args.rho0)
    spec = SimulationSpec(cfg=cfg, scenario=scenario,
                          replications=args.replications, seed=args.seed)
    analytic = tarl1(cfg, scenario)
    est = estimate_tarl(spec)
    dev = abs(est.mean - analytic)
    verdict = "PASS" if dev <= 3.0 * est.standard_error else "FAIL"
    lines = [f"analytic_tarl1={analytic!r}",
             f"empirical_mean={est.mean!r}",
             f"standard_error={est.standard_error!r}",
             f"replications={est.replications}",
             f"signal_fraction={est.signal_fraction!r}",
             f"nonpositive_ybar={est.nonpositive_ybar}",
             f"criterion_3se={verdict}"]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .server import make_server
    server = make_server(args.host, args.port, args.store_dir, args.ui_dir)
    host, port = server.server_address[:2]
    print(f"rzchart API listening on http://{host}:{port}/ "
          f"(store: {args.store_dir})", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


_COMMANDS = {
    "design": _cmd_design,
    "tarl": _cmd_tarl,
    "tables": _cmd_tables,
    "monitor": _cmd_monitor,
    "simulate": _cmd_simulate,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"rzchart: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, OSError, KeyError) as exc:
        print(f"rzchart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
