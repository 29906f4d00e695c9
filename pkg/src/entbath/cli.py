"""Command-line interface: sweep grids, survival times, negativity traces, checks."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .dynamics import BathParams, DriftConvention
from .entanglement import negativity_trace
from .selfcheck import run_checks
from .states import SqueezedThermalSpec, squeezed_thermal
from .survival import survival_time_numeric, survival_time_symmetric
from .sweep import PRESET_NAMES, SweepConfig, run_sweep, write_csv, write_metadata

__all__ = ["main", "run"]

_CONVENTIONS = {conv.value: conv for conv in DriftConvention}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entbath",
        description="Dissipative dynamics and entanglement survival of two bosonic "
        "modes in a thermal bath.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate a parameter grid and emit CSV")
    p_sweep.add_argument("--preset", choices=PRESET_NAMES, help="bundled grid preset")
    p_sweep.add_argument("--config", help="JSON sweep configuration file")
    p_sweep.add_argument("--out", help="output CSV path ('-' for stdout)")
    p_sweep.add_argument("--steps", type=int, help="points per axis (default 101)")
    p_sweep.add_argument("--convention", choices=sorted(_CONVENTIONS), default=None)
    p_sweep.add_argument("--workers", type=int, default=1, help="parallel row workers")
    p_sweep.add_argument("--meta", help="also write resolved metadata JSON here")

    p_surv = sub.add_parser("survival", help="survival time of entanglement as JSON")
    p_surv.add_argument("--n1", type=float, required=True)
    p_surv.add_argument("--n2", type=float, required=True)
    p_surv.add_argument("--r", type=float, required=True)
    p_surv.add_argument("--cth", type=float, required=True)
    p_surv.add_argument("--omega", type=float, default=1.0)
    p_surv.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p_surv.add_argument("--m", type=float, default=1.0)
    p_surv.add_argument("--numeric", action="store_true", help="force the numeric finder")
    p_surv.add_argument("--convention", choices=sorted(_CONVENTIONS), default="omega2")
    p_surv.add_argument("--tmax", type=float, default=None)
    p_surv.add_argument("--scan-dt", type=float, default=None)
    p_surv.add_argument("--tol", type=float, default=1e-10)

    p_trace = sub.add_parser("trace", help="negativity trace E_N(t) as CSV")
    p_trace.add_argument("--r", type=float, required=True)
    p_trace.add_argument("--n", type=float, required=True)
    p_trace.add_argument("--cth", type=float, required=True)
    p_trace.add_argument("--tmax", type=float, required=True)
    p_trace.add_argument("--dt", type=float, required=True)
    p_trace.add_argument("--omega", type=float, default=1.0)
    p_trace.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p_trace.add_argument("--m", type=float, default=1.0)
    p_trace.add_argument("--convention", choices=sorted(_CONVENTIONS), default="omega2")

    sub.add_parser("check", help="run built-in numerical cross-checks")
    return parser


def _cmd_sweep(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            data = dict(json.load(fh))
        # flags override file values
        if args.preset:
            data["preset"] = args.preset
        if args.steps is not None:
            data["steps"] = args.steps
            for key in ("axis1", "axis2"):
                if key in data:
                    data[key] = {**data[key], "steps": args.steps}
        if args.convention:
            data["drift_convention"] = args.convention
        if args.out:
            data["output_path"] = args.out
        cfg = SweepConfig.from_json_dict(data)
    else:
        if not args.preset or args.preset == "custom":
            print("error: custom sweeps need --config; otherwise pass --preset", file=sys.stderr)
            return 2
        cfg = SweepConfig.from_preset(
            args.preset,
            steps=args.steps,
            drift_convention=_CONVENTIONS[args.convention or "omega2"],
            output_path=args.out or "-",
        )
    grid = run_sweep(cfg, workers=args.workers)
    write_csv(grid, cfg.output_path)
    if args.meta:
        write_metadata(grid, args.meta)
    return 0


def _closed_form_applies(args) -> bool:
    return args.n1 == args.n2 and args.omega == 1.0 and args.lam == 1.0 and args.m == 1.0


def _cmd_survival(args) -> int:
    if args.cth < 1:
        print("error: --cth must be >= 1", file=sys.stderr)
        return 2
    if args.numeric or not _closed_form_applies(args):
        p = BathParams.symmetric(c_th=args.cth, omega=args.omega, lam=args.lam, m=args.m)
        sigma0 = squeezed_thermal(SqueezedThermalSpec(args.n1, args.n2, args.r))
        result = survival_time_numeric(
            sigma0,
            p,
            conv=_CONVENTIONS[args.convention],
            t_max=args.tmax,
            scan_dt=args.scan_dt,
            tol=args.tol,
        )
        method = "numeric"
    else:
        result = survival_time_symmetric(args.n1, args.r, args.cth)
        method = "closed_form"
    payload = result.to_json_dict()
    payload["method"] = method
    payload["params"] = {
        "n1": args.n1,
        "n2": args.n2,
        "r": args.r,
        "c_th": args.cth,
        "omega": args.omega,
        "lambda": args.lam,
        "m": args.m,
        "convention": args.convention,
    }
    print(json.dumps(payload))
    return 0


def _cmd_trace(args) -> int:
    if args.tmax <= 0 or args.dt <= 0:
        print("error: --tmax and --dt must be positive", file=sys.stderr)
        return 2
    p = BathParams.symmetric(c_th=args.cth, omega=args.omega, lam=args.lam, m=args.m)
    times = args.dt * np.arange(int(np.floor(args.tmax / args.dt + 1e-12)) + 1)
    trace = negativity_trace(
        SqueezedThermalSpec(args.n, args.n, args.r),
        p,
        times,
        conv=_CONVENTIONS[args.convention],
    )
    out = ["t,E_N"]
    out += [f"{t:.17g},{v:.17g}" for t, v in zip(trace.times, trace.values)]
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "survival":
            return _cmd_survival(args)
        if args.command == "trace":
            return _cmd_trace(args)
        if args.command == "check":
            return 0 if run_checks() else 1
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def run() -> None:
    sys.exit(main())
