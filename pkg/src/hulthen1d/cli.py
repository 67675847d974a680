"""Command-line front end.

Thin wrapper over the library: parses flags (optionally seeded from a flat
JSON config file), runs the requested computation and writes CSV or JSON.
Exit codes: 0 success, 2 invalid parameters or flags, 3 numerical failure
(non-convergence, non-finite output, verify tolerance breach).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import (HulthenError, InvalidEnergy, InvalidGrid, InvalidParameter)
from .potential import Mode, PotentialParams
from . import runs

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

_PARAM_KEYS = ("m", "a", "b", "q", "qt", "v0", "mode")
_PARAM_DEFAULTS = {"m": 1.0, "a": 0.5, "b": 0.5, "q": 0.5, "qt": 0.5,
                   "v0": 1.0, "mode": "barrier"}


def fmt(x: float) -> str:
    """Round-trip-exact decimal form of a 64-bit float."""
    return format(float(x), ".17g")


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return "\n"
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(row[key]) for key in header))
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=float, default=None, help="particle mass")
    parser.add_argument("--a", type=float, default=None, help="left range parameter")
    parser.add_argument("--b", type=float, default=None, help="right range parameter")
    parser.add_argument("--q", type=float, default=None, help="left screening in (0, 0.95]")
    parser.add_argument("--qt", type=float, default=None, help="right screening in (0, 0.95]")
    parser.add_argument("--v0", type=float, default=None, help="potential strength >= 0")
    parser.add_argument("--mode", choices=["barrier", "well"], default=None)
    parser.add_argument("--config", default=None,
                        help="flat JSON file with the same keys; flags override it")
    parser.add_argument("--output", default=None, help="write output to this file")
    parser.add_argument("--format", choices=["csv", "json"], default=None,
                        dest="out_format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hulthen1d",
        description="Transmission, reflection and bound states of the "
                    "asymmetric Hulthen potential (atomic units, hbar = 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("profile", help="sample V(x) on a uniform grid (CSV x,V)")
    _add_param_flags(sp)
    sp.add_argument("--xmin", type=float, default=-10.0)
    sp.add_argument("--xmax", type=float, default=10.0)
    sp.add_argument("--n", type=int, default=201)

    sp = sub.add_parser("scatter", help="R and T at a single energy")
    _add_param_flags(sp)
    sp.add_argument("--energy", type=float, required=True)

    sp = sub.add_parser("scan-e", help="R,T sweep over energy (CSV E,R,T,unitarity_defect)")
    _add_param_flags(sp)
    sp.add_argument("--emin", type=float, default=0.1)
    sp.add_argument("--emax", type=float, default=10.0)
    sp.add_argument("--n", type=int, default=200)

    sp = sub.add_parser("scan-v0", help="T sweep over strength at fixed energy (CSV V0,T)")
    _add_param_flags(sp)
    sp.add_argument("--energy", type=float, required=True)
    sp.add_argument("--v0min", type=float, default=0.0)
    sp.add_argument("--v0max", type=float, default=5.0)
    sp.add_argument("--n", type=int, default=100)

    sp = sub.add_parser("bound", help="bound-state spectrum of the well (JSON summary)")
    _add_param_flags(sp)
    sp.add_argument("--scan-points", type=int, default=2000)
    sp.add_argument("--root-tol", type=float, default=1e-9)
    sp.add_argument("--trace", default=None, metavar="PATH",
                    help="also write the determinant trace CSV E,D to PATH")

    sp = sub.add_parser("verify", help="compare closed forms against the ODE oracle")
    _add_param_flags(sp)
    sp.add_argument("--emin", type=float, default=0.1)
    sp.add_argument("--emax", type=float, default=10.0)
    sp.add_argument("--n", type=int, default=20)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InvalidParameter("config file must hold a flat JSON object")
    unknown = set(data) - set(_PARAM_KEYS)
    if unknown:
        raise InvalidParameter(f"unknown config keys: {sorted(unknown)}")
    return data


def params_from_args(args: argparse.Namespace) -> PotentialParams:
    config = _load_config(getattr(args, "config", None))
    merged = {}
    for key in _PARAM_KEYS:
        flag = getattr(args, key, None)
        merged[key] = flag if flag is not None else config.get(key, _PARAM_DEFAULTS[key])
    try:
        mode = Mode(str(merged["mode"]))
    except ValueError:
        raise InvalidParameter(f"mode must be 'barrier' or 'well', got {merged['mode']!r}")
    return PotentialParams(m=float(merged["m"]), a=float(merged["a"]),
                           b=float(merged["b"]), q=float(merged["q"]),
                           q_tilde=float(merged["qt"]), v0=float(merged["v0"]),
                           mode=mode)


def _emit(args: argparse.Namespace, p: PotentialParams, command: str,
          rows: list[dict], default_format: str, tolerances: dict | None = None,
          status: str = "ok") -> None:
    out_format = args.out_format or default_format
    if out_format == "csv":
        _write(rows_to_csv(rows), args.output)
    else:
        doc = runs.envelope(p, command, {"rows": rows}, tolerances, status)
        _write(json.dumps(doc, indent=2) + "\n", args.output)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own message
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK

    try:
        if args.command == "serve":
            import uvicorn

            from .service import app
            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK

        p = params_from_args(args)

        if args.command == "profile":
            rows = runs.profile_rows(p, args.xmin, args.xmax, args.n)
            _emit(args, p, "profile", rows, "csv")
        elif args.command == "scatter":
            row = runs.scatter_row(p, args.energy)
            _emit(args, p, "scatter", [row], "json")
        elif args.command == "scan-e":
            rows = runs.energy_scan(p, args.emin, args.emax, args.n)
            _emit(args, p, "scan-e", rows, "csv")
        elif args.command == "scan-v0":
            rows = runs.strength_scan(p, args.energy, args.v0min, args.v0max, args.n)
            _emit(args, p, "scan-v0", rows, "csv")
        elif args.command == "bound":
            summary, trace = runs.bound_run(p, args.scan_points, args.root_tol,
                                            with_trace=args.trace is not None)
            if args.trace is not None:
                _write(rows_to_csv(trace), args.trace)
            if (args.out_format or "json") == "csv":
                rows = [{"E": e, "residual": r}
                        for e, r in zip(summary["results"]["eigenvalues"],
                                        summary["results"]["residuals"])]
                _write(rows_to_csv(rows), args.output)
            else:
                _write(json.dumps(summary, indent=2) + "\n", args.output)
        elif args.command == "verify":
            report, ok = runs.verify_run(p, args.emin, args.emax, args.n)
            _write(json.dumps(report, indent=2) + "\n", args.output)
            if not ok:
                return EXIT_NUMERICAL
        else:  # pragma: no cover - argparse enforces the choices
            return EXIT_INVALID
    except (InvalidParameter, InvalidGrid, InvalidEnergy, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HulthenError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
