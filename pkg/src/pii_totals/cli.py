"""Command-line interface: ``pii-totals <command> [options]``.

Exit codes
----------
0  success
2  a check failed (identity residual or integral above tolerance)
3  internal numerical error
4  parameters on the Hastings-McLeod boundary or outside both AS families
5  integrator failure (blow-up, step budget, solver failure)
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import platform
import re
import sys
from importlib import metadata

import numpy as np

from . import identities
from .errors import DomainError, IntegratorError, PIIError
from .monodromy import ASParameters, Family, predicted_exp_total
from .pii_ode import PIIProblem, SolverConfig, integrate
from .totals import (
    period_averaged_total,
    raw_total,
    sweep,
    tail_fit_total,
)

EXIT_OK, EXIT_FAIL, EXIT_NUMERIC, EXIT_FAMILY, EXIT_INTEGRATOR = 0, 2, 3, 4, 5

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})$")
_IMAG_RE = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)i$")
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)i$")


def _imag_part(text: str) -> float:
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def parse_complex(token: str) -> complex:
    """Parse literals such as ``0.25``, ``0.3i``, ``-i`` or ``-0.1+0.2i``."""
    s = token.strip().replace(" ", "")
    if s.endswith("j"):
        s = s[:-1] + "i"
    if m := _REAL_RE.match(s):
        return complex(float(m["re"]), 0.0)
    if m := _IMAG_RE.match(s):
        return complex(0.0, _imag_part(m["im"]))
    if m := _FULL_RE.match(s):
        return complex(float(m["re"]), _imag_part(m["im"]))
    raise argparse.ArgumentTypeError(f"invalid complex literal {token!r}")


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex(t) for t in text.split(",") if t.strip()]


# --------------------------------------------------------------------------
# output


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def _json_value(v):
    if isinstance(v, (np.floating,)):
        v = float(v)
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _split(prefix: str, z) -> dict:
    if z is None:
        return {f"{prefix}_re": None, f"{prefix}_im": None}
    z = complex(z)
    return {f"{prefix}_re": z.real, f"{prefix}_im": z.imag}


def _provenance(args) -> dict:
    def ver(name):
        try:
            return metadata.version(name)
        except metadata.PackageNotFoundError:
            return "unknown"

    cfg = dataclasses.asdict(_solver_config(args)) if hasattr(args, "anchor_L") else {}
    return {
        "command": args.command,
        "argv": sys.argv[1:],
        "grid": getattr(args, "grid", None),
        "tolerance": getattr(args, "tol", None),
        "x_base": getattr(args, "xbase", None),
        "n_samples": getattr(args, "nsamples", None),
        "solver": cfg,
        "versions": {
            "python": platform.python_version(),
            "artifact": ver("artifact"),
            "numpy": ver("numpy"),
            "scipy": ver("scipy"),
            "mpmath": ver("mpmath"),
        },
    }


def emit(args, columns: list[str], rows: list[dict], exit_code: int) -> None:
    if args.format == "json":
        doc = {
            "command": args.command,
            "columns": columns,
            "rows": [{c: _json_value(r.get(c)) for c in columns} for r in rows],
            "exit_code": exit_code,
        }
        if args.seed_report:
            doc["provenance"] = _provenance(args)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(r.get(c)) for c in columns])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# commands


def _solver_config(args) -> SolverConfig:
    return SolverConfig(anchor_L=args.anchor_L)


def _params(args) -> ASParameters:
    p = ASParameters(args.alpha, args.k)
    if p.family not in (Family.RealAS, Family.ImaginaryAS):
        raise DomainError(f"(alpha, k) = ({args.alpha}, {args.k}) classifies as {p.family.value}")
    return p


IDENTITY_COLUMNS = ["name", "max_residual", "tolerance", "passed"]


def _identity_command(args, suite) -> int:
    reports = suite(args.grid, args.tol)
    rows = [dataclasses.asdict(r) for r in reports]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    emit(args, IDENTITY_COLUMNS, rows, code)
    return code


def cmd_verify_identities(args) -> int:
    return _identity_command(args, identities.full_suite)


def cmd_parametrix_check(args) -> int:
    return _identity_command(args, identities.parametrix_suite)


INTEGRAL_COLUMNS = [
    "alpha_re", "alpha_im", "k_re", "k_im", "family", "method", "X",
    "raw_re", "raw_im", "averaged_re", "averaged_im", "predicted_re", "predicted_im",
    "abs_error", "exp_abs_error", "passed",
]


def cmd_integral(args) -> int:
    p = _params(args)
    problem = PIIProblem(p)
    cfg = _solver_config(args)
    tol = 2e-3 if args.tol is None else args.tol
    if args.method == "averaged":
        res = period_averaged_total(problem, args.xbase, args.nsamples, cfg)
    elif args.method == "tailfit":
        res = tail_fit_total(problem, args.xbase, 2 * args.nsamples, cfg=cfg)
    else:
        res = raw_total(problem, args.xbase, cfg)
    exp_err = abs(np.exp(res.averaged) - predicted_exp_total(p.alpha, p.k))
    ok = res.abs_error is not None and res.abs_error <= tol
    row = {
        **_split("alpha", p.alpha), **_split("k", p.k),
        "family": p.family.value, "method": res.method.value, "X": res.X,
        **_split("raw", res.raw), **_split("averaged", res.averaged), **_split("predicted", res.predicted),
        "abs_error": res.abs_error, "exp_abs_error": exp_err, "passed": ok,
    }
    code = EXIT_OK if ok else EXIT_FAIL
    emit(args, INTEGRAL_COLUMNS, [row], code)
    return code


SOLVE_COLUMNS = ["x", "u_re", "u_im", "up_re", "up_im"]


def cmd_solve(args) -> int:
    p = _params(args)
    cfg = _solver_config(args)
    xmax = cfg.anchor_L if args.xmax is None else min(args.xmax, cfg.anchor_L)
    traj = integrate(PIIProblem(p), args.xmin, cfg)
    rows = []
    for x in np.linspace(args.xmin, xmax, args.npoints):
        u, up = traj.eval(float(x))
        rows.append({"x": float(x), **_split("u", u), **_split("up", up)})
    emit(args, SOLVE_COLUMNS, rows, EXIT_OK)
    return EXIT_OK


SWEEP_COLUMNS = [
    "alpha_re", "alpha_im", "k_re", "k_im", "predicted_re", "predicted_im",
    "averaged_re", "averaged_im", "abs_error", "X", "passed", "error",
]


def cmd_sweep(args) -> int:
    cfg = _solver_config(args)
    tol = 2e-3 if args.tol is None else args.tol
    alphas = args.alphas if args.alphas is not None else [0j, 0.25 + 0j, -0.25 + 0j]
    ks = args.ks if args.ks is not None else [-0.5 + 0j, 0.25 + 0j, 0.5 + 0j]
    cells = []
    for a in alphas:
        for k in ks:
            if args.k_relative:
                k = k * np.cos(np.pi * a)
            cells.append((a, complex(k)))
    report = sweep(cells, args.xbase, args.nsamples, cfg, jobs=args.jobs)
    rows = []
    for r in report.rows:
        ok = r.error is None and r.abs_error is not None and r.abs_error <= tol
        row = {
            **_split("alpha", r.alpha), **_split("k", r.k),
            **_split("predicted", r.predicted), **_split("averaged", r.averaged),
            "abs_error": r.abs_error, "X": r.X, "passed": ok, "error": r.error,
        }
        if args.timings:
            row["wall_time"] = r.wall_time
        rows.append(row)
    columns = SWEEP_COLUMNS + (["wall_time"] if args.timings else [])
    code = EXIT_OK if report.passed(tol) else EXIT_FAIL
    if any(r.error and r.error.startswith(("BlowupError", "BudgetError", "IntegratorError")) for r in report.rows):
        code = EXIT_INTEGRATOR
    emit(args, columns, rows, code)
    return code


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=parse_complex, default=0j, help="alpha, e.g. 0.25, 0.3i, -0.1+0.2i")
    common.add_argument("--k", type=parse_complex, default=0j, help="k, same literal forms as --alpha")
    common.add_argument("--xbase", type=float, default=150.0, help="base truncation X for averaging")
    common.add_argument("--nsamples", type=int, default=8, help="samples per oscillation period")
    common.add_argument("--anchor-L", dest="anchor_L", type=float, default=12.0, help="anchor point on the right")
    common.add_argument("--tol", type=float, default=None, help="pass/fail tolerance (default: 2e-3 for totals, per identity otherwise)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--grid", choices=("minimal", "default", "dense"), default="default")
    common.add_argument("--seed-report", action="store_true", help="embed a provenance block in JSON output")

    parser = argparse.ArgumentParser(prog="pii-totals", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-identities", parents=[common], help="run the full identity suite")
    p.set_defaults(func=cmd_verify_identities)
    p = sub.add_parser("parametrix-check", parents=[common], help="run the parametrix identities only")
    p.set_defaults(func=cmd_parametrix_check)

    p = sub.add_parser("solve", parents=[common], help="tabulate u and u' on a uniform grid")
    p.add_argument("--xmin", type=float, default=-10.0)
    p.add_argument("--xmax", type=float, default=None, help="upper end (default and cap: the anchor point)")
    p.add_argument("--npoints", type=int, default=201)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("integral", parents=[common], help="total integral against its closed form")
    p.add_argument("--method", choices=("averaged", "tailfit", "raw"), default="averaged")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("sweep", parents=[common], help="totals over an (alpha, k) grid")
    p.add_argument("--alphas", type=parse_complex_list, default=None, help="comma-separated alpha values")
    p.add_argument("--ks", type=parse_complex_list, default=None, help="comma-separated k values")
    p.add_argument("--k-relative", action="store_true", help="read k values as multiples of cos(pi alpha)")
    p.add_argument("--timings", action="store_true", help="add a wall_time column (output is then not reproducible)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAMILY
    except IntegratorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTEGRATOR
    except (PIIError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
