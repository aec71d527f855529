"""Command-line front end: radius tables, verification reports, sharpness sweeps.

Data goes to stdout as JSON or CSV with every float at 17 significant digits;
diagnostics go to stderr. Exit codes: 0 pass, 2 usage, 3 numeric failure,
4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import radii, verify
from .errors import BracketFailure, DomainError, HypothesisViolation, NoConvergence
from .zoo import k_from_K

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_FAILED = 0, 2, 3, 4

# closed-form radii accepted by `radii --eq` in addition to the solver equations
CLOSED_FORMS = ("r_u", "convex", "derivative")
PARAMETERLESS = ("rstar", "rustar", "derivative")

# theorem -> (sharp radius, comparison radius) as functions of k
SWEEP_PAIRS = {
    "th1_2_1": (radii.r_u_closed_form, lambda k: radii.radius("tha1", k)),
    "th1_2_2": (lambda k: 1 / (3 + 2 * k), lambda k: radii.convex_radius(_K_from_k(k))),
    "th1_3_1": (lambda k: radii.radius("liu16", k), lambda k: radii.radius("tha3", k)),
    "th1_3_2": (lambda k: radii.radius("liu17", k), lambda k: radii.radius("tha4", k)),
}


class UsageError(Exception):
    pass


def _K_from_k(k):
    return math.inf if k == 1 else (1 + k) / (1 - k)


# -- serialization ------------------------------------------------------------------


def format_float(x):
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    text = format(x, ".17g")
    return text if any(c in text for c in ".en") else text + ".0"


def to_json(obj):
    """JSON text with floats at 17 significant digits (non-finite floats become null)."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_csv(rows, columns):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow(
            "" if row[c] is None else format_float(row[c]) if isinstance(row[c], float) else row[c]
            for c in columns
        )
    return buf.getvalue()


def _emit(fmt, command, params, key, payload, columns, out):
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": command, "params": params, key: payload}
        out.write(to_json(doc) + "\n")
    else:
        out.write(to_csv(payload if key == "rows" else payload["grid"], columns))


# -- argument helpers -----------------------------------------------------------------


def _parse_range(text, parts):
    try:
        vals = [float(v) for v in text.split(":")]
    except ValueError:
        raise UsageError(f"could not parse range {text!r}") from None
    if len(vals) != parts:
        raise UsageError(f"range {text!r} needs {parts} ':'-separated fields")
    return vals


def _linspace(lo, hi, steps):
    if steps < 1:
        raise UsageError("steps must be >= 1")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def default_seed():
    env = os.environ.get("BOHR_SEED")
    if env is None:
        return verify.DEFAULT_SEED
    try:
        return int(env, 0)
    except ValueError:
        raise UsageError(f"BOHR_SEED={env!r} is not an integer") from None


def _resolve_k(args):
    if args.K is not None:
        if args.k is not None:
            raise UsageError("give either --k or --K, not both")
        if not args.K >= 1:
            raise UsageError("--K must be >= 1")
        return k_from_K(args.K)
    return 0.0 if args.k is None else args.k


# -- radii ------------------------------------------------------------------------------


def _radius_record(eq, value):
    """One record for ``eq`` at parameter ``value`` (k, K or lambda depending on eq)."""
    if eq == "r_u":
        r = radii.r_u_closed_form(value)
        res = abs(4 * (1 + value) * r - (1 - r) ** 2)
    elif eq == "convex":
        r = radii.convex_radius(value)
        res = 0.0 if math.isinf(value) else abs(r * (5 * value + 1) - (value + 1))
    elif eq == "derivative":
        r = radii.derivative_bohr_radius()
        res = abs(3 * (1 - r) ** 2 - 2)
    elif eq in ("phi_lambda", "r0"):
        if value == 1:
            # at lambda = 1 the quadratic reduces to the r_* cubic
            res_ = radii.solve(radii.RadiusEquation("rstar"))
        else:
            radii.solve_r0_of_lambda(value)
            res_ = radii.solve(radii.RadiusEquation("phi_lambda", lambda_dist=value))
        r, res = res_.value, res_.residual
    else:
        res_ = radii.solve(radii.RadiusEquation(eq, k=0.0 if value is None else value))
        r, res = res_.value, res_.residual
    return {"equation": eq, "parameter": value, "radius": r, "residual": float(res)}


def cmd_radii(args, out):
    eq = args.eq.lower()
    known = {e.value for e in radii.EquationName} | set(CLOSED_FORMS) | {"r0"}
    if eq not in known:
        raise UsageError(f"unknown equation {args.eq!r}; choose from {sorted(known)}")
    if eq == "convex":
        if args.k is not None:
            base = _K_from_k(args.k)
        else:
            base = 1.0 if args.K is None else args.K
        pname = "K"
    elif eq in ("phi_lambda", "r0"):
        if args.lam is None and args.sweep is None:
            raise UsageError(f"{eq} needs --lambda or --sweep")
        base, pname = args.lam, "lambda"
    elif eq in PARAMETERLESS:
        if any(v is not None for v in (args.k, args.K, args.lam, args.sweep)):
            raise UsageError(f"{eq} takes no parameter")
        base, pname = None, None
    else:
        base, pname = _resolve_k(args), "k"
    values = [base]
    if args.sweep is not None:
        lo, hi, steps = _parse_range(args.sweep, 3)
        if steps != int(steps):
            raise UsageError("sweep steps must be an integer")
        values = _linspace(lo, hi, int(steps))
    rows = [_radius_record(eq, v) for v in values]
    params = {"eq": eq, "parameter_name": pname, "values": values}
    _emit(args.format, "radii", params, "rows", rows, ["equation", "parameter", "radius", "residual"], out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------------------


def cmd_verify(args, out, err):
    k = _resolve_k(args)
    seed = default_seed() if args.seed is None else args.seed
    params = verify.TheoremParams(k=k, lambda_dist=args.lam, use_r0=args.use_r0)
    report = verify.verify_theorem(args.theorem, params, args.grid, args.trials, seed, args.order)
    cli_params = {
        "theorem": args.theorem,
        "k": k,
        "lambda": args.lam,
        "use_r0": args.use_r0,
        "trials": args.trials,
        "seed": seed,
        "grid": args.grid,
        "order": args.order,
    }
    columns = ["r", "lhs", "rhs", "margin", "tail", "case"]
    _emit(args.format, "verify", cli_params, "report", report.to_dict(), columns, out)
    if not report.passed:
        err.write(f"verification failed at r={format_float(report.witness)} ({report.witness_case})\n")
        return EXIT_FAILED
    if not report.sharpness_ok:
        s = report.sharpness
        err.write(f"sharpness probe failed: violation={s.violation!r}, crossing={s.crossing!r}\n")
        return EXIT_FAILED
    return EXIT_OK


# -- sweep ----------------------------------------------------------------------------------


def cmd_sweep(args, out):
    theorem = args.theorem.lower()
    if theorem not in SWEEP_PAIRS:
        raise UsageError(f"sweep supports {sorted(SWEEP_PAIRS)}, got {args.theorem!r}")
    lo, hi = _parse_range(args.k_range, 2)
    if not 0 <= lo <= hi <= 1:
        raise UsageError("k-range must satisfy 0 <= lo <= hi <= 1")
    sharp, comparison = SWEEP_PAIRS[theorem]
    rows = []
    for k in _linspace(lo, hi, args.steps):
        rows.append({"k": k, "sharp_radius": sharp(k), "theoremA_radius": comparison(k)})
    params = {"theorem": theorem, "k_range": [lo, hi], "steps": args.steps}
    _emit(args.format, "sweep", params, "rows", rows, ["k", "sharp_radius", "theoremA_radius"], out)
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="bohrlab", description="Bohr radii and numerical verification of Bohr-type inequalities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    r = sub.add_parser("radii", help="solve a radius equation or evaluate a closed form")
    r.add_argument("--eq", required=True, help="equation name, e.g. liu16, rstar, r_u, convex, phi_lambda")
    r.add_argument("--k", type=float)
    r.add_argument("--K", type=float)
    r.add_argument("--lambda", dest="lam", type=float)
    r.add_argument("--sweep", help="lo:hi:steps over the equation's parameter")
    fmt(r)

    v = sub.add_parser("verify", help="verify a theorem on sampled and extremal inputs")
    v.add_argument("--theorem", required=True, type=str.lower, choices=[t.value for t in verify.Theorem])
    v.add_argument("--k", type=float)
    v.add_argument("--K", type=float)
    v.add_argument("--lambda", dest="lam", type=float)
    v.add_argument("--use-r0", action="store_true", help="th4_1: verify up to r_0(lambda)")
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=lambda s: int(s, 0))
    v.add_argument("--grid", type=int, default=verify.DEFAULT_GRID)
    v.add_argument("--order", type=int, default=verify.DEFAULT_ORDER)
    fmt(v)

    s = sub.add_parser("sweep", help="sharp radius against the comparison radius over k")
    s.add_argument("--theorem", required=True)
    s.add_argument("--k-range", required=True, help="lo:hi")
    s.add_argument("--steps", type=int, default=11)
    fmt(s)
    return p


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "radii":
            return cmd_radii(args, out)
        if args.command == "verify":
            if args.trials < 1 or args.grid < 2 or args.order < 1:
                raise UsageError("trials >= 1, grid >= 2 and order >= 1 are required")
            return cmd_verify(args, out, err)
        return cmd_sweep(args, out)
    except (UsageError, HypothesisViolation, DomainError) as exc:
        err.write(f"bohrlab: error: {exc}\n")
        return EXIT_USAGE
    except (BracketFailure, NoConvergence) as exc:
        err.write(f"bohrlab: numeric failure: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
