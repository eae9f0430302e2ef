"""Command-line front end.

    gentrig eval sin --p 2 --q 2 --x 0.5
    gentrig const --p 4 --q 4
    gentrig verify wilker --format json --out wilker.json
    gentrig table sinh --p 1.2 --q 3 --n 100

Exit status: 0 success, 1 a verification report failed, 2 bad usage or an
evaluation error (domain, convergence, overflow).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import ghf, gtf, quad
from .errors import ConvergenceError, DomainError, OverflowSignal
from .identities import SUITES, GridSpec, sweep
from .params import dual_index, half_period, validate

FUNCS = {
    "sin": gtf.sin_pq,
    "cos": gtf.cos_pq,
    "tam": gtf.tam_pq,
    "tan": gtf.tan_pq,
    "asin": gtf.asin_pq,
    "sinh": ghf.sinh_pq,
    "cosh": ghf.cosh_pq,
    "tamh": ghf.tamh_pq,
    "tanh": ghf.tanh_pq,
    "asinh": ghf.asinh_pq,
}
HYPERBOLIC = {"sinh", "cosh", "tamh", "tanh"}

VERIFY_FIELDS = ("suite", "p", "q", "r", "x", "value", "margin", "err_est", "passed")
EVAL_FIELDS = ("function", "p", "q", "r", "x", "value", "err_est")
CONST_FIELDS = ("p", "q", "r", "half_period")
TABLE_EXTENT = 6.0


class UsageError(Exception):
    pass


def _num(v):
    # shortest repr that round-trips; non-finite values as plain words
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    return "" if v is None else str(v)


def _json_val(v):
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, (float, np.floating)) and not math.isfinite(v):
        return _num(v)
    if isinstance(v, np.floating):
        return float(v)
    return v


def render(rows, fields, fmt) -> str:
    if fmt == "json":
        data = [{k: _json_val(r.get(k)) for k in fields} for r in rows]
        return json.dumps(data, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_num(r.get(k)) for k in fields])
    return buf.getvalue()


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _floats(text):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of numbers, got {text!r}") from None
    return tuple(vals)


# -- commands ----------------------------------------------------------------


def cmd_eval(args):
    pair = validate(args.p, args.q)
    res = FUNCS[args.func](pair, args.x)
    row = {
        "function": args.func,
        "p": pair.p,
        "q": pair.q,
        "r": dual_index(pair),
        "x": args.x,
        "value": res.value,
        "err_est": res.err_est,
    }
    _emit(render([row], EVAL_FIELDS, args.format), args.out)
    return 0


def cmd_const(args):
    pair = validate(args.p, args.q)
    row = {"p": pair.p, "q": pair.q, "r": dual_index(pair), "half_period": half_period(pair).value}
    _emit(render([row], CONST_FIELDS, args.format), args.out)
    return 0


def _grid(args):
    kw = {}
    if args.p is not None:
        kw["p_values"] = _floats(args.p)
        kw["p_offsets"] = ()
    if args.p_offset is not None:
        kw["p_offsets"] = _floats(args.p_offset)
    if args.q is not None:
        kw["q_values"] = _floats(args.q)
    if args.nx is not None:
        kw["n_x"] = args.nx
    if args.delta is not None:
        kw["domain_clip"] = args.delta
    if args.extent is not None:
        kw["extent"] = args.extent
    return GridSpec(**kw)


def report_rows(report):
    label = f"{report.suite}:{report.kind}"
    base = {"suite": label, "p": report.pair.p, "q": report.pair.q, "r": dual_index(report.pair)}
    rows = []
    for s in report.samples:
        x, m, e = s
        slack = report.slack(s)
        ok = slack > 0 if report.strict else slack >= 0
        rows.append(dict(base, x=x, value=m, margin=slack, err_est=e, passed=ok))
    for x, _msg in report.errors:
        rows.append(dict(base, x=x, value=math.nan, margin=math.nan, err_est=math.nan, passed=False))
    return rows


def cmd_verify(args):
    grid = _grid(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.suite not in ("multiangle", "doubleangle", "ode") and not grid.pairs():
        raise UsageError("the grid has no admissible (p, q) pairs")
    rows = []
    n_rep = n_fail = 0
    lines = []
    for suite in suites:
        reports = sweep(suite, grid)
        failed = [r for r in reports if not r.passed]
        n_rep += len(reports)
        n_fail += len(failed)
        for r in reports:
            rows.extend(report_rows(r))
        slack = min((r.slack(s) for r in reports for s in r.samples), default=math.nan)
        status = "PASS" if not failed else "FAIL"
        lines.append(f"{status} {suite}: {len(reports)} reports, {len(failed)} failed, min slack {slack:.3g}")
        for r in failed:
            for x, msg in r.errors[:3]:
                lines.append(f"  {suite}:{r.kind} (p={r.pair.p!r}, q={r.pair.q!r}) x={x!r}: {msg}")
    out = args.out or f"verify-{args.suite}.{args.format}"
    _emit(render(rows, VERIFY_FIELDS, args.format), out)
    for line in lines:
        print(line)
    print(f"{n_rep} reports, {n_fail} failed; written to {out}")
    return 0 if n_fail == 0 else 1


def cmd_table(args):
    pair = validate(args.p, args.q)
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    if args.func in ("asin", "asinh"):
        end = 1.0 if args.func == "asin" else args.extent
    elif args.func in HYPERBOLIC:
        end = quad._dual_half(pair)
    else:
        end = quad._half(pair)
    if not math.isfinite(end):
        end = args.extent
    fn = FUNCS[args.func]
    r = dual_index(pair)
    rows = []
    for x in np.linspace(0.0, 0.98 * end, args.n):
        x = float(x)
        res = fn(pair, x)
        rows.append({"function": args.func, "p": pair.p, "q": pair.q, "r": r, "x": x, "value": res.value, "err_est": res.err_est})
    _emit(render(rows, EVAL_FIELDS, args.format), args.out)
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gentrig", description="Generalized trigonometric and hyperbolic functions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output file (default: standard output)")

    sp = sub.add_parser("eval", help="evaluate one function at one point")
    sp.add_argument("func", choices=sorted(FUNCS))
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--x", type=float, required=True)
    fmt(sp)
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("const", help="half-period and dual index of a pair")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    fmt(sp)
    sp.set_defaults(run=cmd_const)

    sp = sub.add_parser("verify", help="run verification suites over a grid")
    sp.add_argument("suite", choices=SUITES + ("all",))
    sp.add_argument("--p", default=None, help="comma-separated p values (replaces the default list)")
    sp.add_argument("--p-offset", default=None, help="comma-separated offsets o giving p = q/(q+1) + o")
    sp.add_argument("--q", default=None, help="comma-separated q values")
    sp.add_argument("--nx", type=int, default=None, help="points per pair (default 33)")
    sp.add_argument("--delta", type=float, default=None, help="fraction of the domain clipped at each end")
    sp.add_argument("--extent", type=float, default=None, help="sweep length on unbounded domains")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None, help="report file (default verify-<suite>.<format>)")
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("table", help="equally spaced samples for plotting")
    sp.add_argument("func", choices=sorted(FUNCS))
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--extent", type=float, default=TABLE_EXTENT, help="range used when the domain is unbounded")
    fmt(sp)
    sp.set_defaults(run=cmd_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.run(args)
    except (DomainError, UsageError) as exc:
        print(f"gentrig: error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, OverflowSignal) as exc:
        print(f"gentrig: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
