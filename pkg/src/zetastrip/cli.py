"""Command-line front end.

    zetastrip --table B2_thm32 --format csv
    zetastrip --sigma 0.5 --t 100 --eta 1e4 --method region1 --format json
    zetastrip --sigma 0.5 --t 100 --eta 25.0663 --method compare

Exit status: 0 all cells within threshold (or point evaluated), 1 some
table cell outside its threshold, 2 usage or regime error.
"""

import argparse
import json
import sys

import mpmath

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, DEFAULT_QUAD_TOL
from .errors import RegimeViolation, TooCloseToLatticePoint, ZetaStripError
from .exact import zeta_exact
from .expansions import (
    zeta_confluent,
    zeta_large_eta_mirror,
    zeta_region1,
    zeta_small_eta,
    zeta_sqrt_mirror,
    zeta_sqrt_region,
)
from .hp import StripPoint
from .oracle import zeta_reference_result, zeta_truncated_dirichlet
from .tables import TABLE_IDS, TABLES, fmt6, run_table, table_passes, to_csv, to_json, to_markdown

mp = mpmath.mp

METHODS = (
    "reference",
    "exact",
    "truncated_dirichlet",
    "region1",
    "confluent",
    "small_eta",
    "large_eta_mirror",
    "sqrt_region",
    "sqrt_mirror",
)
_NEEDS_ETA = {"exact", "truncated_dirichlet", "region1", "small_eta", "large_eta_mirror", "sqrt_region", "sqrt_mirror"}


def eval_point(s, method, params=None):
    """Dispatch to one evaluator; ``params`` may hold eta, N, tol, delta, prec,
    closed_form, epsilon, digits, strict."""
    p = dict(params or {})
    prec = p.get("prec") or DEFAULT_PRECISION_BITS
    delta = p.get("delta", DEFAULT_DELTA)
    strict = p.get("strict", True)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method in _NEEDS_ETA and p.get("eta") is None:
        raise ValueError(f"method {method} needs eta")
    eta = p.get("eta")
    common = dict(strict=strict, prec=prec, delta=delta)
    opt = {k: p[k] for k in ("epsilon",) if p.get(k) is not None}
    if method == "reference":
        return zeta_reference_result(s, p.get("digits", 30), prec)
    if method == "exact":
        return zeta_exact(s, eta, p.get("tol", DEFAULT_QUAD_TOL), prec=prec, delta=delta)
    if method == "truncated_dirichlet":
        return zeta_truncated_dirichlet(s, eta, prec)
    if method == "region1":
        return zeta_region1(s, eta, p.get("N", 3), closed_form=p.get("closed_form", False), **opt, **common)
    if method == "confluent":
        return zeta_confluent(s, p.get("N", 3), closed_form=p.get("closed_form", False), **common)
    if method == "small_eta":
        return zeta_small_eta(s, eta, p.get("N", 3), closed_form=p.get("closed_form", False), **opt, **common)
    if method == "large_eta_mirror":
        return zeta_large_eta_mirror(s, eta, p.get("N", 2), **opt, **common)
    if method == "sqrt_region":
        return zeta_sqrt_region(s, eta, p.get("N", 3), closed_form=p.get("closed_form", False), **opt, **common)
    return zeta_sqrt_mirror(s, eta, p.get("N", 3), **opt, **common)


def _digits(x, n=30):
    return mpmath.nstr(x, n, min_fixed=-5, max_fixed=5)


def _result_dict(r):
    v = r.v
    return {
        "method": r.method,
        "precision_bits": r.precision,
        "value_re": _digits(mpmath.re(v)),
        "value_im": _digits(mpmath.im(v)),
        "predicted_error": fmt6(r.predicted_error_mag),
        "terms": {k: {"re": _digits(mpmath.re(x.v)), "im": _digits(mpmath.im(x.v))} for k, x in r.terms.items()},
        "warnings": list(r.warnings),
        "meta": {k: _meta_value(x) for k, x in r.meta.items()},
    }


def _meta_value(x):
    if hasattr(x, "v"):
        x = x.v
    if isinstance(x, (mpmath.mpf, mpmath.mpc, complex, float)):
        z = complex(x)
        return fmt6(z.real) if z.imag == 0 else [fmt6(z.real), fmt6(z.imag)]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, tuple):
        return [_meta_value(y) for y in x]
    return str(x)


def _point_markdown(d):
    lines = [
        f"method: {d['method']} ({d['precision_bits']} bits)",
        f"value: {d['value_re']} + ({d['value_im']})i",
        f"predicted error: {d['predicted_error']}",
        "",
        "| term | re | im |",
        "|---|---|---|",
    ]
    for k, v in d["terms"].items():
        lines.append(f"| {k} | {v['re']} | {v['im']} |")
    for w in d["warnings"]:
        lines.append(f"warning: {w}")
    if "difference_from_reference" in d:
        lines.append(f"difference from reference: {d['difference_from_reference']}")
    return "\n".join(lines) + "\n"


def _compare(s, params):
    """Every method whose regime holds at (s, eta), with its distance to the reference."""
    ref = eval_point(s, "reference", params)
    out = []
    for m in METHODS:
        if m == "reference" or (m in _NEEDS_ETA and params.get("eta") is None):
            continue
        try:
            r = eval_point(s, m, params)
        except (RegimeViolation, TooCloseToLatticePoint, ValueError):
            continue
        d = _result_dict(r)
        d["difference_from_reference"] = fmt6(abs(r.v - ref.v))
        out.append(d)
    return _result_dict(ref), out


def build_parser():
    ap = argparse.ArgumentParser(prog="zetastrip", description="zeta(s) in the critical strip: exact and asymptotic representations")
    ap.add_argument("--table", help=f"one of {', '.join(TABLE_IDS)}, or 'all'")
    ap.add_argument("--sigma", type=float, help="real part of s")
    ap.add_argument("--t", type=float, help="imaginary part of s")
    ap.add_argument("--eta", type=float)
    ap.add_argument("--N", type=int)
    ap.add_argument("--method", choices=METHODS + ("compare",), default="reference")
    ap.add_argument("--precision-bits", type=int, help="working precision (default from ZETASTRIP_PRECISION_BITS or 256)")
    ap.add_argument("--tol", type=float, default=DEFAULT_QUAD_TOL, help="quadrature tolerance")
    ap.add_argument("--delta-guard", type=float, default=DEFAULT_DELTA, help="lattice guard distance")
    ap.add_argument("--closed-form", action="store_true", help="use the printed N = 3 formulas where available")
    ap.add_argument("--relaxed", action="store_true", help="report regime violations as warnings")
    ap.add_argument("--format", choices=("md", "csv", "json"), default="md")
    ap.add_argument("--out", help="write output here instead of stdout")
    ap.add_argument("--jobs", type=int, default=1, help="table cells evaluated in parallel")
    return ap


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_tables(args):
    ids = TABLE_IDS if args.table == "all" else (args.table,)
    for tid in ids:
        if tid not in TABLES:
            print(f"zetastrip: unknown table {tid!r}", file=sys.stderr)
            return 2
    parts = []
    ok = True
    for tid in ids:
        cells = run_table(tid, args.precision_bits, args.jobs)
        ok = ok and table_passes(tid, cells)
        if args.format == "csv":
            parts.append((f"# {tid}\n" if len(ids) > 1 else "") + to_csv(cells))
        elif args.format == "json":
            parts.append(to_json(tid, cells))
        else:
            parts.append(to_markdown(tid, cells))
    _emit("\n".join(parts), args.out)
    return 0 if ok else 1


def _run_point(args):
    if args.sigma is None or args.t is None:
        print("zetastrip: --sigma and --t are required without --table", file=sys.stderr)
        return 2
    if args.format == "csv":
        print("zetastrip: csv output is for tables", file=sys.stderr)
        return 2
    params = {
        "eta": args.eta,
        "tol": args.tol,
        "delta": args.delta_guard,
        "prec": args.precision_bits,
        "closed_form": args.closed_form,
        "strict": not args.relaxed,
    }
    if args.N is not None:
        params["N"] = args.N
    try:
        s = StripPoint(args.sigma, args.t)
        if args.method == "compare":
            ref, rows = _compare(s, params)
            if args.format == "json":
                text = json.dumps({"reference": ref, "methods": rows}, indent=2, sort_keys=True) + "\n"
            else:
                text = "\n".join([_point_markdown(ref)] + [_point_markdown(r) for r in rows])
        else:
            d = _result_dict(eval_point(s, args.method, params))
            text = json.dumps(d, indent=2, sort_keys=True) + "\n" if args.format == "json" else _point_markdown(d)
    except (ZetaStripError, ValueError) as exc:
        diag = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, RegimeViolation):
            diag.update(method=exc.method, condition=exc.condition)
        if args.format == "json":
            _emit(json.dumps(diag, indent=2, sort_keys=True) + "\n", args.out)
        else:
            print(f"zetastrip: {diag['error']}: {diag['message']}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.table:
        return _run_tables(args)
    return _run_point(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
