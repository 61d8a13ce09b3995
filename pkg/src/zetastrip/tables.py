"""The five verification tables: grids, printed values, and the runner.

Every cell is ``zeta_reference(s) - (expansion value)`` for the expansion
the table verifies, compared with the printed complex number through
rel_mismatch = |computed - printed| / |printed|.
"""

from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import dataclass, field
import io
import json
import math

import mpmath

from .config import DEFAULT_DELTA, harness_precision
from .errors import ZetaStripError
from .expansions import zeta_confluent, zeta_large_eta_mirror, zeta_region1, zeta_small_eta, zeta_sqrt_region
from .hp import ComplexHP, StripPoint
from .oracle import zeta_reference

mp = mpmath.mp

CSV_HEADER = ["sigma", "t", "eta", "N", "err_re", "err_im", "paper_re", "paper_im", "rel_mismatch"]

# eta as a function of t (mpf in, mpf out)
ETA_RULES = {
    "t": lambda t: t,
    "t^2": lambda t: t**2,
    "t^(3/2)": lambda t: t * mpmath.sqrt(t),
    "10": lambda t: mpmath.mpf(10),
    "t^(1/4)": lambda t: mpmath.root(t, 4),
    "t^(5/12)": lambda t: t ** (mpmath.mpf(5) / 12),
    "t^(7/12)": lambda t: t ** (mpmath.mpf(7) / 12),
    "t^(3/4)": lambda t: t ** (mpmath.mpf(3) / 4),
    "10t": lambda t: 10 * t,
    "sqrt(2 pi t/100)": lambda t: mpmath.sqrt(2 * mpmath.pi * t / 100),
    "sqrt(2 pi t)": lambda t: mpmath.sqrt(2 * mpmath.pi * t),
    "sqrt(200 pi t)": lambda t: mpmath.sqrt(200 * mpmath.pi * t),
}


def eta_value(rule, t):
    return ETA_RULES[rule](mpmath.mpf(t))


@dataclass(frozen=True)
class GridPoint:
    sigma: float
    t: int
    eta_rule: str
    N: int
    paper: complex


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    title: str
    grid: tuple
    threshold: float
    reference_digits: int = 30


def _grid(sigma, N, ts, rows):
    """rows: list of (eta_rule, [printed value per t])."""
    out = []
    for rule, vals in rows:
        for t, v in zip(ts, vals):
            out.append(GridPoint(sigma, t, rule, N, v))
    return tuple(out)


_T3 = (10, 100, 1000)
_T6 = (100, 10**4, 10**6)

TABLES = {
    "B1_thm31": TableSpec(
        "B1_thm31",
        "region-1 expansion, N = 3",
        _grid(
            0.5,
            3,
            _T3,
            [
                ("t^2", [-(10.4 + 5.22j) * 1e-5, (-10.2 + 2.97j) * 1e-9, (15.1 - 4.46j) * 1e-13]),
                ("t^(3/2)", [-(4.00 + 4.19j) * 1e-3, -(1.40 + 1.11j) * 1e-5, -(7.80 + 9.81j) * 1e-8]),
            ],
        ),
        0.02,
    ),
    "B1_partial": TableSpec(
        "B1_partial",
        "zeta minus the main sum (N = 1) and minus main sum and integral term (N = 2)",
        _grid(
            0.5,
            1,
            _T3,
            [
                ("t^2", [-0.291 + 0.274j, -0.341 + 0.207j, -0.380 + 0.121j]),
                ("t^(3/2)", [0.266 + 0.0471j, 0.127 + 0.020j, 0.0360 + 0.0612j]),
            ],
        )
        + _grid(
            0.5,
            2,
            _T3,
            [
                ("t^2", [-(8.27 + 6.52j) * 1e-2, -(6.95 + 10.3j) * 1e-4, -(3.40 + 10.6j) * 1e-4]),
                ("t^(3/2)", [(1.58 - 1.50j) * 1e-1, (9.37 - 26.0j) * 1e-3, (-4.93 + 3.32j) * 1e-3]),
            ],
        ),
        0.02,
    ),
    "B2_thm32": TableSpec(
        "B2_thm32",
        "eta = t expansion, N = 3",
        _grid(0.0, 3, _T3, [("t", [(1.97 - 3.81j) * 1e-3, (-7.76 + 65.1j) * 1e-7, (5.62 - 3.40j) * 1e-9])])
        + _grid(0.5, 3, _T3, [("t", [(2.23 - 4.34j) * 1e-3, (-2.74 + 23.5j) * 1e-7, (6.46 - 3.82j) * 1e-10])])
        + _grid(1.0, 3, _T3, [("t", [(2.42 - 4.78j) * 1e-3, (-9.41 + 82.5j) * 1e-8, (7.13 - 4.22j) * 1e-11])]),
        0.02,
    ),
    "B3_thm4a": TableSpec(
        "B3_thm4a",
        "small-eta expansion, N = 3",
        _grid(
            0.5,
            3,
            _T6,
            [
                ("10", [(3.04 + 7.27j) * 1e-3, (8.05 - 2.53j) * 1e-6, (84.1 - 5.12j) * 1e-10]),
                ("t^(1/4)", [(45.4 - 6.75j) * 1e-5, (8.05 - 2.53j) * 1e-6, (-443.6 + 6.91j) * 1e-7]),
                ("t^(5/12)", [(7.27 - 1.45j) * 1e-1, (-8.69 + 9.53j) * 1e-5, (4.38 - 13.7j) * 1e-6]),
            ],
        ),
        0.05,
    ),
    "B3_HL": TableSpec(
        "B3_HL",
        "approximate functional equation (two Dirichlet sums only)",
        _grid(
            0.5,
            0,
            _T6,
            [
                ("10", [(5.55 - 14.1j) * 1e-2, (-14.4 + 7.92j) * 1e-3, (-15.9 + 4.40j) * 1e-4]),
                ("t^(1/4)", [(4.76 - 7.53j) * 1e-2, (-14.4 + 7.92j) * 1e-3, -(26.3 + 6.92j) * 1e-3]),
                ("t^(5/12)", [-(2.14 + 2.15j) * 1e-1, (3.09 - 1.91j) * 1e-2, (-5.70 + 10.4j) * 1e-3]),
            ],
        ),
        0.05,
    ),
    "B4_cor": TableSpec(
        "B4_cor",
        "large-eta mirror expansion, N = 2",
        _grid(
            0.5,
            2,
            _T3,
            [
                ("t^(7/12)", [-(4.08 + 2.47j) * 1e-1, (-2.39 + 3.50j) * 1e-1, (-6.42 + 15.9j) * 1e-2]),
                ("t^(3/4)", [(6.92 + 55.7j) * 1e-2, (9.93 + 25.7j) * 1e-2, -(8.75 + 12.2j) * 1e-3]),
                ("10t", [(1.40 - 1.12j) * 1e-2, (2.24 + 5.28j) * 1e-4, (2.45 + 186.1j) * 1e-7]),
            ],
        ),
        0.05,
    ),
    "B5_thm4b": TableSpec(
        "B5_thm4b",
        "sqrt(t)-region expansion, N = 3",
        _grid(
            0.5,
            3,
            _T6,
            [
                ("sqrt(2 pi t/100)", [(-5.96 + 8.83j) * 1e-4, (6.44 + 1.30j) * 1e-4, (4.64 + 69.7j) * 1e-7]),
                ("sqrt(2 pi t)", [(3.59 - 10.8j) * 1e-3, (2.72 - 28.1j) * 1e-5, (104.6 + 8.97j) * 1e-7]),
                ("sqrt(200 pi t)", [(13.7 - 5.21j) * 1e-6, (-9.02 + 2.27j) * 1e-4, -(14.2 + 6.74j) * 1e-7]),
            ],
        ),
        0.05,
    ),
}

TABLE_IDS = tuple(TABLES)


# cells -------------------------------------------------------------------------------


def fmt6(x):
    """Fixed 6-significant-digit rendering used in every output format."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "nan"
    return f"{float(x):.6g}"


@dataclass
class TableCell:
    table_id: str
    sigma: float
    t: float
    eta: float
    N: int
    eta_rule: str
    computed_error: ComplexHP = None
    paper_error: complex = None
    warnings: tuple = ()
    failure: str = None
    extra: dict = field(default_factory=dict)
    # set when read back from CSV: the mismatch computed before rounding to 6 digits
    rel_recorded: float = None

    @property
    def rel_mismatch(self):
        if self.rel_recorded is not None:
            return self.rel_recorded
        if self.computed_error is None or self.paper_error is None:
            return float("nan")
        c = complex(self.computed_error)
        return abs(c - self.paper_error) / abs(self.paper_error)

    def ok(self, threshold):
        r = self.rel_mismatch
        return self.failure is None and not math.isnan(r) and r < threshold

    def row(self):
        c = complex(self.computed_error) if self.computed_error is not None else complex("nan+nanj")
        p = self.paper_error if self.paper_error is not None else complex("nan+nanj")
        return [
            fmt6(self.sigma),
            fmt6(self.t),
            fmt6(self.eta),
            str(self.N),
            fmt6(c.real),
            fmt6(c.imag),
            fmt6(p.real),
            fmt6(p.imag),
            fmt6(self.rel_mismatch),
        ]


def _expansion_error(table_id, sigma, t, eta, N, prec, z):
    """(computed error as mpc, warnings, extra) for one cell."""
    s = StripPoint(sigma, t)
    kw = dict(strict=False, prec=prec, delta=DEFAULT_DELTA)
    if table_id == "B1_thm31":
        r = zeta_region1(s, eta, N=3, closed_form=True, **kw)
        return z - r.v, r.warnings, {"predicted_error": r.predicted_error_mag}
    if table_id == "B1_partial":
        r = zeta_region1(s, eta, N=3, closed_form=True, **kw)
        approx = r.terms["main_sum"].v
        if N == 2:
            approx += r.terms["integral"].v
        return z - approx, r.warnings, {}
    if table_id == "B2_thm32":
        r = zeta_confluent(s, N=3, closed_form=True, **kw)
        return z - r.v, r.warnings, {"predicted_error": r.predicted_error_mag}
    if table_id == "B3_thm4a":
        r = zeta_small_eta(s, eta, N=3, closed_form=True, **kw)
        return z - r.v, r.warnings, {"predicted_error": r.predicted_error_mag}
    if table_id == "B3_HL":
        r = zeta_small_eta(s, eta, N=3, closed_form=True, **kw)
        return z - r.terms["sum_t_over_eta"].v - r.terms["chi_sum"].v, r.warnings, {}
    if table_id == "B4_cor":
        r = zeta_large_eta_mirror(s, eta, N=2, **kw)
        return z - r.v, r.warnings, {"predicted_error": r.predicted_error_mag}
    if table_id == "B5_thm4b":
        r = zeta_sqrt_region(s, eta, N=3, **kw)
        return z - r.v, r.warnings, {"predicted_error": r.predicted_error_mag, "rational_tau": r.meta.get("rational")}
    raise ValueError(f"unknown table {table_id!r}")


def run_cell(table_id, gp, precision_bits=None, reference_digits=30):
    """Evaluate one grid point; failures are recorded on the cell, never raised."""
    prec = harness_precision(gp.t, precision_bits)
    with mp.workprec(prec + 40):
        eta = eta_value(gp.eta_rule, gp.t)
    cell = TableCell(table_id, gp.sigma, gp.t, float(eta), gp.N, gp.eta_rule, paper_error=gp.paper)
    try:
        with mp.workprec(prec + 40):
            z = zeta_reference((gp.sigma, gp.t), digits=reference_digits, prec=prec + 40).v
            err, warns, extra = _expansion_error(table_id, gp.sigma, gp.t, eta, gp.N, prec, z)
        cell.computed_error = ComplexHP(err, prec)
        cell.warnings = tuple(warns)
        cell.extra = extra
    except ZetaStripError as exc:
        cell.failure = f"{type(exc).__name__}: {exc}"
    cell.extra["precision_bits"] = prec
    return cell


def _run_cell_args(args):
    return run_cell(*args)


def run_table(spec, precision_bits=None, jobs=1):
    """All cells of ``spec`` (a TableSpec or a table id), in grid order."""
    if isinstance(spec, str):
        spec = TABLES[spec]
    args = [(spec.table_id, gp, precision_bits, spec.reference_digits) for gp in spec.grid]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_run_cell_args, args))
    return [run_cell(*a) for a in args]


def table_passes(spec, cells):
    if isinstance(spec, str):
        spec = TABLES[spec]
    return all(c.ok(spec.threshold) for c in cells)


# output -------------------------------------------------------------------------------


def to_csv(cells):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for c in cells:
        w.writerow(c.row())
    return buf.getvalue()


def from_csv(text, table_id=""):
    """Re-read cells written by to_csv (values as printed, 6 significant digits)."""
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    cells = []
    for r in rows[1:]:
        sigma, t, eta, N, er, ei, pr, pi_, rel = r
        comp = complex(float(er), float(ei))
        paper = complex(float(pr), float(pi_))
        cells.append(
            TableCell(
                table_id,
                float(sigma),
                float(t),
                float(eta),
                int(N),
                "",
                computed_error=None if math.isnan(comp.real) else ComplexHP(comp, 53),
                paper_error=None if math.isnan(paper.real) else paper,
                rel_recorded=float(rel),
            )
        )
    return cells


def _fmt_complex(z):
    if z is None:
        return "-"
    z = complex(z)
    sign = "-" if z.imag < 0 else "+"
    return f"{fmt6(z.real)} {sign} {fmt6(abs(z.imag))}i"


def to_markdown(spec, cells):
    if isinstance(spec, str):
        spec = TABLES[spec]
    lines = [
        f"### {spec.table_id}: {spec.title}",
        "",
        "| sigma | t | eta | N | computed | printed | rel_mismatch | status |",
        "|---|---|---|---|---|---|---|---|",
    ]
    for c in cells:
        status = "ok" if c.ok(spec.threshold) else ("FAIL: " + c.failure if c.failure else "MISMATCH")
        comp = c.computed_error.v if c.computed_error is not None else None
        lines.append(
            f"| {fmt6(c.sigma)} | {fmt6(c.t)} | {c.eta_rule} = {fmt6(c.eta)} | {c.N} | {_fmt_complex(comp)} "
            f"| {_fmt_complex(c.paper_error)} | {fmt6(c.rel_mismatch)} | {status} |"
        )
    lines.append("")
    lines.append(f"threshold {spec.threshold}; " + ("all cells within threshold" if table_passes(spec, cells) else "some cells outside threshold"))
    return "\n".join(lines) + "\n"


def to_json(spec, cells):
    if isinstance(spec, str):
        spec = TABLES[spec]
    out = []
    for c in cells:
        comp = complex(c.computed_error) if c.computed_error is not None else None
        out.append(
            {
                "sigma": fmt6(c.sigma),
                "t": fmt6(c.t),
                "eta_rule": c.eta_rule,
                "eta": fmt6(c.eta),
                "N": c.N,
                "err_re": fmt6(comp.real) if comp is not None else "nan",
                "err_im": fmt6(comp.imag) if comp is not None else "nan",
                "paper_re": fmt6(c.paper_error.real),
                "paper_im": fmt6(c.paper_error.imag),
                "rel_mismatch": fmt6(c.rel_mismatch),
                "ok": c.ok(spec.threshold),
                "warnings": list(c.warnings),
                "failure": c.failure,
            }
        )
    return json.dumps({"table": spec.table_id, "threshold": spec.threshold, "cells": out}, indent=2, sort_keys=True) + "\n"
