"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import contextlib
import math
import os
import random
import sys
import time
from fractions import Fraction

import mpmath

sys.path.insert(0, os.path.dirname(__file__))

from zetastrip import (
    PhiArg,
    StripPoint,
    TABLES,
    an_coefficients,
    basic_sum_pv,
    basic_sum_semicircle,
    chi,
    ck_coefficients,
    phi_quadrature,
    phi_rational,
    zeta_exact,
    zeta_reference,
    zeta_sqrt_region,
)
from zetastrip.hp import power_sum
from zetastrip.sigma_rational import operator_terms

from conftest import P, TABLE_SECONDS, table_cells

QTOL = mpmath.mpf(10) ** -30


def report(capsys, n, ok, detail):
    ctx = capsys.disabled() if capsys is not None else contextlib.nullcontext()
    with ctx:
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def _cells_line(table_id):
    cells = table_cells(table_id)
    thr = TABLES[table_id].threshold
    bad = [c for c in cells if not c.ok(thr)]
    worst = max(c.rel_mismatch for c in cells)
    where = "; ".join(f"t={c.t:g} eta={c.eta_rule} N={c.N} rel={c.rel_mismatch:.3g}" for c in bad)
    text = f"{table_id}: {len(cells) - len(bad)}/{len(cells)} cells < {thr} (max rel {worst:.3g})"
    return not bad, text + (f" [outside: {where}]" if bad else "")


def _slope(xs, ys):
    lx = [math.log10(x) for x in xs]
    ly = [math.log10(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


# tables ----------------------------------------------------------------------------------


def test_criterion_1_region1_table(capsys):
    ok, text = _cells_line("B1_thm31")
    secs = TABLE_SECONDS["B1_thm31"]
    fast = secs < 60
    report(capsys, 1, ok and fast, f"{text}; runtime {secs:.1f} s (< 60 s: {fast})")


def test_criterion_2_partial_sum_tables(capsys):
    ok, text = _cells_line("B1_partial")
    report(capsys, 2, ok and len(table_cells("B1_partial")) == 12, text)


def test_criterion_3_confluent_table(capsys):
    ok, text = _cells_line("B2_thm32")
    slopes = []
    for sigma in (0.0, 0.5, 1.0):
        cells = sorted((c for c in table_cells("B2_thm32") if c.sigma == sigma), key=lambda c: c.t)
        k = _slope([c.t for c in cells], [float(abs(c.computed_error.v)) for c in cells])
        slopes.append((sigma, k, abs(k + sigma + 3) <= 0.15))
    slope_ok = all(x[2] for x in slopes)
    detail = ", ".join(f"sigma={s:g} slope {k:.3f} (want {-(s + 3):g})" for s, k, _ in slopes)
    report(capsys, 3, ok and slope_ok, f"{text}; {detail}")


def test_criterion_4_small_eta_tables(capsys):
    ok1, text1 = _cells_line("B3_thm4a")
    ok2, text2 = _cells_line("B3_HL")
    secs = TABLE_SECONDS["B3_thm4a"] + TABLE_SECONDS["B3_HL"]
    fast = secs < 600
    report(capsys, 4, ok1 and ok2 and fast, f"{text1}; {text2}; runtime {secs:.1f} s (< 600 s: {fast})")


def test_criterion_5_mirror_table(capsys):
    ok, text = _cells_line("B4_cor")
    report(capsys, 5, ok, text)


def test_criterion_6_sqrt_region_table(capsys):
    ok, text = _cells_line("B5_thm4b")
    s = StripPoint(0.5, 100)
    eta = mpmath.sqrt(2 * mpmath.pi * 100)
    a = zeta_sqrt_region(s, eta, 3)
    b = zeta_sqrt_region(s, eta, 3, phi_source="psi")
    diff = abs(a.v - b.v)
    siegel = diff < mpmath.mpf(2) ** -(P - 24)
    report(capsys, 6, ok and siegel, f"{text}; Siegel route vs closed form at t=100: {mpmath.nstr(diff, 3)}")


# property suite ----------------------------------------------------------------------------


def _chi_products():
    rng = random.Random(7)
    worst = mpmath.mpf(0)
    for _ in range(200):
        s = mpmath.mpc(rng.uniform(0, 1), rng.uniform(0.1, 1000))
        worst = max(worst, abs(chi(s).v * chi(1 - s).v - 1))
    return worst < mpmath.mpf(2) ** -(P - 20), f"chi chi {mpmath.nstr(worst, 3)}"


def _phi_recursions():
    rng = random.Random(5)
    worst = mpmath.mpf(0)
    phi = lambda tau, u: phi_quadrature(PhiArg(tau, u)).v
    for _ in range(30):
        tau = -mpmath.mpf(rng.uniform(0.2, 3))
        u = mpmath.mpc(rng.uniform(-0.5, 0.5), rng.uniform(-0.2, 0.2))
        n = rng.randint(1, 3)
        f0 = phi(tau, u)
        r1 = f0 - (1 - mpmath.expjpi(tau - 2 * u) * phi(tau, u - tau))
        g = sum(mpmath.exp(-(1j * mpmath.pi / tau) * (u + k + mpmath.mpf(1) / 2) ** 2) for k in range(n))
        r2 = f0 - phi(tau, u + n) + mpmath.expjpi(mpmath.mpf(3) / 4) / mpmath.sqrt(-tau) * g
        worst = max(worst, abs(r1), abs(r2))
    return worst < 10 * QTOL, f"Phi recursions {mpmath.nstr(worst, 3)}"


def _phi_closed_vs_quadrature():
    rng = random.Random(13)
    worst = mpmath.mpf(0)
    pairs = [(1, 1), (1, 2), (3, 2), (2, 3), (5, 3), (7, 4), (4, 5), (9, 7), (2, 1), (5, 8)]
    for p, q in pairs:
        u = mpmath.mpc(rng.uniform(-0.45, 0.45), rng.uniform(-0.1, 0.1))
        worst = max(worst, abs(phi_quadrature(PhiArg.from_rational(p, q, u)).v - phi_rational(p, q, u).v))
    return worst < 10 * QTOL, f"phi_rational vs quadrature {mpmath.nstr(worst, 3)}"


def _basic_sum_identities():
    rng = random.Random(11)
    two_pi = 2 * math.pi
    worst_lr = worst_pv = mpmath.mpf(0)
    done = 0
    while done < 20:
        eta = rng.uniform(3, 30)
        t = eta + rng.uniform(5, 40)
        if min(abs(x / two_pi - round(x / two_pi)) for x in (eta, t)) < 0.05:
            continue
        s = StripPoint(rng.uniform(0, 1), t)
        R, L = basic_sum_semicircle(s, eta, t)
        pv = basic_sum_pv(s, eta, t)
        direct = power_sum(1 - s.s, int(eta // two_pi) + 1, int(t // two_pi))
        worst_lr = max(worst_lr, abs(R.v + L.v - direct))
        worst_pv = max(worst_pv, abs(R.v - L.v - pv.v))
        done += 1
    ok = worst_lr < 10 * QTOL and worst_pv < 20 * QTOL
    return ok, f"L+R {mpmath.nstr(worst_lr, 3)}, Plemelj {mpmath.nstr(worst_pv, 3)}"


def _printed_c(s):
    m = mpmath.mpf
    return [
        (1 - 1j) / 2,
        1j / m(3) - 1j * s,
        -(1 + 1j) / m(12) * (6 * s**2 - 6 * s + 1),
        (-45 * s**3 + 90 * s**2 - 45 * s + 4) / m(135),
        (1j - 1) / m(432) * (36 * s**4 - 120 * s**3 + 120 * s**2 - 36 * s + 1),
        1j / m(5670) * (189 * s**5 - 945 * s**4 + 1575 * s**3 - 987 * s**2 + 168 * s + 8),
        (1 + 1j) / m(194400) * (1080 * s**6 - 7560 * s**5 + 18900 * s**4 - 20160 * s**3 + 8190 * s**2 - 450 * s - 139),
    ]


def _ck():
    worst = mpmath.mpf(0)
    for fr in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
        sig = mpmath.mpf(fr.numerator) / fr.denominator
        for c, want in zip(ck_coefficients(6, sig), _printed_c(sig)):
            worst = max(worst, abs(c.v - want))
    return worst < mpmath.mpf(2) ** -(P - 8), f"c_0..c_6 {mpmath.nstr(worst, 3)}"


def _an():
    rng = random.Random(3)
    worst = mpmath.mpf(0)
    i = 1j
    for _ in range(20):
        s, t, eta = mpmath.mpf(rng.random()), mpmath.mpf(rng.uniform(10, 1e4)), mpmath.mpf(rng.uniform(5, 200))
        want = [
            mpmath.mpc(1),
            (s - 1) / (i * eta),
            -(s - 2) * (s - 1) / (2 * eta**2),
            (-2 * t + i * (s - 3) * (s - 2) * (s - 1)) / (6 * eta**3),
            ((s - 4) * (s - 3) * (s - 2) * (s - 1) + 2 * i * (4 * s - 7) * t) / (24 * eta**4),
        ]
        for a, w in zip(an_coefficients(StripPoint(s, t), eta, 5), want):
            worst = max(worst, abs(a.v - w) / max(1, abs(w)))
    return worst < mpmath.mpf(2) ** -(P - 16), f"a_0..a_4 {mpmath.nstr(worst, 3)}"


def _operator_terms():
    rng = random.Random(17)
    worst = mpmath.mpf(0)
    for _ in range(20):
        sig = mpmath.mpf(rng.random())
        n = rng.randint(1, 6)
        t = mpmath.mpf(rng.uniform(10, 1000))
        z = 1j * mpmath.mpf(rng.uniform(1, 100)) * t  # z = i eta
        terms = operator_terms(sig, 3)
        d1 = -(z ** (1 - sig)) * (n * sig * z + 1j * (sig - 1) * t) / (n * z + 1j * t) ** 3
        num = n**2 * sig * (sig + 1) * z**2 + 1j * n * (2 * sig**2 - sig - 2) * t * z - (sig - 1) ** 2 * t**2
        d2 = z ** (1 - sig) * num / (n * z + 1j * t) ** 5
        for term, want in ((terms[1], d1), (terms[2], d2)):
            worst = max(worst, abs(term.evaluate(z, n, t) - want) / abs(want))
    return worst < mpmath.mpf(2) ** -(P - 24), f"operator terms j=1,2 {mpmath.nstr(worst, 3)}"


def test_criterion_7_property_suite(capsys):
    t0 = time.perf_counter()
    parts = [f() for f in (_chi_products, _phi_recursions, _phi_closed_vs_quadrature, _basic_sum_identities, _ck, _an, _operator_terms)]
    secs = time.perf_counter() - t0
    ok = all(p[0] for p in parts) and secs < 300
    failed = [p[1] for p in parts if not p[0]]
    detail = "; ".join(p[1] for p in parts) + f"; runtime {secs:.1f} s (< 300 s: {secs < 300})"
    report(capsys, 7, ok, detail + (f" [failed: {', '.join(failed)}]" if failed else ""))


# oracle independence ------------------------------------------------------------------------


def test_criterion_8_oracle_independence(capsys):
    # 20 log-spaced heights in [10, 2000], random sigma and eta away from 2 pi Z
    tol = mpmath.mpf(10) ** -20
    rng = random.Random(29)
    worst = mpmath.mpf(0)
    bad = []
    t0 = time.perf_counter()
    for k in range(20):
        t = 10 * 200 ** (k / 19) * rng.uniform(0.97, 1.0)
        sigma = rng.uniform(0, 1)
        eta = rng.choice([3.0, 5.0, 9.0, 15.0])
        s = StripPoint(sigma, t)
        r = zeta_exact(s, eta, tol=tol)
        ref = zeta_reference(s, 40).v
        scaled = abs(r.v - ref) / max(1, abs(r.meta["chi"].v))
        worst = max(worst, scaled)
        if not scaled < 10 * tol:
            bad.append(f"t={t:.2f} sigma={sigma:.3f} eta={eta:g}")
    secs = time.perf_counter() - t0
    detail = f"max |exact - reference|/max(1,|chi|) over 20 points: {mpmath.nstr(worst, 3)} (tol {mpmath.nstr(tol, 2)}); runtime {secs:.0f} s"
    report(capsys, 8, not bad, detail + (f" [outside: {'; '.join(bad)}]" if bad else ""))


if __name__ == "__main__":
    failed = 0
    with mpmath.workprec(P):
        for name, fn in sorted(globals().items()):
            if name.startswith("test_criterion_"):
                try:
                    fn(None)
                except AssertionError:
                    failed += 1
    sys.exit(1 if failed else 0)
