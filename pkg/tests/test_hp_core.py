import random

import mpmath
import pytest

from zetastrip import ComplexHP, Jet, SigmaRational, StripPoint, jet_reversion, sigma_rational_derive
from zetastrip.errors import DegenerateSeries, InvalidOrder, PrecisionMismatch, RegimeViolation
from zetastrip.sigma_rational import operator_terms

from conftest import P

TINY = mpmath.mpf(2) ** (-(P - 16))


# ComplexHP and StripPoint ---------------------------------------------------------


def test_equal_precision_arithmetic_keeps_precision():
    a = ComplexHP(mpmath.mpc(1, 2), 128)
    b = ComplexHP(mpmath.mpc(3, -1), 128)
    assert (a * b).prec == 128
    assert complex(a * b) == pytest.approx(5 + 5j)


def test_mixed_precision_is_an_error():
    with pytest.raises(PrecisionMismatch):
        ComplexHP(1, 128) + ComplexHP(1, 256)


def test_elementary_functions_round_trip():
    z = ComplexHP(mpmath.mpc("0.3", "1.7"), P)
    with mpmath.workprec(P):
        assert abs(z.exp().log().v - z.v) < 4 * mpmath.mpf(2) ** -P * abs(z.v)
        assert abs(z.sin().v - mpmath.sin(z.v)) < 4 * mpmath.mpf(2) ** -P


def test_branch_cut_choice():
    z = ComplexHP(-1, P)
    assert float(mpmath.im(z.log("negative").v)) == pytest.approx(float(mpmath.pi))
    assert float(mpmath.im(ComplexHP(mpmath.mpc(1, -1e-30), P).log("positive").v)) == pytest.approx(2 * float(mpmath.pi))


def test_strip_point_validation():
    StripPoint(0.5, 10)
    with pytest.raises(RegimeViolation):
        StripPoint(1.5, 10)
    with pytest.raises(RegimeViolation):
        StripPoint(0.5, -1)
    StripPoint(2, 0.0001, relaxed=True)


# jets ---------------------------------------------------------------------------------


def _rand_jet(rng, order):
    return Jet([mpmath.mpc(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(order + 1)])


def test_jet_ring_axioms():
    rng = random.Random(1)
    for _ in range(10):
        a, b, c = (_rand_jet(rng, 6) for _ in range(3))
        lhs = (a * b) * c
        rhs = a * (b * c)
        assert max(abs(x - y) for x, y in zip(lhs, rhs)) < TINY
        lhs = a * (b + c)
        rhs = a * b + a * c
        assert max(abs(x - y) for x, y in zip(lhs, rhs)) < TINY


def test_jet_exp_log_inverse():
    rng = random.Random(2)
    for _ in range(10):
        f = _rand_jet(rng, 8)
        f = Jet([1] + list(f.c[1:]))
        g = f.log().exp()
        assert max(abs(x - y) for x, y in zip(f, g)) < TINY


def test_jet_reciprocal_needs_nonzero_constant():
    with pytest.raises(DegenerateSeries):
        Jet([0, 1, 2]).reciprocal()


def test_reversion_of_pure_quadratic():
    # v = -i rho^2 / 2  ->  rho = (1 + i) lambda
    v = Jet([0, 0, -0.5j, 0])
    r = jet_reversion(v, 1)
    assert abs(r[1] - (1 + 1j)) < TINY
    assert abs(r[1] ** 2 - 2j) < TINY


def test_reversion_round_trip_order_10():
    for prec in (P, P + 64):
        with mpmath.workprec(prec):
            rho = Jet.variable(0, 12)
            v = rho - 1j * (1 - 1j * rho).log()
            r = jet_reversion(v, 10)
            lam2 = v.truncate(11).compose(Jet(list(r.c) + [0]))
            target = [0, 0, 1] + [0] * 9
            resid = max(abs(x - y) for x, y in zip(lam2.c[:11], target))
            assert resid < mpmath.mpf(2) ** (-(prec - 16))


def test_reversion_leading_coefficient_gives_c0():
    rho = Jet.variable(0, 4)
    v = rho - 1j * (1 - 1j * rho).log()
    r = jet_reversion(v, 2)
    # (1 - i rho)^sigma / rho ~ v^(-1/2) c_0, so c_0 = 1/r_1
    assert abs(1 / r[1] - (1 - 1j) / 2) < TINY


def test_reversion_errors():
    with pytest.raises(InvalidOrder):
        jet_reversion(Jet([0, 1, 0]), 0)
    with pytest.raises(DegenerateSeries):
        jet_reversion(Jet([0, 0, 0, 0]), 1)
    with pytest.raises(DegenerateSeries):
        jet_reversion(Jet([1, 1, 0]), 1)


# sigma-rational terms -----------------------------------------------------------


def _z_form(term, z, n, t):
    """Evaluate through numerator_in_z: z^(alpha - sigma) P~(z) / (n z + e i t)^k."""
    coeffs = term.numerator_in_z(n, t)
    num = mpmath.polyval(list(reversed(coeffs)), z)
    return mpmath.exp((term.alpha_offset - term.sigma) * mpmath.log(z)) * num / (n * z + term.variant * 1j * t) ** term.pole_power


def test_first_derivative_matches_printed_form():
    sigma, n, t, z = mpmath.mpf("0.3"), 2, mpmath.mpf(7), mpmath.mpc("1.2", "0.4")
    d1 = sigma_rational_derive(SigmaRational.seed(sigma))
    printed = -(z ** (1 - sigma)) * (n * sigma * z + 1j * (sigma - 1) * t) / (n * z + 1j * t) ** 3
    assert abs(d1.evaluate(z, n, t) - printed) < TINY
    assert abs(_z_form(d1, z, n, t) - printed) < TINY
    assert d1.pole_power == 3


def test_second_derivative_matches_printed_form():
    sigma, n, t, z = mpmath.mpf("0.7"), 3, mpmath.mpf(11), mpmath.mpc("0.8", "-0.5")
    d2 = operator_terms(sigma, 3)[2]
    num = n**2 * sigma * (sigma + 1) * z**2 + 1j * n * (2 * sigma**2 - sigma - 2) * t * z - (sigma - 1) ** 2 * t**2
    printed = z ** (1 - sigma) * num / (n * z + 1j * t) ** 5
    assert abs(d2.evaluate(z, n, t) - printed) < TINY * 10
    assert d2.pole_power == 5


def test_derivative_vs_finite_difference():
    sigma, n, t, z0 = mpmath.mpf("0.4"), 2, mpmath.mpf(5), mpmath.mpc("1.1", "0.3")
    term = SigmaRational.seed(sigma)
    h = mpmath.mpf(2) ** (-P / 3)
    for _ in range(3):
        fd = (term.evaluate(z0 + h, n, t) - term.evaluate(z0 - h, n, t)) / (2 * h)
        d = term.derive()
        exact = d.evaluate(z0, n, t)
        op = fd / (n + 1j * t / z0)
        assert abs(op - exact) / abs(exact) < mpmath.mpf(2) ** (-P / 3 + 8)
        term = d


def test_minus_variant():
    sigma, n, t, z = mpmath.mpf("0.5"), 1, mpmath.mpf(3), mpmath.mpc("0.6", "0.9")
    d = sigma_rational_derive(SigmaRational.seed(sigma), "minus")
    printed = -(z ** (1 - sigma)) * (n * sigma * z - 1j * (sigma - 1) * t) / (n * z - 1j * t) ** 3
    assert abs(d.evaluate(z, n, t) - printed) < TINY


def test_repeated_derivation_random_triples():
    rng = random.Random(3)
    for _ in range(64):
        sigma = mpmath.mpf(rng.uniform(0, 1))
        t = mpmath.mpf(rng.uniform(1, 50))
        z0 = mpmath.mpc(rng.uniform(0.5, 2), rng.uniform(-1, 1))
        n = rng.randint(1, 5)
        terms = operator_terms(sigma, 5)

        def f(z, j):
            return terms[j].evaluate(z, n, t)

        for j in range(1, 5):
            numeric = mpmath.diff(lambda z: f(z, j - 1), z0) / (n + 1j * t / z0)
            exact = f(z0, j)
            assert abs(numeric - exact) / abs(exact) < 1e-10
