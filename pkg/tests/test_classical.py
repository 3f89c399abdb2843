"""Classical building blocks: eta quotients, Eisenstein series, Delta,
Delta_p, and the level-p Eisenstein combination."""

from fractions import Fraction

import pytest

from whmf.classical import (bernoulli, sigma, eisenstein,
                            eisenstein_level_p, eta_quotient_expand,
                            delta, delta_p, lambda_p)
from whmf.qseries import (qs_coeff, qs_mul, qs_pow, qs_sub, qs_vop,
                          qs_scale, qs_is_zero, qs_valuation, qs_truncate)


def test_bernoulli():
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_delta_coefficients():
    d = delta(8)
    assert [qs_coeff(d, n) for n in (1, 2, 3, 4)] == [1, -24, 252, -1472]
    assert qs_valuation(d) == 1


def test_eta_product_level11():
    f = eta_quotient_expand([(1, 2), (11, 2)], 8)
    assert [qs_coeff(f, n) for n in range(1, 8)] == [1, -2, -1, 2, 1, 2, -2]


def test_eta_fractional_error():
    with pytest.raises(ValueError, match="fractional eta quotient"):
        eta_quotient_expand([(1, 1)], 8)


def test_eisenstein_leading():
    e4 = eisenstein(4, 4)
    assert [qs_coeff(e4, n) for n in (0, 1, 2)] == [1, 240, 2160]
    e6 = eisenstein(6, 3)
    assert [qs_coeff(e6, n) for n in (0, 1, 2)] == [1, -504, -16632]
    for k in (8, 10, 14):
        assert qs_coeff(eisenstein(k, 2), 0) == 1


def test_eisenstein_divisor_sums():
    e4 = eisenstein(4, 20)
    for n in range(1, 20):
        assert qs_coeff(e4, n) == 240 * sigma(n, 3)


def test_e4_e6_delta_identity():
    prec = 60
    lhs = qs_sub(qs_pow(eisenstein(4, prec), 3),
                 qs_pow(eisenstein(6, prec), 2))
    assert qs_is_zero(qs_sub(lhs, qs_scale(delta(prec), Fraction(1728))))


def test_ramanujan_691():
    d = delta(40)
    for n in range(1, 40):
        tau = qs_coeff(d, n)
        assert tau.denominator == 1
        assert (tau - sigma(n, 11)) % 691 == 0


def test_eisenstein_level_p():
    e = eisenstein_level_p(2, 11, 6)
    assert qs_coeff(e, 0) == 1
    assert qs_coeff(e, 1) == Fraction(12, 5)
    for k, p in ((4, 11), (6, 17)):
        prec = 12
        ek = eisenstein(k, prec)
        direct = qs_scale(qs_sub(qs_scale(qs_vop(ek, p), Fraction(p)),
                                 qs_truncate(ek, None, prec)),
                          Fraction(1, p - 1))
        ekp = eisenstein_level_p(k, p, prec)
        lo, hi = ekp.min_exp, min(ekp.prec_cap, direct.prec_cap)
        assert qs_is_zero(qs_sub(qs_truncate(ekp, lo, hi),
                                 qs_truncate(direct, lo, hi)))


def test_delta_p():
    for p in (5, 7, 11, 17, 23, 37):
        lam = lambda_p(p)
        assert lam == (p * p - 1) // 12
        dp = delta_p(p, lam + 6)
        assert qs_valuation(dp) == lam
        assert qs_coeff(dp, lam) == 1
    assert lambda_p(17) == 24
    assert lambda_p(11) == 10
    with pytest.raises(ValueError):
        delta_p(3, 10)
