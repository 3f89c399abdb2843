"""Truncated q-series arithmetic: hand-checked identities, window
bookkeeping, and randomized ring-axiom properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from whmf.qseries import (QSeries, qs_from_coeffs, qs_constant, qs_monomial,
                          qs_coeff, qs_add, qs_sub, qs_neg, qs_scale, qs_mul,
                          qs_inv, qs_div, qs_pow, qs_vop, qs_truncate,
                          qs_valuation, qs_is_zero, qs_eq, rat_str, qs_json,
                          BiSeries, bi_combine, bi_mul, bi_scale_rows,
                          bi_sub, bi_row, bi_is_zero, bi_truncate)


def S(min_exp, *coeffs):
    return qs_from_coeffs(min_exp, [Fraction(c) for c in coeffs])


def eq_common(a, b):
    lo = max(a.min_exp, b.min_exp)
    hi = min(a.prec_cap, b.prec_cap)
    assert hi > lo
    return qs_is_zero(qs_sub(qs_truncate(a, lo, hi), qs_truncate(b, lo, hi)))


# --- hand-checked examples -------------------------------------------------

def test_mul_hand_examples():
    a = S(-1, 1, 1)            # q^-1 + 1
    b = S(0, -1, 1)            # -1 + q
    prod = qs_mul(a, b)
    assert qs_coeff(prod, -1) == -1
    assert qs_coeff(prod, 0) == 0
    # (q^-2 + q^-1)(q^2 + q^3) = 1 + 2q + q^2
    c = qs_mul(S(-2, 1, 1), S(2, 1, 1))
    assert [qs_coeff(c, n) for n in (0, 1)] == [1, 2]


def test_mul_identity_window():
    s = S(-2, 1, 0, 3, 5)
    one = qs_constant(Fraction(1), 6)
    prod = qs_mul(s, one)
    assert eq_common(prod, s)
    # pessimistic cap: min(a.min + b.cap, b.min + a.cap)
    assert prod.prec_cap == min(s.min_exp + one.prec_cap,
                                one.min_exp + s.prec_cap)


def test_inv_geometric():
    inv = qs_inv(S(0, 1, -1, 0, 0, 0, 0))
    assert [qs_coeff(inv, n) for n in range(5)] == [1, 1, 1, 1, 1]


def test_inv_monomial():
    assert qs_valuation(qs_inv(qs_monomial(1, -2, 5))) == 2


def test_inv_with_pole():
    # inv(q^-2 - 2 q^-1) = q^2 + 2q^3 + 4q^4 + ...
    inv = qs_inv(S(-2, 1, -2, 0, 0, 0, 0))
    assert [qs_coeff(inv, n) for n in (2, 3, 4)] == [1, 2, 4]


def test_inv_error():
    with pytest.raises(ValueError, match="non-invertible series"):
        qs_inv(S(0, 0, 1, 2))


def test_vop():
    v = qs_vop(S(0, 1, 1), 3)
    assert qs_coeff(v, 0) == 1 and qs_coeff(v, 3) == 1
    assert qs_coeff(v, 1) == 0 and qs_coeff(v, 2) == 0
    assert qs_vop(qs_monomial(1, -1, 4), 2).min_exp == -2


def test_coeff_contract():
    s = S(-1, 1, 0, 0, 5)      # q^-1 + 5 q^2
    assert qs_coeff(s, 2) == 5
    assert qs_coeff(s, 0) == 0
    with pytest.raises(ValueError,
                       match="coefficient not computed at this precision"):
        qs_coeff(s, 3)


def test_add_window_intersection():
    a = S(0, 1, 2, 3)
    b = S(1, 1, 1)
    c = qs_add(a, b)
    assert c.min_exp == 0 and c.prec_cap == 3
    assert qs_coeff(c, 1) == 3
    from whmf.echelon import Echelonizer
    with pytest.raises(ValueError, match="incompatible precision windows"):
        Echelonizer(3, 3)


def test_div_pow_truncate():
    s = S(0, 1, 3, 3, 1, 0, 0, 0, 0)
    assert eq_common(qs_pow(S(0, 1, 1, 0, 0, 0, 0, 0, 0), 3), s)
    assert eq_common(qs_div(qs_mul(s, s), s), s)
    t = qs_truncate(S(1, 2, 3), -1, 2)
    assert t.min_exp == -1 and qs_coeff(t, -1) == 0 and qs_coeff(t, 1) == 2


def test_serialization():
    assert rat_str(Fraction(3, 7)) == "3/7"
    assert rat_str(Fraction(-4, 2)) == "-2"
    j = qs_json(S(-1, 1, 0, 5))
    assert j == {"minExp": -1, "precCap": 2, "coeffs": ["1", "0", "5"]}


# --- two-variable carriers -------------------------------------------------

def _sample_bi():
    return bi_combine({0: S(0, 1, 2, 0, 0), 1: S(-1, 3, 0, 1, 0, 0)})


def test_bi_mul_identity():
    F = _sample_bi()
    G = bi_mul(F, qs_constant(Fraction(1), 4))
    for m in range(G.z_min, G.z_cap):
        assert eq_common(bi_row(G, m), bi_row(F, m))


def test_bi_sub_self_zero():
    F = _sample_bi()
    assert bi_is_zero(bi_sub(F, F))


def test_bi_mul_hand():
    # multiply a 2-row series by (q_z - 1): row m of the result is
    # row_{m-1} - row_m
    F = _sample_bi()
    G = bi_mul(F, S(0, -1, 1, 0, 0))
    assert eq_common(bi_row(G, 0), qs_neg(bi_row(F, 0)))
    assert eq_common(bi_row(G, 1), qs_sub(bi_row(F, 0), bi_row(F, 1)))
    # the pessimistic z-cap stops before row 2
    assert G.z_cap == 2


def test_bi_scale_rows_and_truncate():
    F = _sample_bi()
    G = bi_scale_rows(F, S(0, 2, 0, 0, 0))
    assert eq_common(bi_row(G, 0), qs_scale(bi_row(F, 0), Fraction(2)))
    T = bi_truncate(F, 0, 1, 0, 2)
    assert T.z_min == 0 and T.z_cap == 1
    assert bi_row(T, 0).prec_cap == 2


# --- randomized ring axioms ------------------------------------------------

frac = st.fractions(min_value=-9, max_value=9, max_denominator=6)
series = st.builds(
    lambda lo, cs: qs_from_coeffs(lo, cs),
    st.integers(min_value=-4, max_value=4),
    st.lists(frac, min_size=2, max_size=7))


@settings(max_examples=300, deadline=None)
@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert eq_common(qs_mul(a, b), qs_mul(b, a))
    assert eq_common(qs_mul(qs_mul(a, b), c), qs_mul(a, qs_mul(b, c)))
    lo = max(b.min_exp, c.min_exp)
    hi = min(b.prec_cap, c.prec_cap)
    if hi > lo:
        bc = qs_add(b, c)
        assert eq_common(qs_mul(a, bc),
                         qs_add(qs_mul(a, b), qs_mul(a, c)))
    assert eq_common(qs_add(a, b), qs_add(b, a))
    assert qs_is_zero(qs_sub(a, a))


@settings(max_examples=200, deadline=None)
@given(series)
def test_inverse_property(a):
    if qs_coeff(a, a.min_exp) == 0:
        with pytest.raises(ValueError):
            qs_inv(a)
        return
    prod = qs_mul(a, qs_inv(a))
    one = qs_constant(Fraction(1), prod.prec_cap)
    assert eq_common(prod, one)


@settings(max_examples=200, deadline=None)
@given(series, series)
def test_mul_window_formula(a, b):
    prod = qs_mul(a, b)
    assert prod.min_exp == a.min_exp + b.min_exp
    assert prod.prec_cap == min(a.min_exp + b.prec_cap,
                                b.min_exp + a.prec_cap)


@settings(max_examples=100, deadline=None)
@given(series)
def test_coeffs_reduced(a):
    for c in a.coeffs:
        assert isinstance(c, Fraction) and c.denominator > 0
        from math import gcd
        assert gcd(c.numerator, c.denominator) == 1
