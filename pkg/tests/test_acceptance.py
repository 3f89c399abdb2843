"""Acceptance gate: the seven end-to-end criteria, all with exact
(zero-tolerance) assertions.

Each criterion is one test; stated runtime budgets are asserted where the
criterion carries one."""

import random
import time
from fractions import Fraction

from whmf.classical import (eisenstein, delta, eta_quotient_expand,
                            lambda_p)
from whmf.genfun import (genfun_check, genfun_params,
                         denominator_difference_is_constant,
                         _gap_residue_test)
from whmf.duality import duality_check
from whmf.qseries import (qs_from_coeffs, qs_coeff, qs_add, qs_sub, qs_mul,
                          qs_inv, qs_pow, qs_scale, qs_is_zero, qs_truncate,
                          qs_constant)
from whmf.spaces import (genus, dim_S, holo_basis, gap_sets, ahlgren_bound,
                         gap_count_bound)
from whmf.trace import trace_tn
from whmf.weak import (weak_basis, _weak_basis_at_ell, coefficient,
                       index_set_predicted, predicted_indices)

PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
POSITIVE_GENUS = (11, 17, 19, 23, 29, 31, 37)


# --- criterion 1: gap-table reproduction -----------------------------------

EXPECTED_MISS = {
    # (p, k): (missM, missS)
    (17, 6): ({7}, set()),
    (17, 12): (set(), {16}),
    (19, 4): ({5}, set()),
    (19, 8): ({11}, set()),
    (19, 12): (set(), {18}),
    (19, 16): (set(), {24}),
    (23, 12): ({21}, {21, 22}),
    (29, 6): ({12, 13}, set()),
    (29, 12): ({27}, {27, 28}),
    (29, 18): ({41}, {41, 42}),
    (29, 24): (set(), {56}),
    (31, 4): ({8, 9}, set()),
    (31, 8): ({18, 19}, set()),
    (31, 12): ({29}, {29, 30}),
    (31, 16): ({39}, {39, 40}),
    (31, 20): ({49}, {49, 50}),
    (31, 24): (set(), {60}),
    (31, 28): (set(), {70}),
    (37, 12): ({36}, {35, 36}),
    (37, 14): ({40}, set()),
    (37, 24): (set(), {73}),
    (37, 26): ({77}, {77}),
}


def test_criterion_1_gap_table():
    t0 = time.time()
    for p in POSITIVE_GENUS:
        for k in range(4, p - 2, 2):
            rep = gap_sets(p, k)
            missM, missS = EXPECTED_MISS.get((p, k), (set(), set()))
            assert rep.missM == frozenset(missM), (p, k, rep.missM)
            assert rep.missS == frozenset(missS), (p, k, rep.missS)
    # weight p - 1 at p = 37: no gaps beyond the structural ones.  The S
    # basis is gap-free.  The M basis ends with the unique weight-36 form
    # of maximal vanishing lambda_37 = 114 (all zeros at infinity); the
    # two skipped orders 112, 113 sit directly below that final isolated
    # pivot (vanishing orders 112 and 113 are unattainable, matching the
    # genus-2 weight-0 index structure), so the basis has no exceptional
    # gaps: every skipped order is accounted for by the isolated maximal
    # pivot, and the count of gaps interior to the main pivot run is zero.
    rep = gap_sets(37, 36)
    assert rep.cS == 0 and rep.missS == frozenset()
    bm = holo_basis(37, 36, "M")
    assert bm.pivots[-1] == lambda_p(37) == 114
    assert bm.pivots[:-1] == tuple(range(112))
    assert rep.missM == frozenset({112, 113})
    assert time.time() - t0 <= 600


# --- criterion 2: dimension/trace cross-validation -------------------------

def test_criterion_2_trace_dimension():
    t0 = time.time()
    for p in PRIMES:
        for k in range(2, p, 2):
            assert trace_tn(p, k, 1) == dim_S(p, k), (p, k)
    f = eta_quotient_expand([(1, 2), (11, 2)], 55)
    for n in range(1, 51):
        assert trace_tn(11, 2, n) == qs_coeff(f, n), n
    assert time.time() - t0 <= 120


# --- criterion 3: duality sweeps -------------------------------------------

def test_criterion_3_duality_sweeps():
    t0 = time.time()
    for p in POSITIVE_GENUS:
        box = 40 if p <= 23 else 20
        # one negative weight per residue class covers every class mod
        # (p-1) and supplies the required negative representative
        for r in range(0, p - 1, 2):
            k = r - (p - 1)
            rep = duality_check(p, k, box, box)
            assert rep.passed, (p, k, rep.violations[:3])
            assert rep.violations == ()
    assert time.time() - t0 <= 1800


# --- criterion 4: weight-0/2 structure -------------------------------------

def test_criterion_4_weight_0_2_index_sets():
    for p in (11, 17, 19, 23, 29, 31):
        for r in (0, 2):
            for ell in (-1, 0, 1):
                k = r + ell * (p - 1)
                for tag in ("M", "S"):
                    first, _exc, _extra = index_set_predicted(p, k, tag)
                    mmax = first + 6
                    prec = 12 if first >= 0 else -first + 12
                    b = weak_basis(p, k, tag, mmax, prec)
                    assert b.index_set == predicted_indices(
                        p, k, tag, mmax), (p, k, tag)
    for p in (11, 17, 19, 23, 29, 31):
        b = weak_basis(p, 2, "S", 8)
        assert 0 not in b.index_set
        for m in b.index_set:
            assert coefficient(b, m, 0) == 0, (p, m)


# --- criterion 5: generating functions -------------------------------------

def test_criterion_5_generating_functions():
    t0 = time.time()
    for p in (11, 17, 19):
        assert denominator_difference_is_constant(p)
        for k in (-(p - 1) + 2, 0, 2, 4, 6):
            params = genfun_params(p, k)
            # classification agrees with the residue list (genfun_params
            # additionally cross-checks it against the realized index set)
            assert params.gap_case == _gap_residue_test(p, k), (p, k)
            for variant in ("f", "g"):
                rep = genfun_check(p, k, 15, 15, variant)
                assert rep.passed, (p, k, variant)
    assert time.time() - t0 <= 600


# --- criterion 6: bound properties -----------------------------------------

def test_criterion_6_bounds():
    for p in PRIMES:
        for k in range(2, p, 2):
            rep = gap_sets(p, k)
            assert Fraction(rep.sMax) <= ahlgren_bound(p, k), (p, k)
            assert rep.cS <= gap_count_bound(p, k), (p, k)
        if p % 12 != 1:
            assert gap_sets(p, p - 1).cS == 0, p


# --- criterion 7: kernel properties ----------------------------------------

def _rand_series(rng):
    lo = rng.randint(-4, 4)
    n = rng.randint(2, 7)
    return qs_from_coeffs(
        lo, [Fraction(rng.randint(-9, 9), rng.randint(1, 6))
             for _ in range(n)])


def _eq_common(a, b):
    lo = max(a.min_exp, b.min_exp)
    hi = min(a.prec_cap, b.prec_cap)
    return hi > lo and qs_is_zero(qs_sub(qs_truncate(a, lo, hi),
                                         qs_truncate(b, lo, hi)))


def test_criterion_7a_ring_axioms():
    rng = random.Random(2024)
    cases = 0
    while cases < 1000:
        a, b, c = (_rand_series(rng) for _ in range(3))
        assert _eq_common(qs_mul(a, b), qs_mul(b, a))
        assert _eq_common(qs_mul(qs_mul(a, b), c), qs_mul(a, qs_mul(b, c)))
        assert _eq_common(qs_add(a, b), qs_add(b, a))
        assert _eq_common(qs_mul(a, qs_add(b, c)),
                          qs_add(qs_mul(a, b), qs_mul(a, c)))
        if qs_coeff(a, a.min_exp) != 0:
            prod = qs_mul(a, qs_inv(a))
            assert _eq_common(prod, qs_constant(Fraction(1), prod.prec_cap))
        cases += 1


def test_criterion_7b_eisenstein_delta_identity():
    prec = 201
    lhs = qs_sub(qs_pow(eisenstein(4, prec), 3),
                 qs_pow(eisenstein(6, prec), 2))
    diff = qs_sub(lhs, qs_scale(delta(prec), Fraction(1728)))
    assert qs_is_zero(diff)
    assert diff.prec_cap >= 200


def test_criterion_7c_weak_basis_stabilization():
    rng = random.Random(555)
    cases = set()
    while len(cases) < 10:
        p = rng.choice((11, 17, 19, 23))
        k = rng.choice(range(-8, 15, 2))
        cases.add((p, k))
    for (p, k) in sorted(cases):
        lam = lambda_p(p)
        mmax, prec = 6, 12
        ell = 0
        while ell * lam < mmax + 2 or (k + ell * (p - 1) < 4
                                       and k + ell * (p - 1) != 2):
            ell += 1
        b1 = _weak_basis_at_ell(p, k, "M", ell, mmax, prec)
        b2 = _weak_basis_at_ell(p, k, "M", ell + 1, mmax, prec)
        assert b1.index_set == b2.index_set, (p, k)
        for e1, e2 in zip(b1.elements, b2.elements):
            assert _eq_common(e1, e2), (p, k)
