"""Two-variable generating-function identities for the canonical bases at
the genus-one primes 11, 17 and 19.

F_k(z, tau) = sum over indices m of f_{k,m}(tau) q_z^m satisfies a closed
form with denominator f(z) - f(tau) (or g(z) - g(tau)), where f = f_{0,2}
and g = g_{0,2} are the weight-0 hauptmodul-like elements.  The identity is
verified here in cross-multiplied form: (den(z) - den(tau)) * F_k equals a
finite numerator built from a handful of basis elements — three products
when the index set has no gap, five when it has one.
"""

from dataclasses import dataclass
from fractions import Fraction

from .qseries import (qs_scale, qs_mul, qs_neg, qs_truncate, qs_coeff,
                      qs_sub, qs_is_zero, BiSeries, bi_combine, bi_mul,
                      bi_scale_rows, bi_sub, bi_is_zero, bi_truncate)
from .weak import weak_basis, index_set_predicted, coefficient


@dataclass(frozen=True)
class GenFunParams:
    """Shape data of the generating function F_k at one (p, k)."""
    p: int
    k: int
    n0: int             # -v_infinity(F_k): index of the first basis element
    gap_case: bool      # true iff the index set skips -n0 + 1
    a_coeffs: tuple     # (a_-1, a_1) of f = f_{0,2}
    b_coeffs: tuple     # (b_-1, b_1) of g = g_{0,2}


@dataclass(frozen=True)
class GenFunReport:
    p: int
    k: int
    variant: str        # "f" or "g" (denominator choice)
    window: tuple       # (J, I)
    residual: BiSeries
    passed: bool


def _gap_residue_test(p, k):
    """Residue-class prediction of the gap case: k = 0 mod (p-1), or
    p = 17 with k = 6 mod 16, or p = 19 with k = 4 or 8 mod 18."""
    if k % (p - 1) == 0:
        return True
    if p == 17 and k % 16 == 6:
        return True
    if p == 19 and k % 18 in (4, 8):
        return True
    return False


def genfun_params(p, k):
    """Compute n0, the gap classification (cross-checked against the
    realized index set), and the low-order coefficients of f and g."""
    if p not in (11, 17, 19):
        raise ValueError("genfun requires p in {11, 17, 19}")
    if k % 2:
        raise ValueError("genfun requires even k")
    first, excluded, _ = index_set_predicted(p, k, "M")
    n0 = -first
    basis = weak_basis(p, k, "M", first + 5)
    realized = set(basis.index_set)
    gap_resid = _gap_residue_test(p, k)
    gap_real = (-n0 + 1) not in realized
    if min(realized) != first or gap_resid != gap_real:
        raise ValueError(
            "residue prediction inconsistent with computed index set "
            "at p=%d, k=%d" % (p, k))
    f = weak_basis(p, 0, "M", 2).element(2)
    g = weak_basis(p, 0, "S", 2).element(2)
    a = (qs_coeff(f, -1), qs_coeff(f, 1))
    b = (qs_coeff(g, -1), qs_coeff(g, 1))
    return GenFunParams(p, k, n0, gap_resid, a, b)


def _outer(s_z, t_tau, z_hi):
    """BiSeries s_z(q_z) * t_tau(q_tau), rows truncated to z-exponents
    below z_hi."""
    hi = min(s_z.prec_cap, z_hi)
    rows = {}
    for m in range(s_z.min_exp, hi):
        rows[m] = qs_scale(t_tau, qs_coeff(s_z, m))
    return bi_combine(rows)


def _bi_add(a, b):
    return bi_sub(a, BiSeries(b.z_min, tuple(qs_neg(r) for r in b.rows)))


def genfun_check(p, k, J, I, variant="f"):
    """Verify (den(z) - den(tau)) * F_k = numerator exactly, on the
    two-variable window with z-exponents through J and tau-exponents
    through I."""
    if variant not in ("f", "g"):
        raise ValueError("variant must be 'f' or 'g'")
    params = genfun_params(p, k)
    n0 = params.n0
    # F_k rows: the first J + 4 indices starting at -n0 (the numerator
    # reaches index -n0 + 3 and the z-multiplication shifts rows by 2);
    # the J-window is counted from the first index, which for negative
    # weights lies far to the right of 0
    m_hi = -n0 + J + 3
    basis_m = weak_basis(p, k, "M", m_hi, I + 3)
    rows = {m: basis_m.element(m) for m in basis_m.index_set}
    if not rows:
        raise ValueError("no basis elements in window")
    F = bi_combine(rows)
    # weight-0 denominators, in both variables
    prec_z = abs(n0) + J + 8
    prec_t = I + J + abs(n0) + 12
    den_series = (weak_basis(p, 0, "M", 2, max(prec_z, prec_t))
                  if variant == "f"
                  else weak_basis(p, 0, "S", 2, max(prec_z, prec_t)))
    den = den_series.element(2)
    lhs = bi_sub(bi_mul(F, den), bi_scale_rows(F, den))
    # numerator: S-side elements of weight 2 - k as z-series
    basis_s = weak_basis(p, 2 - k, "S", n0 + 2, prec_z)
    fk = basis_m.element
    gz = basis_s.element
    a_m1, a_p1 = params.a_coeffs
    b_m1, b_p1 = params.b_coeffs
    z_hi = lhs.z_cap
    if not params.gap_case:
        if variant == "f":
            s1 = qs_scale(gz(n0 + 1), a_m1) + gz(n0 + 2)
            rhs = _bi_add(_outer(s1, fk(-n0), z_hi),
                          _outer(gz(n0 + 1), fk(-n0 + 1), z_hi))
        else:
            t1 = qs_scale(fk(-n0), b_m1) + fk(-n0 + 1)
            rhs = _bi_add(_outer(gz(n0 + 1), t1, z_hi),
                          _outer(gz(n0 + 2), fk(-n0), z_hi))
    else:
        if variant == "f":
            s1 = (qs_scale(gz(n0 - 1), a_p1) + qs_scale(gz(n0 + 1), a_m1)
                  + gz(n0 + 2))
            rhs = _bi_add(
                _bi_add(_outer(s1, fk(-n0), z_hi),
                        _outer(qs_scale(gz(n0 - 1), a_m1), fk(-n0 + 2),
                               z_hi)),
                _outer(gz(n0 - 1), fk(-n0 + 3), z_hi))
        else:
            t1 = (qs_scale(fk(-n0), b_p1) + qs_scale(fk(-n0 + 2), b_m1)
                  + fk(-n0 + 3))
            rhs = _bi_add(
                _bi_add(_outer(gz(n0 - 1), t1, z_hi),
                        _outer(gz(n0 + 1), qs_scale(fk(-n0), b_m1), z_hi)),
                _outer(gz(n0 + 2), fk(-n0), z_hi))
    z_lo = max(lhs.z_min, rhs.z_min)
    z_hi = min(lhs.z_cap, rhs.z_cap, -n0 + J + 1)
    t_lo = max(lhs.tau_min, rhs.tau_min)
    t_hi = min(lhs.tau_cap, rhs.tau_cap, I + 1)
    if z_hi <= z_lo or t_hi <= t_lo:
        raise ValueError("insufficient precision for the requested window")
    residual = bi_sub(bi_truncate(lhs, z_lo, z_hi, t_lo, t_hi),
                      bi_truncate(rhs, z_lo, z_hi, t_lo, t_hi))
    return GenFunReport(p, k, variant, (J, I), residual, bi_is_zero(residual))


def denominator_difference_is_constant(p, prec_cap=60):
    """f_{0,2} - g_{0,2} is a constant series (their principal parts and
    all positive-order coefficients agree)."""
    f = weak_basis(p, 0, "M", 2, prec_cap).element(2)
    g = weak_basis(p, 0, "S", 2, prec_cap).element(2)
    d = qs_sub(f, g)
    tail = qs_truncate(d, 1, min(f.prec_cap, g.prec_cap))
    head = qs_truncate(d, d.min_exp, 0)
    return qs_is_zero(tail) and qs_is_zero(head)


def recurrence_check(p, k, n):
    """Verify the gap-case recurrence expressing f_{k,n+2}(tau) through
    f(tau) f_{k,n}(tau), lower basis elements, and duality coefficients
    of the weight-(2-k) S-side elements.  Requires the gap case and
    n >= -n0 with n != -n0 + 1."""
    params = genfun_params(p, k)
    if not params.gap_case:
        raise ValueError("recurrence_check requires the gap case")
    n0 = params.n0
    if n < -n0 or n == -n0 + 1:
        raise ValueError("index outside the recurrence domain")
    prec = n + n0 + 12
    basis_m = weak_basis(p, k, "M", max(n + 2, -n0 + 3), prec)
    basis_s = weak_basis(p, 2 - k, "S", n0 + 2, n + 2)
    f = weak_basis(p, 0, "M", 2, prec + n + n0 + 4).element(2)

    def a(i):
        return qs_coeff(f, i)

    def b(mp, nn):
        return coefficient(basis_s, mp, nn)

    fk = basis_m.element
    rhs = qs_mul(f, fk(n))
    rhs = qs_sub(rhs, qs_scale(fk(-n0), a(n + n0)))
    for i in range(-1, n + n0 - 1):
        if a(i):
            rhs = qs_sub(rhs, qs_scale(fk(n - i), a(i)))
    a_m1, a_p1 = params.a_coeffs
    bn = b(n0 - 1, n)
    rhs = rhs + qs_scale(fk(-n0 + 3), bn) + qs_scale(fk(-n0 + 2), a_m1 * bn)
    c0 = b(n0 + 2, n) + a_m1 * b(n0 + 1, n) + a_p1 * bn
    rhs = rhs + qs_scale(fk(-n0), c0)
    lhs = fk(n + 2)
    lo = max(lhs.min_exp, rhs.min_exp)
    hi = min(lhs.prec_cap, rhs.prec_cap)
    if hi <= lo + 3:
        raise ValueError("insufficient precision for the recurrence window")
    return qs_is_zero(qs_sub(qs_truncate(lhs, lo, hi),
                             qs_truncate(rhs, lo, hi)))
