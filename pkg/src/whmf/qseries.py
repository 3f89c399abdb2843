"""Exact truncated Laurent series in q with rational coefficients.

A QSeries tracks coefficients on a half-open exponent window
[min_exp, prec_cap).  Coefficients below min_exp are exactly zero;
coefficients at or above prec_cap are unknown (not zero).  All
arithmetic is exact over the rationals; precision windows shrink
pessimistically under each operation and are never padded.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QSeries:
    """Dense truncated Laurent series: coeffs[i] is the coefficient of
    q^(min_exp + i); the window is [min_exp, prec_cap)."""
    min_exp: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("empty coefficient window")
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(c) for c in self.coeffs))

    @property
    def prec_cap(self):
        return self.min_exp + len(self.coeffs)

    def __add__(self, other):
        return qs_add(self, other)

    def __sub__(self, other):
        return qs_add(self, qs_neg(other))

    def __neg__(self):
        return qs_neg(self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return qs_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*q^%d" % (c, self.min_exp + i))
            if len(terms) > 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return "QSeries(%s + O(q^%d))" % (body, self.prec_cap)


def qs_from_coeffs(min_exp, coeffs):
    return QSeries(min_exp, tuple(coeffs))


def qs_constant(c, prec_cap):
    """The constant series c on the window [0, prec_cap)."""
    coeffs = [Fraction(0)] * prec_cap
    coeffs[0] = Fraction(c)
    return QSeries(0, tuple(coeffs))


def qs_monomial(c, n, prec_cap):
    """c * q^n on the window [n, prec_cap)."""
    coeffs = [Fraction(0)] * (prec_cap - n)
    coeffs[0] = Fraction(c)
    return QSeries(n, tuple(coeffs))


def qs_coeff(a, n):
    """Exact coefficient of q^n; errors outside the tracked window."""
    if n < a.min_exp or n >= a.prec_cap:
        raise ValueError("coefficient not computed at this precision")
    return a.coeffs[n - a.min_exp]


def qs_add(a, b):
    """Coefficientwise sum on the intersection window."""
    lo = min(a.min_exp, b.min_exp)
    hi = min(a.prec_cap, b.prec_cap)
    if hi <= lo:
        raise ValueError("incompatible precision windows")
    out = []
    for n in range(lo, hi):
        c = Fraction(0)
        if a.min_exp <= n < a.prec_cap:
            c += a.coeffs[n - a.min_exp]
        if b.min_exp <= n < b.prec_cap:
            c += b.coeffs[n - b.min_exp]
        out.append(c)
    return QSeries(lo, tuple(out))


def qs_neg(a):
    return QSeries(a.min_exp, tuple(-c for c in a.coeffs))


def qs_sub(a, b):
    return qs_add(a, qs_neg(b))


def qs_scale(a, c):
    c = Fraction(c)
    return QSeries(a.min_exp, tuple(c * x for x in a.coeffs))


def qs_mul(a, b):
    """Cauchy convolution with pessimistic window bookkeeping."""
    lo = a.min_exp + b.min_exp
    hi = min(a.min_exp + b.prec_cap, b.min_exp + a.prec_cap)
    out = [Fraction(0)] * (hi - lo)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        base = a.min_exp + i + b.min_exp - lo
        for j, bj in enumerate(b.coeffs):
            k = base + j
            if k >= len(out):
                break
            if bj:
                out[k] += ai * bj
    return QSeries(lo, tuple(out))


def qs_inv(a):
    """Multiplicative inverse; requires a unit leading coefficient."""
    if not a.coeffs[0]:
        raise ValueError("non-invertible series")
    n = len(a.coeffs)
    lead = a.coeffs[0]
    out = [Fraction(0)] * n
    out[0] = 1 / lead
    for i in range(1, n):
        s = Fraction(0)
        for j in range(1, i + 1):
            if a.coeffs[j]:
                s += a.coeffs[j] * out[i - j]
        out[i] = -s / lead
    return QSeries(-a.min_exp, tuple(out))


def qs_div(a, b):
    return qs_mul(a, qs_inv(b))


def qs_pow(a, e):
    """Integer power by repeated squaring (negative e via qs_inv)."""
    if e < 0:
        return qs_pow(qs_inv(a), -e)
    result = None
    base = a
    if e == 0:
        return qs_constant(1, len(a.coeffs))
    while e:
        if e & 1:
            result = base if result is None else qs_mul(result, base)
        e >>= 1
        if e:
            base = qs_mul(base, base)
    return result


def qs_vop(a, d):
    """The substitution q -> q^d (V_d operator); exponent n maps to d*n,
    intermediate exponents are exactly zero."""
    if d < 1:
        raise ValueError("vop requires d >= 1")
    lo = d * a.min_exp
    hi = d * a.prec_cap
    out = [Fraction(0)] * (hi - lo)
    for i, c in enumerate(a.coeffs):
        out[d * (a.min_exp + i) - lo] = c
    return QSeries(lo, tuple(out))


def qs_truncate(a, lo=None, hi=None):
    """Restrict to a subwindow [lo, hi) of the tracked window; exponents
    between lo and min_exp are filled with exact zeros."""
    if lo is None:
        lo = a.min_exp
    if hi is None:
        hi = a.prec_cap
    if hi > a.prec_cap:
        raise ValueError("coefficient not computed at this precision")
    if hi <= lo:
        raise ValueError("incompatible precision windows")
    out = []
    for n in range(lo, hi):
        if n < a.min_exp:
            out.append(Fraction(0))
        else:
            out.append(a.coeffs[n - a.min_exp])
    return QSeries(lo, tuple(out))


def qs_valuation(a):
    """Exponent of the first nonzero tracked coefficient, or None if the
    series is identically zero on its window (valuation unknown >= cap)."""
    for i, c in enumerate(a.coeffs):
        if c:
            return a.min_exp + i
    return None


def qs_is_zero(a):
    return all(not c for c in a.coeffs)


def qs_eq(a, b):
    """Exact equality of coefficients on the common window."""
    return qs_is_zero(qs_sub(a, b))


# ---------------------------------------------------------------------------
# Two-variable carrier: outer variable q_z, rows are QSeries in q_tau.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiSeries:
    """rows[i] is the q_tau-series coefficient of q_z^(z_min + i); all rows
    share one tau-window."""
    z_min: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) < 1:
            raise ValueError("empty z window")
        tw = (self.rows[0].min_exp, self.rows[0].prec_cap)
        for r in self.rows:
            if (r.min_exp, r.prec_cap) != tw:
                raise ValueError("incompatible precision windows")

    @property
    def z_cap(self):
        return self.z_min + len(self.rows)

    @property
    def tau_min(self):
        return self.rows[0].min_exp

    @property
    def tau_cap(self):
        return self.rows[0].prec_cap


def bi_combine(rows_by_exp):
    """Build a BiSeries from a mapping z-exponent -> QSeries; gaps in the
    exponent range become zero rows on the shared tau-window."""
    if not rows_by_exp:
        raise ValueError("empty z window")
    lo = min(rows_by_exp)
    hi = max(rows_by_exp) + 1
    # coefficients below a row's min_exp are exact zeros, so the shared
    # window may extend down to the deepest row pole
    tmin = min(r.min_exp for r in rows_by_exp.values())
    tcap = min(r.prec_cap for r in rows_by_exp.values())
    if tcap <= tmin:
        raise ValueError("incompatible precision windows")
    zero = QSeries(tmin, tuple(Fraction(0) for _ in range(tcap - tmin)))
    rows = []
    for m in range(lo, hi):
        if m in rows_by_exp:
            rows.append(qs_truncate(rows_by_exp[m], tmin, tcap))
        else:
            rows.append(zero)
    return BiSeries(lo, tuple(rows))


def bi_mul(F, s):
    """Multiply by a QSeries s acting in the z variable (z-convolution of
    rows with the scalar coefficients of s)."""
    lo = F.z_min + s.min_exp
    hi = min(F.z_min + s.prec_cap, s.min_exp + F.z_cap)
    if hi <= lo:
        raise ValueError("incompatible precision windows")
    zero = qs_scale(F.rows[0], 0)
    out = [zero] * (hi - lo)
    for j, c in enumerate(s.coeffs):
        if not c:
            continue
        for i, row in enumerate(F.rows):
            k = (F.z_min + i) + (s.min_exp + j) - lo
            if 0 <= k < len(out):
                out[k] = qs_add(out[k], qs_scale(row, c))
    return BiSeries(lo, tuple(out))


def bi_scale_rows(F, s_tau):
    """Multiply every row by a fixed q_tau-series (an operator acting in
    the tau variable); the shared tau-window shrinks per qs_mul."""
    rows = tuple(qs_mul(r, s_tau) for r in F.rows)
    return BiSeries(F.z_min, rows)


def bi_sub(F, G):
    lo = min(F.z_min, G.z_min)
    hi = min(F.z_cap, G.z_cap)
    if hi <= lo:
        raise ValueError("incompatible precision windows")
    tmin = max(F.tau_min, G.tau_min)
    tcap = min(F.tau_cap, G.tau_cap)
    if tcap <= tmin:
        raise ValueError("incompatible precision windows")
    zero = QSeries(tmin, tuple(Fraction(0) for _ in range(tcap - tmin)))
    rows = []
    for m in range(lo, hi):
        r = zero
        if F.z_min <= m < F.z_cap:
            r = qs_add(r, qs_truncate(F.rows[m - F.z_min], tmin, tcap))
        if G.z_min <= m < G.z_cap:
            r = qs_sub(r, qs_truncate(G.rows[m - G.z_min], tmin, tcap))
        rows.append(r)
    return BiSeries(lo, tuple(rows))


def bi_row(F, m):
    """The q_tau-series coefficient of q_z^m."""
    if m < F.z_min or m >= F.z_cap:
        raise ValueError("coefficient not computed at this precision")
    return F.rows[m - F.z_min]


def bi_is_zero(F):
    return all(qs_is_zero(r) for r in F.rows)


def bi_truncate(F, z_lo, z_hi, t_lo=None, t_hi=None):
    """Restrict a BiSeries to a z-subwindow (and optionally tau-subwindow)."""
    if z_lo < F.z_min or z_hi > F.z_cap or z_hi <= z_lo:
        raise ValueError("incompatible precision windows")
    rows = tuple(qs_truncate(r, t_lo, t_hi)
                 for r in F.rows[z_lo - F.z_min:z_hi - F.z_min])
    return BiSeries(z_lo, rows)


# ---------------------------------------------------------------------------
# Serialization helpers (rationals as "num/den" strings, "den" omitted at 1).
# ---------------------------------------------------------------------------

def rat_str(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def qs_json(a):
    return {"minExp": a.min_exp,
            "precCap": a.prec_cap,
            "coeffs": [rat_str(c) for c in a.coeffs]}
