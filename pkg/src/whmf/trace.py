"""Traces of Hecke operators on S_k(Gamma_0(p)) and cusp-space generation.

The trace of T_n is assembled from identity, elliptic, hyperbolic and
(weight 2) divisor correction terms.  The elliptic term sums Gegenbauer-type
polynomial values against Hurwitz class numbers weighted by a local
embedding factor at p.  For n divisible by p the operator is U_p^a T_m and
its trace is computed through the oldform/newform splitting: the oldform
block contributes level-1 traces, and the twisted newform trace reduces to
a class-number sum over p-divisible traces t of the quadratic forms
x^2 - t x + n.

The sign and normalization conventions were fixed by validating every
branch against exact oracles: Tr T_1 = dim S_k(Gamma_0(p)) for all primes
5 <= p <= 37 and even 2 <= k <= p - 1, and the full Hecke eigenvalue
sequences of the one-dimensional spaces S_2(Gamma_0(11)),
S_4(Gamma_0(5)), S_6(Gamma_0(5)) and S_4(Gamma_0(7)) (eta-product /
multiplicativity oracles).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, gcd, comb

from .qseries import QSeries


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def _legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _vp(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


# batched table of 6 * (weighted primitive class number) for 0 <= D < bound,
# filled by one pass over all reduced primitive forms (a, b, c)
_class6 = [None, 0]
_class6_bound = [2]


def _extend_class_table(bound):
    """Enumerate reduced primitive forms with 4ac - b^2 < bound once,
    so individual lookups are O(1)."""
    old = _class6_bound[0]
    if bound <= old:
        return
    table = _class6[0] if _class6[0] is not None else []
    table.extend([0] * (bound - len(table)))
    for a in range(1, isqrt((bound - 1) // 3) + 1):
        a4 = 4 * a
        for b in range(-a + 1, a + 1):
            g_ab = gcd(a, b)
            bb = b * b
            # need 4ac - b^2 in [old, bound) with c >= a; the c_lo clamp
            # keeps D >= old automatically
            c_lo = max(a, -((-(old + bb)) // a4))
            c_hi = (bound - 1 + bb) // a4
            D = a4 * c_lo - bb
            if b < 0:
                for c in range(c_lo, c_hi + 1):
                    if a != c and (g_ab == 1 or gcd(g_ab, c) == 1):
                        table[D] += 6 if D > 4 else (2 if D == 3 else 3)
                    D += a4
            elif g_ab == 1:
                for c in range(c_lo, c_hi + 1):
                    table[D] += 6 if D > 4 else (2 if D == 3 else 3)
                    D += a4
            else:
                for c in range(c_lo, c_hi + 1):
                    if gcd(g_ab, c) == 1:
                        table[D] += 6 if D > 4 else (2 if D == 3 else 3)
                    D += a4
    _class6[0] = table
    _class6_bound[0] = bound


def class_number_weighted(D):
    """Weighted count of reduced *primitive* positive binary quadratic
    forms of discriminant -D: forms equivalent to a(x^2+y^2) count 1/2,
    forms equivalent to a(x^2+xy+y^2) count 1/3."""
    if D == 0:
        return Fraction(-1, 12)
    if D % 4 not in (0, 3):
        return Fraction(0)
    if D >= _class6_bound[0]:
        _extend_class_table(max(D + 1, 2 * _class6_bound[0], 4096))
    return Fraction(_class6[0][D], 6)


# smallest-prime-factor sieve for fast factorization of discriminants
_spf = [[0, 1]]


def _extend_spf(bound):
    if bound <= len(_spf[0]):
        return
    n = bound
    spf = list(range(n))
    for i in range(2, isqrt(n - 1) + 1):
        if spf[i] == i:
            for j in range(i * i, n, i):
                if spf[j] == j:
                    spf[j] = i
    _spf[0] = spf


def _square_divisors(m):
    """All f >= 1 with f^2 | m, from the prime factorization of m."""
    if m >= len(_spf[0]):
        _extend_spf(max(m + 1, 2 * len(_spf[0]), 4096))
    spf = _spf[0]
    fs = [1]
    while m > 1:
        q = spf[m]
        e = 0
        while m % q == 0:
            m //= q
            e += 1
        half = e // 2
        if half:
            qp = [q ** j for j in range(half + 1)]
            fs = [f * x for f in fs for x in qp]
    return fs


@lru_cache(maxsize=None)
def _hurwitz12(m):
    """12 * H(m) as an integer (the hot-loop representation)."""
    if m == 0:
        return -1
    if m % 4 not in (0, 3):
        return 0
    if m >= _class6_bound[0]:
        _extend_class_table(max(m + 1, 2 * _class6_bound[0], 4096))
    table = _class6[0]
    total = 0
    for f in _square_divisors(m):
        total += table[m // (f * f)]
    return 2 * total


def hurwitz(m):
    """Hurwitz class number H(m): weighted count of *all* reduced positive
    binary quadratic forms of discriminant -m; H(0) = -1/12."""
    if m < 0:
        raise ValueError("hurwitz requires m >= 0")
    return Fraction(_hurwitz12(m), 12)


def gegenbauer_pk(k, t, n):
    """Coefficient of x^(k-2) in 1/(1 - t x + n x^2) (degree-(k-2)
    Gegenbauer-type polynomial), by the three-term recurrence."""
    g0, g1 = 1, t
    if k == 2:
        return g0
    for _ in range(k - 3):
        g0, g1 = g1, t * g1 - n * g0
    return g1


@lru_cache(maxsize=None)
def _pk_binomials(k):
    """(-1)^j binom(k-2-j, j) for j = 0 .. (k-2)//2: the coefficients of
    P_k(t, n) = sum_j (-1)^j binom(k-2-j, j) n^j t^(k-2-2j)."""
    return tuple((-1) ** j * comb(k - 2 - j, j)
                 for j in range((k - 2) // 2 + 1))


def _pk_row(k, n):
    """For fixed n, the coefficients d_j = (-1)^j binom(k-2-j,j) n^j, so
    that P_k(t, n) = sum_j d_j (t^2)^(J-j) for even k (Horner in t^2)."""
    out = []
    pw = 1
    for c in _pk_binomials(k):
        out.append(c * pw)
        pw *= n
    return out


def _pk_eval(row, tt):
    """Horner evaluation of a _pk_row at u = t^2."""
    acc = row[0]
    for d in row[1:]:
        acc = acc * tt + d
    return acc


def _embedding_factor(p, order_disc, conductor_rho):
    """Local factor at p for the elliptic term: the number of optimal
    embeddings of the quadratic order of the given discriminant into a
    fixed index-p suborder, up to conjugation.  Depends only on whether p
    divides the order's conductor, else on the Kronecker symbol of the
    discriminant at p."""
    if conductor_rho:
        return 2
    return 1 + _legendre(order_disc, p)


@lru_cache(maxsize=None)
def _local_class_sum6(p, disc):
    """6 * (sum over orders of discriminant disc/f^2 of the weighted class
    number times the local embedding factor at p), as an integer."""
    if -disc >= _class6_bound[0]:
        _extend_class_table(max(-disc + 1, 2 * _class6_bound[0], 4096))
    table = _class6[0]
    inner = 0
    for f in _square_divisors(-disc):
        d2 = disc // (f * f)
        if d2 % 4 in (0, 1):
            e = _vp(-d2, p) if d2 % p == 0 else 0
            # p divides the conductor of the order of disc d2 iff
            # v_p(d2) >= 2 (p odd, so fundamental discs have v_p <= 1)
            inner += table[-d2] * \
                _embedding_factor(p, d2, 1 if e >= 2 else 0)
    return inner


def _elliptic_sum(p, k, n):
    """Sum over t^2 < 4n of P_k(t,n) times class numbers weighted by the
    local embedding factor at p (n coprime to p).  P_k(-t,n) = P_k(t,n)
    for even k, so only t >= 0 is enumerated."""
    total = 0
    tmax = isqrt(4 * n - 1)
    row = _pk_row(k, n)
    n4 = 4 * n
    for t in range(0, tmax + 1):
        inner = _local_class_sum6(p, t * t - n4)
        if inner:
            term = _pk_eval(row, t * t) * inner
            total += term if t == 0 else 2 * term
    return Fraction(total, 12)


@lru_cache(maxsize=None)
def trace_level1(k, n):
    """Trace of T_n on the level-1 cusp space S_k(SL_2(Z)); zero for k = 2."""
    if k == 2:
        return Fraction(0)
    elliptic12 = 0
    tmax = isqrt(4 * n)
    row = _pk_row(k, n)
    for t in range(0, tmax + 1):
        h12 = _hurwitz12(4 * n - t * t)
        if h12:
            term = _pk_eval(row, t * t) * h12
            elliptic12 += term if t == 0 else 2 * term
    hyperbolic = sum(min(d, n // d) ** (k - 1) for d in _divisors(n))
    return Fraction(-elliptic12, 24) - Fraction(hyperbolic, 2)


def _trace_coprime(p, k, n):
    """Trace of T_n on S_k(Gamma_0(p)) for gcd(n, p) = 1."""
    identity = Fraction(0)
    r = isqrt(n)
    if r * r == n:
        identity = Fraction(k - 1, 12) * (p + 1) * Fraction(n) ** (k // 2 - 1)
    elliptic = _elliptic_sum(p, k, n)
    hyperbolic = sum(min(d, n // d) ** (k - 1) for d in _divisors(n))
    weight2 = sum(_divisors(n)) if k == 2 else 0
    return identity - elliptic - hyperbolic + weight2


def _trace_new_twisted(p, k, m):
    """Sum over newforms g of a_g(p) a_g(m) for gcd(m, p) = 1: a class
    number sum restricted to p-divisible traces t (for weight 2 the
    Eisenstein contribution sigma_1(m) is removed)."""
    total12 = 0
    tmax = isqrt(4 * p * m - 1)
    row = _pk_row(k, p * m)
    for t in range(0, tmax + 1, p):
        h12 = _hurwitz12(4 * p * m - t * t)
        if h12:
            term = _pk_eval(row, t * t) * h12
            total12 += term if t == 0 else 2 * term
    total = Fraction(total12, 24)
    if k == 2:
        total -= sum(_divisors(m))
    return total


@lru_cache(maxsize=None)
def trace_tn(p, k, n):
    """Trace of the n-th Hecke operator on S_k(Gamma_0(p))."""
    if p <= 3:
        raise ValueError("trace_tn requires prime p > 3")
    if k < 2 or k % 2:
        raise ValueError("trace_tn requires even k >= 2")
    if n < 1:
        raise ValueError("trace_tn requires n >= 1")
    a = _vp(n, p)
    if a == 0:
        return _trace_coprime(p, k, n)
    m = n // p ** a
    # oldform block: level-1 traces of T_{p^a m} and T_{p^{a-2} m}
    old = trace_level1(k, n)
    if a >= 2:
        old -= Fraction(p) ** (k - 1) * trace_level1(k, n // (p * p))
    # newform block: U_p acts with eigenvalue a_g(p), a_g(p)^2 = p^{k-2}
    if a % 2 == 0:
        s_m = _trace_coprime(p, k, m) - 2 * trace_level1(k, m)
        new = Fraction(p) ** ((k - 2) * a // 2) * s_m
    else:
        new = Fraction(p) ** ((k - 2) * (a - 1) // 2) * \
            _trace_new_twisted(p, k, m)
    return old + new


@lru_cache(maxsize=None)
def trace_product(p, k, m, n):
    """Trace of T_m T_n via T_m T_n = sum over d | gcd(m,n), gcd(d,p) = 1
    of d^(k-1) T_{mn/d^2}."""
    total = Fraction(0)
    for d in _divisors(gcd(m, n)):
        if d % p == 0:
            continue
        total += Fraction(d) ** (k - 1) * trace_tn(p, k, m * n // (d * d))
    return total


@dataclass(frozen=True)
class TraceTable:
    """Immutable table of Tr T_n on S_k(Gamma_0(p)) for n = 1..N."""
    p: int
    k: int
    traces: tuple

    @classmethod
    def build(cls, p, k, n_max):
        return cls(p, k, tuple(trace_tn(p, k, n) for n in range(1, n_max + 1)))

    def trace(self, n):
        return self.traces[n - 1]


def cusp_space(p, k, prec_cap):
    """Reduced row echelon basis of S_k(Gamma_0(p)) on [1, prec_cap),
    generated by the trace series g_m = sum_n Tr(T_m T_n) q^n for
    m = 1, 2, 3, ... until the rank reaches dim S_k(Gamma_0(p)).

    Generator independence is tracked modulo a word-size prime (a rank
    lower bound, so accepted generators are certainly independent); the
    final reduced echelon basis comes from the certified multi-modular
    elimination.  Returns (elements, pivots)."""
    from .spaces import dim_S
    from .echelon import ModRankTracker, rref_int
    target = dim_S(p, k)
    if target == 0:
        return (), ()
    q0 = (1 << 62) - 57
    tracker = ModRankTracker(q0)
    gens = []
    stall = 0
    m = 0
    while len(gens) < target:
        m += 1
        coeffs = [trace_product(p, k, m, n) for n in range(1, prec_cap)]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        row = [int(c * den) for c in coeffs]
        if tracker.insert(row):
            gens.append(row)
            stall = 0
        else:
            stall += 1
            if stall >= 2 * target:
                raise ValueError(
                    "cusp space generation failed (rank %d of %d at p=%d, "
                    "k=%d)" % (len(gens), target, p, k))
    pivots0, lifted = rref_int(gens)
    elements = tuple(QSeries(1, tuple(r)) for r in lifted)
    return elements, tuple(1 + v for v in pivots0)
