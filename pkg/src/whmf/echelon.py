"""Reduced row echelon form for collections of truncated q-series.

Pivot ordering is by increasing q-order; each retained element is monic at
its pivot order and fully reduced above and below (coefficient 0 at every
other pivot order).

Rows are held internally as primitive integer vectors (content removed
after every elimination), so row operations are fraction-free; division by
the pivot entry happens once, on extraction.
"""

from fractions import Fraction
from math import gcd, isqrt

from gmpy2 import mpz, gcd as zgcd

from .qseries import QSeries, qs_truncate


def common_window(series_list):
    lo = min(s.min_exp for s in series_list)
    hi = min(s.prec_cap for s in series_list)
    if hi <= lo:
        raise ValueError("incompatible precision windows")
    return lo, hi


_Z0 = mpz(0)
_Z1 = mpz(1)


def _primitive(nums):
    g = _Z0
    for a in nums:
        if a:
            g = zgcd(g, a)
            if g == _Z1:
                return nums
    if g > 1:
        nums = [a // g for a in nums]
    return nums


class Echelonizer:
    """Incrementally maintained reduced row echelon basis on a fixed
    exponent window."""

    def __init__(self, lo, hi):
        if hi <= lo:
            raise ValueError("incompatible precision windows")
        self.lo = lo
        self.hi = hi
        self._pivots = {}   # pivot index (0-based in window) -> int row

    @property
    def rank(self):
        return len(self._pivots)

    def _eliminate(self, a, v, b):
        """beta * a - a[v] * b where beta = b[v], made primitive; clears
        position v of a."""
        beta = b[v]
        c = a[v]
        return _primitive([beta * x - c * y for x, y in zip(a, b)])

    def insert(self, s):
        """Reduce s against the basis and adjoin it if independent.
        Returns True if the rank grew."""
        s = qs_truncate(s, self.lo, self.hi)
        den = 1
        for c in s.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = _primitive([mpz(c.numerator * (den // c.denominator))
                           for c in s.coeffs])
        i = 0
        n = len(nums)
        while True:
            while i < n and not nums[i]:
                i += 1
            if i == n:
                return False
            if i not in self._pivots:
                break
            nums = self._eliminate(nums, i, self._pivots[i])
        # also reduce at pivot positions to the right of the new pivot
        for w in sorted(self._pivots):
            if w > i and nums[w]:
                nums = self._eliminate(nums, w, self._pivots[w])
        if nums[i] < 0:
            nums = [-a for a in nums]
        for w, bw in list(self._pivots.items()):
            if bw[i]:
                row = self._eliminate(bw, i, nums)
                if row[w] < 0:
                    row = [-a for a in row]
                self._pivots[w] = row
        self._pivots[i] = nums
        return True

    def basis(self):
        """(elements, pivots) ordered by increasing pivot q-order."""
        orders = sorted(self._pivots)
        elements = []
        for v in orders:
            nums = self._pivots[v]
            beta = nums[v]
            elements.append(QSeries(
                self.lo, tuple(Fraction(int(a), int(beta)) for a in nums)))
        return (tuple(elements), tuple(self.lo + v for v in orders))


def echelonize(series_list):
    """Return (elements, pivots): the reduced row echelon basis of the span
    of the given series on their common window, ordered by pivot q-order.
    Series that reduce to zero on the window are dropped."""
    if not series_list:
        return (), ()
    lo, hi = common_window(series_list)
    ech = Echelonizer(lo, hi)
    for s in series_list:
        ech.insert(s)
    return ech.basis()


# ---------------------------------------------------------------------------
# Multi-modular reduced row echelon form for integer matrices.
#
# Dense exact elimination suffers from intermediate coefficient blowup, so
# large integer matrices are echelonized modulo several word-size primes,
# combined by CRT, lifted to rationals by rational reconstruction, and then
# certified exactly: the certificate (each generator reduces to zero against
# the lifted rows, which are monic at strictly increasing pivots) pins the
# result as *the* reduced echelon basis of the span, so the modular phase
# never has to be trusted.
# ---------------------------------------------------------------------------

from gmpy2 import mpq, invert as zinvert


def _is_probable_prime(n):
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_stream(start=(1 << 62) - 57):
    q = start
    while True:
        if _is_probable_prime(q):
            yield q
        q -= 2


class ModRankTracker:
    """Incremental row echelon form modulo a word-size prime.  The mod-q
    rank is a lower bound for the rational rank, so rows accepted here are
    certainly independent over the rationals."""

    def __init__(self, q):
        self.q = q
        self._piv = {}

    @property
    def rank(self):
        return len(self._piv)

    def insert(self, row):
        """True iff row is independent (mod q) of everything seen so far."""
        q = self.q
        r = [x % q for x in row]
        n = len(r)
        i = 0
        while True:
            while i < n and not r[i]:
                i += 1
            if i == n:
                return False
            if i not in self._piv:
                inv = int(zinvert(r[i], q))
                self._piv[i] = [x * inv % q for x in r]
                return True
            c = r[i]
            b = self._piv[i]
            r = [(x - c * y) % q for x, y in zip(r, b)]


def _rref_mod(rows, q):
    """Reduced row echelon form of integer rows modulo q.
    Returns (pivots tuple, list of monic reduced rows mod q)."""
    piv = {}
    n = len(rows[0])
    for row in rows:
        r = [x % q for x in row]
        i = 0
        while True:
            while i < n and not r[i]:
                i += 1
            if i == n:
                break
            if i in piv:
                c = r[i]
                b = piv[i]
                r = [(x - c * y) % q for x, y in zip(r, b)]
                continue
            inv = int(zinvert(r[i], q))
            r = [x * inv % q for x in r]
            for w, bw in piv.items():
                c = bw[i]
                if c:
                    piv[w] = [(x - c * y) % q for x, y in zip(bw, r)]
            piv[i] = r
            break
    orders = sorted(piv)
    return tuple(orders), [piv[v] for v in orders]


def _rat_reconstruct(c, Q, bound):
    """Find a/b = c mod Q with |a|, b <= bound, b invertible mod Q, via
    the half-extended Euclidean algorithm; None if there is none."""
    r0, r1 = Q, c % Q
    t0, t1 = 0, 1
    while r1 > bound:
        s = r0 // r1
        r0, r1 = r1, r0 - s * r1
        t0, t1 = t1, t0 - s * t1
    if abs(t1) > bound or r1 == 0 and t1 == 0:
        return None
    from math import gcd as _g
    if _g(r1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return Fraction(-r1, -t1)
    return Fraction(r1, t1)


def rref_int(rows):
    """Exact reduced row echelon form of a list of integer rows, via the
    certified multi-modular method.  Returns (pivots, rows of Fractions)."""
    stream = _prime_stream()
    used = []            # (q, pivots, rows mod q)
    candidate = None
    while True:
        for _ in range(3):
            q = next(stream)
            used.append((q, _rref_mod(rows, q)))
        # the correct pivot set has maximal rank and lexicographically
        # smallest pivots; primes disagreeing with it are unlucky
        best = min((pr[1][0] for pr in used),
                   key=lambda t: (-len(t), t))
        good = [(q, res) for q, res in used if res[0] == best]
        Q = 1
        for q, _res in good:
            Q *= q
        bound = isqrt(Q // 2)
        if bound < 4:
            continue
        # CRT combine and lift
        lifted = []
        ok = True
        for i in range(len(best)):
            row = []
            for j in range(len(rows[0])):
                c, mod = 0, 1
                for q, res in good:
                    rj = res[1][i][j]
                    h = ((rj - c) * pow(mod, -1, q)) % q
                    c += mod * h
                    mod *= q
                f = _rat_reconstruct(c, Q, bound)
                if f is None:
                    ok = False
                    break
                row.append(f)
            if not ok:
                break
            lifted.append(row)
        if ok and _certify_rref(rows, best, lifted):
            return best, lifted


def _certify_rref(rows, pivots, lifted):
    """Exact certificate: lifted rows are monic at strictly increasing
    pivot positions, reduced at one another's pivots, and every generator
    row reduces to zero against them."""
    for i, v in enumerate(pivots):
        if lifted[i][v] != 1:
            return False
        if any(lifted[i][w] != 0 for j, w in enumerate(pivots) if j != i):
            return False
        if any(lifted[i][w] != 0 for w in range(v)):
            return False
    basis = [[mpq(x) for x in r] for r in lifted]
    for g in rows:
        res = [mpq(x) for x in g]
        for i, v in enumerate(pivots):
            c = res[v]
            if c:
                b = basis[i]
                res = [x - c * y for x, y in zip(res, b)]
        if any(res):
            return False
    return True
