"""Classical building blocks: Dedekind eta quotients, level-1 Eisenstein
series, Delta, the level-p form Delta_p, and the level-p Eisenstein series.

All expansions are exact QSeries values.  Eta products are expanded with
Euler's pentagonal-number theorem; Bernoulli numbers by the recursive
convolution identity.
"""

from fractions import Fraction
from dataclasses import dataclass
from math import comb

from .qseries import (QSeries, qs_add, qs_scale, qs_mul, qs_pow, qs_vop,
                      qs_sub, qs_from_coeffs)

_bernoulli_cache = {0: Fraction(1)}


def bernoulli(k):
    """Exact Bernoulli number B_k (B_1 = -1/2 convention)."""
    if k in _bernoulli_cache:
        return _bernoulli_cache[k]
    for m in range(max(_bernoulli_cache) + 1, k + 1):
        s = Fraction(0)
        for j in range(m):
            s += comb(m + 1, j) * _bernoulli_cache[j]
        _bernoulli_cache[m] = -s / (m + 1)
    return _bernoulli_cache[k]


def sigma(n, k):
    """Divisor power sum sigma_k(n)."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


def eisenstein(k, prec_cap):
    """Level-1 Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise ValueError("eisenstein requires even k >= 4")
    factor = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)]
    for n in range(1, prec_cap):
        coeffs.append(factor * sigma(n, k - 1))
    return QSeries(0, tuple(coeffs))


def eisenstein2(prec_cap):
    """Quasi-modular E_2 = 1 - 24 sum sigma_1(n) q^n.  Only consumed inside
    eisenstein_level_p, where the combination p E_2(pz) - E_2(z) is modular;
    deliberately not exported as a modular form."""
    coeffs = [Fraction(1)]
    for n in range(1, prec_cap):
        coeffs.append(Fraction(-24 * sigma(n, 1)))
    return QSeries(0, tuple(coeffs))


def eisenstein_level_p(k, p, prec_cap):
    """E_{k,p} = (p E_k(pz) - E_k(z)) / (p - 1), constant term 1."""
    if k < 2 or k % 2:
        raise ValueError("eisenstein_level_p requires even k >= 2")
    ek = eisenstein2(prec_cap) if k == 2 else eisenstein(k, prec_cap)
    combo = qs_sub(qs_scale(qs_vop(ek, p), p), ek)
    return qs_scale(combo, Fraction(1, p - 1))


@dataclass(frozen=True)
class EtaQuotient:
    """prod_d eta(d z)^{r_d}, given as a tuple of (d, r) factors.  Only
    quotients with integral weight and integral leading exponent are
    supported here."""
    factors: tuple

    @property
    def weight2(self):
        return sum(r for _, r in self.factors)

    @property
    def lead24(self):
        return sum(d * r for d, r in self.factors)

    def __post_init__(self):
        if self.weight2 % 2 or self.lead24 % 24:
            raise ValueError("fractional eta quotient unsupported")


def _euler_product(d, n_terms):
    """prod_{n>=1} (1 - q^{dn}) on [0, n_terms) via pentagonal numbers."""
    coeffs = [Fraction(0)] * n_terms
    coeffs[0] = Fraction(1)
    j = 1
    while d * (j * (3 * j - 1) // 2) < n_terms:
        sign = Fraction((-1) ** j)
        for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if d * g < n_terms:
                coeffs[d * g] += sign
        j += 1
    return QSeries(0, tuple(coeffs))


def eta_quotient_expand(eq, prec_cap):
    """Expand an EtaQuotient as a QSeries on [lead, prec_cap) where
    lead = (1/24) sum d r_d."""
    if not isinstance(eq, EtaQuotient):
        eq = EtaQuotient(tuple(eq))
    lead = eq.lead24 // 24
    n_terms = prec_cap - lead
    if n_terms < 1:
        raise ValueError("incompatible precision windows")
    prod = QSeries(0, tuple([Fraction(1)] + [Fraction(0)] * (n_terms - 1)))
    for d, r in eq.factors:
        prod = qs_mul(prod, qs_pow(_euler_product(d, n_terms), r))
    return qs_from_coeffs(lead, prod.coeffs)


def delta(prec_cap):
    """Delta = eta(z)^24 = q - 24q^2 + 252q^3 - ..."""
    return eta_quotient_expand(EtaQuotient(((1, 24),)), prec_cap)


def delta_p(p, prec_cap):
    """Delta_p = eta(pz)^{2p} / eta(z)^2, weight p-1, valuation (p^2-1)/12."""
    if p <= 3:
        raise ValueError("fractional eta quotient unsupported")
    return eta_quotient_expand(EtaQuotient(((p, 2 * p), (1, -2))), prec_cap)


def lambda_p(p):
    """Order of vanishing of Delta_p at infinity."""
    return (p * p - 1) // 12
