"""Canonical bases of the weakly holomorphic spaces M^#_k(p) and S^#_k(p).

Each basis element f_{k,m} = q^{-m} + O(q^{...}) is indexed by its pole
order m at infinity and is dual-reduced: its q-expansion has coefficient 0
at q^{-m'} for every other index m' of the basis.  The construction divides
a holomorphic echelon basis in weight k + ell(p-1) by Delta_p^ell, where
Delta_p = eta(pz)^{2p}/eta(z)^2 has a simple zero of order lambda_p =
(p^2-1)/12 at infinity and no other zeros; re-echelonization then yields
the canonical elements.  The resulting index set stabilizes once ell is
large enough, which the tests verify directly.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classical import delta_p, lambda_p
from .echelon import Echelonizer
from .qseries import qs_mul, qs_pow, qs_inv, qs_coeff, qs_truncate
from .spaces import (holo_basis, default_prec_cap, separation_prec_cap,
                     genus, gap_sets, dim_M, dim_S)


@dataclass(frozen=True)
class WeakBasis:
    """Canonical dual-reduced basis of M^#_k(p) (tag "M") or S^#_k(p)
    (tag "S"), holding all elements with pole order at most m_max_pole.

    index_set is the tuple of realized pole orders m (increasing); negative
    m means the element is holomorphic and vanishes to order -m."""
    p: int
    k: int
    tag: str
    m_max_pole: int
    prec_cap: int
    index_set: tuple
    elements: tuple     # QSeries, parallel to index_set

    def element(self, m):
        """The basis element f_{k,m}; errors above the pole budget and on
        indices absent from the basis."""
        if m > self.m_max_pole:
            raise ValueError("pole order exceeds the computed budget")
        try:
            return self.elements[self.index_set.index(m)]
        except ValueError:
            raise ValueError("no basis element with index %d" % m) from None


def _weak_basis_at_ell(p, k, tag, ell, m_max_pole, prec_cap):
    """Divide the weight k + ell(p-1) holomorphic echelon basis by
    Delta_p^ell and re-echelonize.  Requires ell large enough that the
    shifted weight is holomorphic (>= 4, or the k = 2 Eisenstein case)
    and that ell*lambda_p covers the pole budget."""
    lam = lambda_p(p)
    kk = k + ell * (p - 1)
    # the holomorphic window must at least reach the separation floor so
    # that every element of the space is seen before division
    cap_holo = max(prec_cap + ell * lam, separation_prec_cap(p, kk))
    basis = holo_basis(p, kk, tag, cap_holo)
    if ell == 0:
        divided = list(basis.elements)
    else:
        dp = delta_p(p, cap_holo + lam + 1)
        dinv = qs_inv(qs_pow(dp, ell))
        divided = [qs_mul(e, dinv) for e in basis.elements]
    lo = min(s.min_exp for s in divided)
    ech = Echelonizer(lo, prec_cap)
    for s in divided:
        ech.insert(s)
    elements, pivots = ech.basis()
    out_idx, out_elt = [], []
    for e, v in zip(elements, pivots):
        m = -v
        if m <= m_max_pole:
            out_idx.append(m)
            # trim the exact zeros below the pole so window bookkeeping
            # in later multiplications stays tight
            out_elt.append(qs_truncate(e, v, prec_cap))
    out_idx.reverse()
    out_elt.reverse()
    return WeakBasis(p, k, tag, m_max_pole, prec_cap,
                     tuple(out_idx), tuple(out_elt))


@lru_cache(maxsize=None)
def weak_basis(p, k, tag, m_max_pole, prec_cap=None):
    """Canonical basis of M^#_k(p) / S^#_k(p) with pole orders up to
    m_max_pole, each element expanded on [-index, prec_cap)."""
    if tag not in ("M", "S"):
        raise ValueError("space tag must be 'M' or 'S'")
    if k % 2:
        raise ValueError("weak_basis requires even k")
    lam = lambda_p(p)
    # holomorphic S pivots start at q-order 1, so dividing by Delta_p^ell
    # reaches pole order at most ell*lam - 1; M pivots start at 0
    need = m_max_pole + (1 if tag == "S" else 0)
    ell = 0
    while ell * lam < need or (k + ell * (p - 1) < 4
                               and k + ell * (p - 1) != 2):
        ell += 1
    if k + ell * (p - 1) == 2 and tag == "S" and genus(p) == 0:
        ell += 1
    if prec_cap is None:
        prec_cap = default_prec_cap(p, max(k + ell * (p - 1), 2))
    return _weak_basis_at_ell(p, k, tag, ell, m_max_pole, prec_cap)


def coefficient(basis, m, n):
    """Coefficient a(m, n) of q^n in the basis element of index m, with the
    conventions: 0 when no element of index m exists (below the pole budget),
    and 0 at n = -m (the dual-reduction normalization point carries the
    leading 1, which the pairing bookkeeping accounts for separately)."""
    if m > basis.m_max_pole:
        raise ValueError("pole order exceeds the computed budget")
    if n == -m:
        return Fraction(0)
    if m not in basis.index_set:
        return Fraction(0)
    e = basis.elements[basis.index_set.index(m)]
    if n < e.min_exp:
        return Fraction(0)
    return qs_coeff(e, n)


def index_set_predicted(p, k, tag):
    """Predicted index set of the canonical basis, as a pair
    (first_index, excluded): indices are all m >= first_index except the
    finitely many listed in excluded (plus, in one degenerate case, a
    single extra index below first_index, returned via the triple's third
    slot `extra`).

    Returns (first_index, excluded frozenset, extra frozenset)."""
    if tag not in ("M", "S"):
        raise ValueError("space tag must be 'M' or 'S'")
    if k % 2:
        raise ValueError("index_set_predicted requires even k")
    if p % 12 == 1 and p != 37:
        raise ValueError("unsupported prime")
    if genus(p) == 0:
        raise ValueError("unsupported prime")
    lam = lambda_p(p)
    g0 = genus(p)
    r = k % (p - 1)
    ell = (k - r) // (p - 1)
    if r == 0:
        if tag == "M":
            first = -ell * lam
            excluded = frozenset(range(-ell * lam + 1, g0 - ell * lam + 1))
            return (first, excluded, frozenset())
        return (g0 - ell * lam + 1, frozenset(), frozenset())
    if r == 2:
        first = -g0 - ell * lam
        if tag == "M":
            return (first, frozenset(), frozenset())
        return (first, frozenset({-ell * lam}), frozenset())
    rep = gap_sets(p, r)
    if tag == "M":
        first = -dim_M(p, r) - rep.cM - ell * lam + 1
        excluded = frozenset(-x - ell * lam for x in rep.missM)
    else:
        first = -dim_S(p, r) - rep.cS - ell * lam
        excluded = frozenset(-x - ell * lam for x in rep.missS)
    return (first, excluded, frozenset())


def predicted_indices(p, k, tag, m_max_pole):
    """The predicted index set restricted to indices <= m_max_pole, as a
    sorted tuple."""
    first, excluded, extra = index_set_predicted(p, k, tag)
    out = set(extra)
    out.update(m for m in range(first, m_max_pole + 1) if m not in excluded)
    return tuple(sorted(m for m in out if m <= m_max_pole))
