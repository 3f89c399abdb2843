"""Dimensions, genus, holomorphic echelon bases of M_k(Gamma_0(p)) and
S_k(Gamma_0(p)), gap sets, and the valence upper bounds for the maximal
order of vanishing at infinity.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classical import (eisenstein, eisenstein_level_p, lambda_p)  # noqa: F401
from .echelon import echelonize
from .qseries import qs_vop


def genus(p):
    """Genus of the modular curve X_0(p)."""
    g = (p + 1) // 12
    if p % 12 == 1:
        g -= 1
    return g


def dim_S(p, k):
    """Dimension of the cusp space S_k(Gamma_0(p))."""
    if k < 2 or k % 2:
        raise ValueError("dim_S requires even k >= 2")
    g0 = genus(p)
    if k == 2:
        return g0
    base = g0 * k - (g0 + 1)
    r = p % 12
    if r == 1:
        base += 2 * (k // 3) + 2 * (k // 4)
    elif r == 5:
        base += 2 * (k // 4)
    elif r == 7:
        base += 2 * (k // 3)
    # r == 11: no correction
    return base


def dim_E(p, k):
    """Dimension of the Eisenstein subspace of M_k(Gamma_0(p))."""
    if k < 2 or k % 2:
        raise ValueError("dim_E requires even k >= 2")
    return 1 if k == 2 else 2


def dim_M(p, k):
    return dim_S(p, k) + dim_E(p, k)


def separation_prec_cap(p, k):
    """Smallest window that provably separates a full echelon basis in
    weight k: the Sturm bound (every pivot order lies below it) plus slack."""
    sturm = -((-k * (p + 1)) // 12)  # ceil(k (p+1) / 12)
    return sturm + 8


def default_prec_cap(p, k):
    """Precision floor: Sturm bound plus lambda_p plus slack, so that
    echelonization decisions and later division by powers of Delta_p are
    provable rather than truncation artifacts."""
    return separation_prec_cap(p, k) + lambda_p(p)


@dataclass(frozen=True)
class EchelonBasis:
    """Reduced row echelon basis of a holomorphic space."""
    p: int
    k: int
    tag: str            # "M" or "S"
    elements: tuple     # QSeries, ordered by pivot
    pivots: tuple       # strictly increasing pivot q-orders


@lru_cache(maxsize=None)
def holo_basis(p, k, tag, prec_cap=None):
    """Reduced row echelon basis of M_k(Gamma_0(p)) (tag "M") or
    S_k(Gamma_0(p)) (tag "S").  The cusp space comes from the trace
    construction; for M the Eisenstein space is completed with
    {E_k, E_k(pz)} for k >= 4 and {E_{k,p}} for k = 2."""
    from .trace import cusp_space
    if tag not in ("M", "S"):
        raise ValueError("space tag must be 'M' or 'S'")
    if prec_cap is None:
        prec_cap = default_prec_cap(p, k)
    cusp_elements, _ = cusp_space(p, k, prec_cap)
    series = list(cusp_elements)
    if tag == "M":
        if k == 2:
            series.append(eisenstein_level_p(2, p, prec_cap))
        else:
            ek = eisenstein(k, prec_cap)
            series.append(ek)
            series.append(qs_vop(ek, p))
    elements, pivots = echelonize(series)
    expected = dim_M(p, k) if tag == "M" else dim_S(p, k)
    if len(elements) != expected:
        raise ValueError(
            "cusp space generation failed (rank %d of %d at p=%d, k=%d)"
            % (len(elements), expected, p, k))
    return EchelonBasis(p, k, tag, elements, pivots)


@dataclass(frozen=True)
class GapReport:
    """Gap data of the holomorphic echelon bases at one (p, k)."""
    p: int
    k: int
    missM: frozenset
    missS: frozenset
    cM: int
    cS: int
    mMax: int
    sMax: int


def _missing_between(pivots):
    if not pivots:
        return frozenset()
    full = set(range(pivots[0], pivots[-1] + 1))
    return frozenset(full - set(pivots))


def gap_sets(p, k, prec_cap=None):
    """Gap sets of the M and S echelon bases: pivot orders skipped strictly
    between the extreme pivots, with counts and maxima.

    sMax is the largest pivot order of the S basis.  mMax is stored as
    dim M_k(p) + cM (one more than the largest M pivot order, since the M
    pivots start at order 0), so that cM = mMax - dim M and
    cS = sMax - dim S both hold."""
    if prec_cap is None:
        # pivot structure only: the separation floor suffices (no
        # division headroom needed)
        prec_cap = separation_prec_cap(p, k)
    bm = holo_basis(p, k, "M", prec_cap)
    bs = holo_basis(p, k, "S", prec_cap)
    missM = _missing_between(bm.pivots)
    missS = _missing_between(bs.pivots)
    cM, cS = len(missM), len(missS)
    sMax = bs.pivots[-1] if bs.pivots else 0
    mMax = dim_M(p, k) + cM
    return GapReport(p, k, missM, missS, cM, cS, mMax, sMax)


def alpha2(w):
    """Order of vanishing at i forced on every form in M_w(1) by the
    valence formula: 0 if w = 0 mod 4, else 1."""
    return 0 if w % 4 == 0 else 1


def alpha3(w):
    """Order of vanishing at the sixth root of unity rho forced on every
    form in M_w(1): 0 / 2 / 1 for w = 0 / 2 / 4 mod 6."""
    return {0: 0, 2: 2, 4: 1}[w % 6]


def ahlgren_bound(p, k):
    """Valence upper bound for s_{p,k}: kp/12 - alpha2(kp)/2 - alpha3(kp)/3,
    valid for k >= 2 and prime p >= max(5, k+1)."""
    if k < 2 or k % 2:
        raise ValueError("ahlgren_bound requires even k >= 2")
    if p < max(5, k + 1):
        raise ValueError("bound hypothesis violated")
    w = k * p
    return Fraction(w, 12) - Fraction(alpha2(w), 2) - Fraction(alpha3(w), 3)


def gap_count_bound(p, k):
    """Upper bound for the gap count cS: floor((p-k)/12) + 1 + eps, where
    eps is +1 if p-k+1 = 0 mod 12, -1 if p-k-1 = 0 mod 12, else 0."""
    eps = 0
    if (p - k + 1) % 12 == 0:
        eps = 1
    elif (p - k - 1) % 12 == 0:
        eps = -1
    return (p - k) // 12 + 1 + eps
