"""Duality between the canonical bases of M^#_k(p) and S^#_{2-k}(p).

With a_k(m, n) the coefficients of the weight-k M-basis and b_{2-k}(n, m)
those of the weight-(2-k) S-basis, the pairing statement is

    a_k(m, n) = -b_{2-k}(n, m)

for all indices m, n.  duality_check verifies this exactly on a rectangular
index box, and pairing_constant_term / bruinier_funke_sum expose the
constant-term pairing whose vanishing encodes the same identity.
"""

from dataclasses import dataclass
from fractions import Fraction

from .qseries import qs_coeff
from .weak import weak_basis, coefficient


def pairing_constant_term(f, g):
    """Constant term of f*g: sum over i of coeff(f, i) * coeff(g, -i).
    Requires each window to cover the other's principal part."""
    if f.prec_cap <= -g.min_exp or g.prec_cap <= -f.min_exp:
        raise ValueError("insufficient precision for constant-term pairing")
    lo = max(f.min_exp, 1 - g.prec_cap)
    hi = min(f.prec_cap, 1 - g.min_exp)
    total = Fraction(0)
    for i in range(lo, hi):
        total += qs_coeff(f, i) * qs_coeff(g, -i)
    return total


def bruinier_funke_sum(basis_m, basis_s, m, n):
    """sum over i of a_k(m, i) * b_{2-k}(n, -i), using the coefficient
    conventions (a(m, -m) = 0 and b(n, -n) = 0, so the two leading spike
    terms are excluded automatically)."""
    lo = max(-m, 1 - basis_s.prec_cap)
    hi = min(basis_m.prec_cap, n + 1)
    total = Fraction(0)
    for i in range(lo, hi):
        total += coefficient(basis_m, m, i) * coefficient(basis_s, n, -i)
    return total


@dataclass(frozen=True)
class DualityReport:
    p: int
    k: int
    box_m: int
    box_n: int
    checked: int
    violations: tuple   # (m, n, a, minus_b) quadruples

    @property
    def passed(self):
        return not self.violations


def duality_check(p, k, box_m, box_n):
    """Verify a_k(m, n) = -b_{2-k}(n, m) exactly for all m in
    [-box_m, box_m] and n in [-box_n, box_n]."""
    basis_m = weak_basis(p, k, "M", box_m, box_n + 1)
    basis_s = weak_basis(p, 2 - k, "S", box_n, box_m + 1)
    violations = []
    checked = 0
    for m in range(-box_m, box_m + 1):
        for n in range(-box_n, box_n + 1):
            a = coefficient(basis_m, m, n)
            b = coefficient(basis_s, n, m)
            checked += 1
            if a != -b:
                violations.append((m, n, a, -b))
    return DualityReport(p, k, box_m, box_n, checked, tuple(violations))


def pairing_decomposition(basis_m, basis_s, m, n):
    """Constant term of f_{k,m} * g_{2-k,n} split as
    a_k(m, n) + b_{2-k}(n, m) + (Bruinier-Funke tail); duality makes the
    first two cancel, and for dual-reduced bases the tail vanishes too."""
    a = coefficient(basis_m, m, n)
    b = coefficient(basis_s, n, m)
    tail = bruinier_funke_sum(basis_m, basis_s, m, n)
    return a + b + tail
