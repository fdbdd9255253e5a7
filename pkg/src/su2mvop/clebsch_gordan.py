"""Clebsch-Gordan coefficients of SU(2) in the Condon-Shortley convention.

A single coefficient is a signed square root of a rational and is returned
exactly as a SqrtRat.  Sums of products of coefficients are generally not of
that form, so the recurrence coefficients go through mpmath at an explicit
working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .scalars import HalfInt, SqrtRat, binom, factorial, half, halfint_range

DEFAULT_PRECISION_BITS = 256


@dataclass(frozen=True)
class CGLabel:
    l1: HalfInt
    l2: HalfInt
    l: HalfInt
    j1: HalfInt
    j2: HalfInt
    j: HalfInt

    @classmethod
    def of(cls, l1, l2, l, j1, j2, j):
        return cls(*(half(v) for v in (l1, l2, l, j1, j2, j)))

    def is_valid_projection(self) -> bool:
        return all(
            abs(m) <= s and (s - m).is_integral
            for s, m in ((self.l1, self.j1), (self.l2, self.j2), (self.l, self.j))
        )

    def satisfies_triangle(self) -> bool:
        return abs(self.l1 - self.l2) <= self.l <= self.l1 + self.l2 and (self.l1 + self.l2 - self.l).is_integral


def _f(x: HalfInt) -> int:
    return factorial(int(x))


@lru_cache(maxsize=None)
def _racah(l1: HalfInt, l2: HalfInt, l: HalfInt, j1: HalfInt, j2: HalfInt, j: HalfInt) -> SqrtRat:
    pre = Fraction(
        (l.twice + 1) * _f(l + l1 - l2) * _f(l - l1 + l2) * _f(l1 + l2 - l),
        _f(l1 + l2 + l + 1),
    )
    pre *= _f(l + j) * _f(l - j) * _f(l1 - j1) * _f(l1 + j1) * _f(l2 - j2) * _f(l2 + j2)
    kmin = max(0, int(l2 - l - j1), int(l1 - l + j2))
    kmax = min(int(l1 + l2 - l), int(l1 - j1), int(l2 + j2))
    s = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            factorial(k)
            * _f(l1 + l2 - l - k)
            * _f(l1 - j1 - k)
            * _f(l2 + j2 - k)
            * _f(l - l2 + j1 + k)
            * _f(l - l1 - j2 + k)
        )
        s += Fraction((-1) ** k, den)
    return SqrtRat.from_signed_square((s > 0) - (s < 0), pre * s * s)


def cg(label_or_l1, l2=None, l=None, j1=None, j2=None, j=None) -> SqrtRat:
    """C^{l1,l2,l}_{j1,j2,j}; zero outside the triangle or when j1+j2 != j."""
    if isinstance(label_or_l1, CGLabel):
        lab = label_or_l1
    else:
        lab = CGLabel.of(label_or_l1, l2, l, j1, j2, j)
    if not lab.is_valid_projection():
        raise ValueError(f"invalid projections in {lab}")
    if not lab.satisfies_triangle() or lab.j1 + lab.j2 != lab.j:
        return SqrtRat.ZERO
    return _racah(lab.l1, lab.l2, lab.l, lab.j1, lab.j2, lab.j)


def cg_squared(l1, l2, l, j1, j2, j) -> Fraction:
    return cg(l1, l2, l, j1, j2, j).square()


def cg_squared_stretched(l, m, j1, j2, j) -> Fraction:
    """Squared coefficient for l1 = (l+m)/2, l2 = (l-m)/2 via binomials."""
    l, m, j1, j2, j = (half(v) for v in (l, m, j1, j2, j))
    l1, l2 = half((l + m).value / 2), half((l - m).value / 2)
    if not CGLabel(l1, l2, l, j1, j2, j).is_valid_projection():
        raise ValueError("invalid stretched labels")
    if j != j1 + j2:
        return Fraction(0)
    return binom(l + m, j1 + l1) * binom(l - m, j2 + l2) / binom(2 * l, l - j)


def contains(l1, l2, l) -> bool:
    """Whether T^{l1} x T^{l2} restricted to the diagonal contains T^l."""
    l1, l2, l = half(l1), half(l2), half(l)
    return abs(l1 - l2) <= l <= l1 + l2 and (l1 + l2 - l).is_integral


@dataclass(frozen=True)
class BigFloat:
    value: mpmath.mpf
    precision_bits: int

    def __float__(self):
        return float(self.value)

    def to_json(self):
        ctx = mpmath.MPContext()
        ctx.prec = self.precision_bits
        digits = int(self.precision_bits * 0.30103) + 1
        return {"value": ctx.nstr(self.value, digits), "precision_bits": self.precision_bits}


def neighbours(l1, l2):
    """The parameter pairs (m1, m2) with m_i in {|l_i - 1/2|, l_i + 1/2}."""
    l1, l2 = half(l1), half(l2)
    h = half("1/2")
    out = []
    for m1 in sorted({abs(l1 - h), l1 + h}):
        for m2 in sorted({abs(l2 - h), l2 + h}):
            out.append((m1, m2))
    return out


def recurrence_coeff_a(l1, l2, m1, m2, l, precision_bits: int = DEFAULT_PRECISION_BITS) -> BigFloat:
    """Coefficient a of phi * Phi^{l1,l2} in terms of Phi^{m1,m2}, for phi the
    zonal function of (1/2, 1/2).

    The defining six-fold sum collapses to a double sum over j1 and i1
    (j = l, i2 = -i1, j2 = l - j1, n_k = j_k + i_k).
    """
    l1, l2, m1, m2, l = (half(v) for v in (l1, l2, m1, m2, l))
    h = half("1/2")
    if not contains(l1, l2, l) or not contains(m1, m2, l):
        raise ValueError("both parameter pairs must contain l")
    if abs(m1 - l1) != h or abs(m2 - l2) != h:
        raise ValueError("(m1, m2) must be neighbours of (l1, l2)")
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits + 16
    total = ctx.mpf(0)
    for j1 in halfint_range(-l1, l1):
        j2 = l - j1
        if abs(j2) > l2 or not (l2 - j2).is_integral:
            continue
        c1 = cg(l1, l2, l, j1, j2, l)
        if not c1:
            continue
        for i1 in (-h, h):
            i2 = -i1
            n1, n2 = j1 + i1, j2 + i2
            if abs(n1) > m1 or abs(n2) > m2:
                continue
            prod = (
                c1
                * cg(h, h, 0, i1, i2, 0)
                * cg(l1, h, m1, j1, i1, n1)
                * cg(l2, h, m2, j2, i2, n2)
                * cg(m1, m2, l, n1, n2, l)
            )
            total += prod.to_mpf(ctx)
    ctx.prec = precision_bits
    return BigFloat(+total, precision_bits)


def recurrence_coeff_a_squared(l1, l2, m1, m2, l, precision_bits: int = DEFAULT_PRECISION_BITS):
    a = recurrence_coeff_a(l1, l2, m1, m2, l, precision_bits)
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    return BigFloat(a.value * a.value, precision_bits)
