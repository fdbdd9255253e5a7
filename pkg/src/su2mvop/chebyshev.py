"""Exact algebra of Chebyshev expansions of the second kind.

An expansion sum e[n] U_n(x) is stored by its coefficient list.  Negative
indices never survive: U_{-1} is taken to be zero everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polynomials import LaurentPoly, Poly
from .scalars import PiRat, rat_str


class ChebExpansion:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_terms(cls, terms) -> "ChebExpansion":
        """Build from (index, coeff) pairs; negative indices are dropped."""
        out = {}
        for n, c in terms:
            if n >= 0:
                out[n] = out.get(n, 0) + c
        size = max(out, default=-1) + 1
        return cls([out.get(n, 0) for n in range(size)])

    @classmethod
    def U(cls, n: int, c=1) -> "ChebExpansion":
        return cls.from_terms([(n, Fraction(c))])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ChebExpansion):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return ChebExpansion([self[k] + other[k] for k in range(n)])

    def __neg__(self):
        return ChebExpansion([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ChebExpansion":
        return ChebExpansion([a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, ChebExpansion):
            return cheb_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __repr__(self):
        terms = [f"{rat_str(c)}*U{n}" for n, c in enumerate(self.coeffs) if c != 0]
        return "ChebExpansion(" + (" + ".join(terms) or "0") + ")"

    def to_json(self):
        return [rat_str(c) for c in self.coeffs]


def cheb_mul_x(e: ChebExpansion) -> ChebExpansion:
    half = Fraction(1, 2)
    terms = []
    for r, c in enumerate(e.coeffs):
        terms.append((r - 1, half * c))
        terms.append((r + 1, half * c))
    return ChebExpansion.from_terms(terms)


def cheb_derivative(e: ChebExpansion) -> ChebExpansion:
    """2(1-x^2) e'(x), expanded in U."""
    terms = []
    for n, c in enumerate(e.coeffs):
        terms.append((n - 1, (n + 2) * c))
        terms.append((n + 1, -n * c))
    return ChebExpansion.from_terms(terms)


def cheb_weighted_antiderivative(e: ChebExpansion) -> ChebExpansion:
    """g with (rho g)' = rho e, where rho = sqrt(1-x^2).

    Only exists when e has no U_0 component: the antiderivative of rho itself
    contains arcsin(x).
    """
    if e[0] != 0:
        raise ValueError("U_0 component has no antiderivative of the form rho*poly")
    terms = []
    for i, c in enumerate(e.coeffs):
        if i == 0:
            continue
        terms.append((i + 1, c / (2 * (i + 2))))
        terms.append((i - 1, -c / (2 * i)))
    return ChebExpansion.from_terms(terms)


def cheb_rho_derivative(g: ChebExpansion) -> ChebExpansion:
    """2(1-x^2)(rho g)'/rho, expanded in U."""
    return cheb_derivative(g) - cheb_mul_x(g).scale(2)


def cheb_product(a: ChebExpansion, b: ChebExpansion) -> ChebExpansion:
    """Linearization U_m U_n = sum of U_k, k = |m-n|, |m-n|+2, ..., m+n."""
    terms = []
    for m, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for n, cb in enumerate(b.coeffs):
            if cb == 0:
                continue
            for k in range(abs(m - n), m + n + 1, 2):
                terms.append((k, ca * cb))
    return ChebExpansion.from_terms(terms)


def cheb_inner(e1: ChebExpansion, e2: ChebExpansion) -> PiRat:
    """Integral over [-1, 1] of sqrt(1-x^2) e1 e2."""
    s = sum((a * b for a, b in zip(e1.coeffs, e2.coeffs)), Fraction(0))
    return PiRat(s / 2, 1)


def cheb_integral(e: ChebExpansion) -> PiRat:
    """Integral over [-1, 1] of sqrt(1-x^2) e(x)."""
    return PiRat(e[0] / 2, 1)


@lru_cache(maxsize=None)
def _u_poly(n: int) -> Poly:
    if n == 0:
        return Poly([1])
    if n == 1:
        return Poly([0, 2])
    return Poly([0, 2]) * _u_poly(n - 1) - _u_poly(n - 2)


def chebyshev_u(n: int) -> Poly:
    return _u_poly(n) if n >= 0 else Poly()


def cheb_to_poly(e: ChebExpansion) -> Poly:
    out = Poly()
    for n, c in enumerate(e.coeffs):
        if c != 0:
            out = out + _u_poly(n).scale(c)
    return out


def poly_to_cheb(p: Poly) -> ChebExpansion:
    coeffs = list(p.coeffs)
    out = [Fraction(0)] * len(coeffs)
    for n in range(len(coeffs) - 1, -1, -1):
        c = coeffs[n]
        if c == 0:
            continue
        f = c / _u_poly(n).coeffs[-1]
        out[n] = f
        for k, a in enumerate(_u_poly(n).coeffs):
            coeffs[k] -= f * a
    return ChebExpansion(out)


def laurent_to_poly_in_x(f: LaurentPoly) -> Poly:
    """The polynomial p with p(cos t) = f(e^{it/2})."""
    bad = f.is_cosine_representable()
    if bad is not None:
        raise ValueError(f"not a polynomial in cos t: exponent {bad} breaks symmetry or parity")
    # u^{2m} + u^{-2m} = 2 T_m(x); build T_m by recurrence
    out = Poly.const(f.coeff(0))
    t_prev, t_cur = Poly([1]), Poly([0, 1])
    m = 1
    top = max((k for k in f.terms), default=0) // 2
    while m <= top:
        c = f.coeff(2 * m)
        if c != 0:
            out = out + t_cur.scale(2 * c)
        t_prev, t_cur = t_cur, Poly([0, 2]) * t_cur - t_prev
        m += 1
    return out


def poly_in_x_to_laurent(p: Poly) -> LaurentPoly:
    x = LaurentPoly({2: Fraction(1, 2), -2: Fraction(1, 2)})
    out = LaurentPoly()
    for c in reversed(p.coeffs):
        out = out * x + LaurentPoly.const(c)
    return out


SIN2 = LaurentPoly({0: Fraction(1, 2), 4: Fraction(-1, 4), -4: Fraction(-1, 4)})
