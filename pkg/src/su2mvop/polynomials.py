"""Univariate polynomials in x and Laurent polynomials in u = e^{it/2}.

Coefficients are exact: Fractions, or QuadRat where sqrt(2) enters.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import as_rat, rat_str, scalar_to_json


def _is_zero(c) -> bool:
    return c == 0


class Poly:
    """Polynomial sum coeffs[k] x^k with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "Poly":
        return Poly([a * c for a in self.coeffs])

    def derivative(self, times: int = 1) -> "Poly":
        p = self
        for _ in range(times):
            p = Poly([k * p.coeffs[k] for k in range(1, len(p.coeffs))])
        return p

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def compose_affine(self, a, b) -> "Poly":
        """p(a x + b)."""
        out = Poly()
        lin = Poly([b, a])
        for c in reversed(self.coeffs):
            out = out * lin + Poly.const(c)
        return out

    def divmod(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if _is_zero(c):
                continue
            f = c / lead
            quot[k - dq] = f
            for i, b in enumerate(other.coeffs):
                rem[k - dq + i] = rem[k - dq + i] - f * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = rat_str(c) if isinstance(c, Fraction) else repr(c)
            terms.append(cs if k == 0 else f"{cs}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"

    def to_json(self):
        return [scalar_to_json(c) for c in self.coeffs]


def poly(*coeffs) -> Poly:
    return Poly([as_rat(c) if isinstance(c, (int, str)) else c for c in coeffs])


class LaurentPoly:
    """Finite sum of c_k u^k, k in Z, with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            if c != 0:
                clean[int(k)] = Fraction(c) if isinstance(c, int) else c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def mono(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    def coeff(self, k: int):
        return self.terms.get(k, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    def __rmul__(self, other):
        return self * other

    def conj(self) -> "LaurentPoly":
        """Complex conjugate on the unit circle for real coefficients: u -> 1/u."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def _as_poly(self):
        lo = self.min_exp()
        return lo, Poly([self.coeff(lo + i) for i in range(self.max_exp() - lo + 1)])

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return LaurentPoly()
        a, p = self._as_poly()
        b, q = other._as_poly()
        quot, rem = p.divmod(q)
        if rem:
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly({i + a - b: c for i, c in enumerate(quot.coeffs)})

    def at_one(self):
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, u):
        return sum((c * u**k for k, c in self.terms.items()), 0)

    def is_cosine_representable(self):
        """None if representable as a polynomial in cos t, else an offending exponent."""
        for k, c in self.terms.items():
            if k % 2:
                return k
            if self.coeff(-k) != c:
                return k
        return None

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        parts = [f"{rat_str(c) if isinstance(c, Fraction) else c}*u^{k}" for k, c in sorted(self.terms.items())]
        return "LaurentPoly(" + " + ".join(parts) + ")"

    def to_json(self):
        return [[k, scalar_to_json(c)] for k, c in sorted(self.terms.items())]
