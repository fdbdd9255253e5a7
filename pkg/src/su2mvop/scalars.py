"""Exact scalars: half-integer labels, rationals, pi-scaled rationals,
the quadratic field Q(sqrt 2) and signed square roots of rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

Rat = Fraction


class ExactnessError(ArithmeticError, TypeError):
    """An operation would leave the exact number system it was called in."""


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, HalfInt):
        return x.value
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    if isinstance(x, float):
        r = Fraction(x)
        if r.denominator > 2**20:
            raise ValueError(f"float {x!r} is not an exact small rational")
        return r
    raise TypeError(f"cannot convert {type(x).__name__} to Rat")


def rat_str(r) -> str:
    r = as_rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    if "." in s or "e" in s.lower():
        return Fraction(s)
    return Fraction(int(s))


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A number in (1/2)Z, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, x) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        r = as_rat(x)
        if (2 * r).denominator != 1:
            raise ValueError(f"{x!r} is not a half-integer")
        return cls(int(2 * r))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return self.twice // 2

    def __index__(self) -> int:
        return int(self)

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.twice * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        try:
            return self.value == as_rat(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        return self.value < as_rat(other)

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.twice // 2) if self.is_integral else f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def half(x) -> HalfInt:
    return HalfInt.of(x)


def halfint_range(lo, hi):
    """lo, lo+1, ..., hi for half-integers with hi - lo integral."""
    lo, hi = half(lo), half(hi)
    if (hi.twice - lo.twice) % 2:
        raise ValueError(f"{hi} - {lo} is not integral")
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1, 2)]


# ---------------------------------------------------------------------------
# Q(sqrt 2)


class QuadRat:
    """a + b*sqrt(2) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = as_rat(a)
        self.b = as_rat(b)

    @staticmethod
    def lift(x) -> "QuadRat":
        if isinstance(x, QuadRat):
            return x
        return QuadRat(x, 0)

    def __add__(self, other):
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        o = QuadRat.lift(other)
        return QuadRat(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        o = QuadRat.lift(other)
        return QuadRat(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QuadRat.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        o = QuadRat.lift(other)
        return QuadRat(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def __truediv__(self, other):
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        o = QuadRat.lift(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        num = self * o.conjugate()
        return QuadRat(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return QuadRat.lift(other) / self

    def __pow__(self, k: int):
        out = QuadRat(1)
        base = self if k >= 0 else QuadRat(1) / self
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(2)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        if self.b == 0:
            return f"QuadRat({rat_str(self.a)})"
        return f"QuadRat({rat_str(self.a)} + {rat_str(self.b)}*sqrt2)"

    def to_json(self):
        return {"a": rat_str(self.a), "b": rat_str(self.b)}


SQRT2 = QuadRat(0, 1)


def simplify_scalar(x):
    """Collapse a QuadRat with zero sqrt(2) part to a Fraction."""
    if isinstance(x, QuadRat) and x.b == 0:
        return x.a
    return x


# ---------------------------------------------------------------------------
# pi-scaled values


@dataclass(frozen=True)
class PiRat:
    """coeff * pi**pi_power with pi_power in {0, 1}."""

    coeff: object
    pi_power: int = 1

    def __post_init__(self):
        if self.pi_power not in (0, 1):
            raise ValueError(f"pi power {self.pi_power} out of range")

    def _compatible(self, other: "PiRat") -> int:
        if self.pi_power == other.pi_power or other.coeff == 0:
            return self.pi_power
        if self.coeff == 0:
            return other.pi_power
        raise ValueError("cannot add values with different powers of pi")

    def __add__(self, other):
        if not isinstance(other, PiRat):
            return NotImplemented
        return PiRat(self.coeff + other.coeff, self._compatible(other))

    def __sub__(self, other):
        if not isinstance(other, PiRat):
            return NotImplemented
        return PiRat(self.coeff - other.coeff, self._compatible(other))

    def __neg__(self):
        return PiRat(-self.coeff, self.pi_power)

    def __mul__(self, other):
        if isinstance(other, PiRat):
            return PiRat(self.coeff * other.coeff, self.pi_power + other.pi_power)
        return PiRat(self.coeff * other, self.pi_power)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PiRat):
            if self.coeff == 0 and other.coeff == 0:
                return True
            return self.pi_power == other.pi_power and self.coeff == other.coeff
        if other == 0:
            return self.coeff == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.pi_power, self.coeff))

    def __float__(self):
        return float(self.coeff) * (math.pi if self.pi_power else 1.0)

    def __repr__(self):
        c = self.coeff
        cs = rat_str(c) if isinstance(c, (int, Fraction)) else repr(c)
        return f"{cs}*pi" if self.pi_power else cs

    def to_json(self):
        c = self.coeff
        coeff = rat_str(c) if isinstance(c, (int, Fraction)) else scalar_to_json(c)
        return {"coeff": coeff, "pi_power": self.pi_power}


# ---------------------------------------------------------------------------
# signed square roots


@dataclass(frozen=True)
class SqrtRat:
    """sign * sqrt(radicand) with radicand >= 0 rational."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        r = as_rat(self.radicand)
        object.__setattr__(self, "radicand", r)
        if self.sign not in (-1, 0, 1) or r < 0:
            raise ValueError("invalid SqrtRat")
        if (self.sign == 0) != (r == 0):
            raise ValueError("sign must be 0 exactly when radicand is 0")

    @classmethod
    def from_signed_square(cls, sign: int, square) -> "SqrtRat":
        square = as_rat(square)
        if square == 0:
            return cls(0, Fraction(0))
        return cls(1 if sign > 0 else -1, square)

    @classmethod
    def from_rat(cls, r) -> "SqrtRat":
        r = as_rat(r)
        return cls.from_signed_square((r > 0) - (r < 0), r * r)

    def __mul__(self, other):
        if isinstance(other, SqrtRat):
            return SqrtRat(self.sign * other.sign, self.radicand * other.radicand)
        return NotImplemented

    def __neg__(self):
        return SqrtRat(-self.sign, self.radicand)

    def __add__(self, other):
        raise ExactnessError("sums of square roots leave SqrtRat; use the BigFloat pipeline")

    __radd__ = __add__
    __sub__ = __add__

    def square(self) -> Fraction:
        return self.radicand

    def __bool__(self):
        return self.sign != 0

    def __float__(self):
        return self.sign * math.sqrt(self.radicand)

    def to_mpf(self, ctx):
        """Correctly rounded value in an mpmath context."""
        if self.sign == 0:
            return ctx.mpf(0)
        r = self.radicand
        return self.sign * ctx.sqrt(ctx.mpf(r.numerator) / r.denominator)

    def to_json(self):
        return {"sign": self.sign, "radicand": rat_str(self.radicand)}


SqrtRat.ZERO = SqrtRat(0, Fraction(0))


# ---------------------------------------------------------------------------
# combinatorics


def pochhammer(a, n: int):
    """Rising factorial (a)_n."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = as_rat(a) if not isinstance(a, QuadRat) else a
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def _as_int(n) -> int:
    if isinstance(n, int):
        return n
    r = as_rat(n)
    if r.denominator != 1:
        raise ValueError(f"binomial top {n} is not integral")
    return r.numerator


def binom(n, k) -> Fraction:
    n = _as_int(n)
    k = _as_int(k)
    if n < 0:
        raise ValueError("binomial top must be nonnegative")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n) -> int:
    n = _as_int(n)
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def falling(n: int, i: int) -> int:
    """[n]_i = n (n-1) ... (n-i+1)."""
    out = 1
    for k in range(i):
        out *= n - k
    return out


def scalar_to_json(x):
    if isinstance(x, (int, Fraction)):
        return rat_str(x)
    if isinstance(x, QuadRat):
        return rat_str(x.a) if x.b == 0 else x.to_json()
    if isinstance(x, (PiRat, SqrtRat)):
        return x.to_json()
    raise TypeError(f"no JSON form for {type(x).__name__}")
