from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import nonzero_rationals, rationals
from su2mvop.scalars import (HalfInt, PiRat, QuadRat, SqrtRat, binom, factorial, falling, half, halfint_range,
                             parse_rat, pochhammer, rat_str, scalar_to_json)


class TestHalfInt:
    def test_parsing(self):
        assert half("3/2").twice == 3
        assert half(1.5) == half("3/2")
        assert half(F(1, 2)).value == F(1, 2)
        assert half(2).is_integral and not half("1/2").is_integral

    def test_rejects_non_half_integers(self):
        with pytest.raises(ValueError):
            half(F(1, 3))

    def test_arithmetic_stays_exact(self):
        assert half("1/2") + half("1/2") == half(1)
        assert half(1) - half("3/2") == half("-1/2")
        assert abs(half("-3/2")) == half("3/2")
        assert str(half("-3/2")) == "-3/2"

    def test_range(self):
        assert list(halfint_range(half("-3/2"), half("3/2"))) == [half(v) for v in ("-3/2", "-1/2", "1/2", "3/2")]

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_twice_value_roundtrip(self, a, b):
        x, y = HalfInt(a), HalfInt(b)
        assert (x + y).value == x.value + y.value
        assert (x - y).twice == a - b


class TestRationals:
    @given(rationals)
    def test_normalisation_idempotent(self, r):
        assert parse_rat(rat_str(r)) == r
        assert F(r.numerator, r.denominator) == r

    def test_rat_str(self):
        assert rat_str(F(-3, 6)) == "-1/2"
        assert rat_str(F(4)) == "4"


class TestPochhammerBinom:
    def test_examples(self):
        assert pochhammer(F(1, 2), 3) == F(15, 8)
        assert pochhammer(F(7, 3), 0) == 1
        assert pochhammer(-2, 3) == 0
        assert binom(4, 2) == 6
        assert binom(3, -1) == 0
        assert binom(2, 1) == 2
        assert factorial(5) == 120
        assert falling(5, 2) == 20

    @given(rationals, st.integers(0, 20), st.integers(0, 20))
    def test_pochhammer_splits(self, a, m, n):
        assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)

    @given(st.integers(0, 30), st.integers(0, 30))
    def test_binom_pascal(self, n, k):
        assert binom(n + 1, k + 1) == binom(n, k) + binom(n, k + 1)


class TestQuadRat:
    quads = st.builds(QuadRat, rationals, rationals)

    @given(quads, quads, quads)
    def test_ring_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_sqrt2_squares_to_two(self):
        s = QuadRat(0, 1)
        assert s * s == QuadRat(2)

    @given(quads)
    def test_norm_multiplicative(self, a):
        assert a.norm() == (a * a.conjugate()).a

    @given(quads.filter(lambda q: q.a != 0 or q.b != 0))
    def test_inverse(self, a):
        assert a * (QuadRat(1) / a) == QuadRat(1)


class TestPiRat:
    def test_addition_needs_equal_power(self):
        assert PiRat(F(1, 2)) + PiRat(F(1, 4)) == PiRat(F(3, 4))
        with pytest.raises(ValueError):
            PiRat(1, 1) + PiRat(1, 0)

    def test_power_above_one_rejected(self):
        with pytest.raises(ValueError):
            PiRat(1, 1) * PiRat(1, 1)

    def test_json(self):
        assert PiRat(F(9, 8)).to_json() == {"coeff": "9/8", "pi_power": 1}


class TestSqrtRat:
    @given(st.sampled_from([-1, 1]), rationals.filter(lambda r: r > 0))
    def test_square(self, s, r):
        assert SqrtRat(s, r).square() == r

    @given(nonzero_rationals, nonzero_rationals)
    def test_product_of_rationals(self, a, b):
        assert SqrtRat.from_rat(a) * SqrtRat.from_rat(b) == SqrtRat.from_rat(a * b)

    def test_refuses_addition(self):
        with pytest.raises(TypeError):
            SqrtRat(1, F(2)) + SqrtRat(1, F(3))

    def test_zero_convention(self):
        assert SqrtRat.from_signed_square(-1, 0) == SqrtRat.ZERO
        with pytest.raises(ValueError):
            SqrtRat(0, F(1))


def test_scalar_json():
    assert scalar_to_json(F(-1, 4)) == "-1/4"
    assert scalar_to_json(QuadRat(3)) == "3"
    assert scalar_to_json(QuadRat(0, 3)) == {"a": "0", "b": "3"}
    assert scalar_to_json(SqrtRat(-1, F(1, 2))) == {"sign": -1, "radicand": "1/2"}
