from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import rational_lists, small_rationals
from su2mvop.chebyshev import (ChebExpansion, cheb_derivative, cheb_inner, cheb_integral, cheb_mul_x, cheb_product,
                               cheb_rho_derivative, cheb_to_poly, cheb_weighted_antiderivative, chebyshev_u,
                               laurent_to_poly_in_x, poly_in_x_to_laurent, poly_to_cheb)
from su2mvop.polynomials import LaurentPoly, Poly
from su2mvop.scalars import PiRat

U = ChebExpansion.U
cheb = st.builds(ChebExpansion, rational_lists(0, 12))


def test_mul_x():
    assert cheb_mul_x(U(0)) == U(1, F(1, 2))
    assert cheb_mul_x(U(1)) == U(0, F(1, 2)) + U(2, F(1, 2))
    assert cheb_mul_x(ChebExpansion()) == ChebExpansion()


def test_derivative_cleared_form():
    assert cheb_derivative(U(1)) == U(0, 3) - U(2)
    assert cheb_derivative(U(0)) == ChebExpansion()
    assert cheb_derivative(U(2)) == U(1, 4) - U(3, 2)


@given(cheb)
def test_derivative_matches_monomial_basis(e):
    p = cheb_to_poly(e)
    assert cheb_to_poly(cheb_derivative(e)) == p.derivative() * Poly([2, 0, -2])


def test_weighted_antiderivative_examples():
    assert cheb_weighted_antiderivative(U(1)) == U(2, F(1, 6)) - U(0, F(1, 2))
    assert cheb_weighted_antiderivative(ChebExpansion()) == ChebExpansion()


def test_weighted_antiderivative_of_U0_does_not_exist():
    # d/dx(rho U_1 / 4) = (1 - 2x^2)/rho, which is not rho
    with pytest.raises(ValueError):
        cheb_weighted_antiderivative(U(0))
    assert cheb_rho_derivative(U(1, F(1, 4))) != poly_to_cheb(Poly([2, 0, -2]))


@given(cheb.map(lambda e: e - U(0, e[0])))
def test_weighted_antiderivative_inverts_rho_derivative(e):
    # 2(1-x^2)(rho g)'/rho = 2(1-x^2) e
    g = cheb_weighted_antiderivative(e)
    assert cheb_rho_derivative(g) == poly_to_cheb(cheb_to_poly(e) * Poly([2, 0, -2]))


def test_inner_products():
    assert cheb_inner(U(2), U(2)) == PiRat(F(1, 2))
    assert cheb_inner(U(1), U(3)) == 0
    assert cheb_inner(U(0) + U(2), U(2)) == PiRat(F(1, 2))
    assert cheb_integral(U(0)) == PiRat(F(1, 2))


@given(cheb, cheb)
def test_multiplication_by_x_self_adjoint(a, b):
    assert cheb_inner(cheb_mul_x(a), b) == cheb_inner(a, cheb_mul_x(b))


@given(cheb, cheb)
def test_product_matches_monomials(a, b):
    assert cheb_to_poly(cheb_product(a, b)) == cheb_to_poly(a) * cheb_to_poly(b)


def test_basis_change_examples():
    assert cheb_to_poly(U(2)) == Poly([-1, 0, 4])
    assert poly_to_cheb(Poly([0, 0, 1])) == U(2, F(1, 4)) + U(0, F(1, 4))
    assert poly_to_cheb(Poly([1])) == U(0)
    assert chebyshev_u(3) == Poly([0, -4, 0, 8])


@given(cheb)
def test_basis_roundtrip(e):
    assert poly_to_cheb(cheb_to_poly(e)) == e


def test_laurent_to_x():
    assert laurent_to_poly_in_x(LaurentPoly({2: 1, -2: 1})) == Poly([0, 2])
    assert laurent_to_poly_in_x(LaurentPoly({4: 1, -4: 1})) == Poly([-2, 0, 4])
    assert laurent_to_poly_in_x(LaurentPoly.const(5)) == Poly([5])


def test_laurent_to_x_against_sampling():
    import math

    f = LaurentPoly({4: 1, -4: 1})
    p = laurent_to_poly_in_x(f)
    for k in range(10):
        t = 0.3 * k + 0.1
        assert abs(float(p(F(math.cos(t)))) - 2 * math.cos(2 * t)) < 1e-12


@given(rational_lists(1, 6), rational_lists(1, 6))
def test_laurent_to_x_multiplicative(a, b):
    f, g = poly_in_x_to_laurent(Poly(a)), poly_in_x_to_laurent(Poly(b))
    assert laurent_to_poly_in_x(f * g) == Poly(a) * Poly(b)


@given(small_rationals, st.integers(0, 8))
def test_u_values_at_one(c, n):
    assert chebyshev_u(n)(F(1)) == n + 1
