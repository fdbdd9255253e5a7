from fractions import Fraction as F

import pytest

from su2mvop.chebyshev import ChebExpansion, cheb_product, cheb_to_poly, poly_in_x_to_laurent
from su2mvop.matpoly import MatPoly
from su2mvop.polynomials import Poly
from su2mvop.scalars import QuadRat, half
from su2mvop.spherical import labels
from su2mvop.verify import printed_weights
from su2mvop.weight import (block_split, block_split_by_conjugation, check_symmetries, commutant_basis,
                            commutant_is_span_I_J, det_conjecture_check, is_positive_definite_at, printed_entry,
                            trace_product_expansion, weight_coeff_c, weight_entry_cheb, weight_from_spherical,
                            weight_W_monomial, weight_Z)

ELLS = [half(F(k, 2)) for k in range(6)]
FULL, BLOCKS = printed_weights()


def test_coefficient_examples():
    assert weight_coeff_c(F(1, 2), F(-1, 2), F(-1, 2), 0) == 2
    assert weight_coeff_c(1, -1, 0, 0) == F(3, 2)


@pytest.mark.parametrize("l", list(FULL))
def test_printed_full_weights(l):
    assert weight_W_monomial(l) == FULL[l]


def test_l0_is_rho():
    assert weight_W_monomial(0) == MatPoly([[Poly([1])]])


@pytest.mark.parametrize("key", list(BLOCKS))
def test_printed_blocks(key):
    l, b = key
    a, bb, M = BLOCKS[key]
    s = block_split(l)
    W = s.W1 if b == 1 else s.W2
    assert (W.a, W.b) == (a, bb)
    assert W.matrix == M


def test_l1_second_block_is_4_one_minus_x2_rho():
    W2 = block_split(1).W2
    assert W2.rho_times() == MatPoly([[Poly([4, 0, -4])]])


@pytest.mark.parametrize("l", ELLS)
def test_formula_equals_phi0_phi0_star(l):
    assert weight_W_monomial(l) == weight_from_spherical(l)


@pytest.mark.parametrize("l", ELLS)
def test_printed_entry_with_reflection(l):
    n = l.twice + 1
    Z = weight_Z(l)
    for i in range(n):
        for j in range(n):
            assert printed_entry(l, i, j) == Z.entries[i][j]


def test_printed_entry_clamped_fails_where_negative_indices_occur():
    assert printed_entry(1, 0, 2, "clamp") != weight_Z(1).entries[0][2]


@pytest.mark.parametrize("l", ELLS)
def test_symmetries(l):
    assert all(check_symmetries(l).values())


@pytest.mark.parametrize("l", ELLS[:5])
def test_positive_definite_on_grid(l):
    for x in (F(-9, 10), F(-1, 2), 0, F(1, 2), F(9, 10)):
        assert is_positive_definite_at(l, x)


@pytest.mark.parametrize("l", ELLS[1:])
def test_Y_conjugation_block_diagonal(l):
    B1, B2, off_zero = block_split_by_conjugation(l)
    assert off_zero
    s = block_split(l)
    lift = lambda M: M.map(lambda e: e.scale(QuadRat(1)))  # noqa: E731
    assert lift(s.W1.rho_times()) == lift(B1)
    assert lift(s.W2.rho_times()) == lift(B2)


def test_commutant():
    assert commutant_basis(0) == [[[1]]]
    for l in ELLS[1:5]:
        assert len(commutant_basis(l)) == 2
        assert commutant_is_span_I_J(l)


def test_determinant_examples():
    x2 = Poly([1, 0, -1])
    assert det_conjecture_check(0).lhs == Poly([1])
    assert det_conjecture_check(F(1, 2)).lhs == x2 * 4
    assert det_conjecture_check(1).lhs == x2 ** 3 * 16


@pytest.mark.parametrize("l", [half(F(k, 2)) for k in range(7)])
def test_determinant_conjecture(l):
    r = det_conjecture_check(l)
    assert r.holds and r.lhs == r.rhs
    assert r.leading_coefficient == r.leading_signed_form


def test_determinant_bound_is_explicit():
    with pytest.raises(ValueError):
        det_conjecture_check(F(7, 2))


def test_entry_cheb_positive_index_range():
    for l in ELLS:
        for p in labels(l):
            for q in labels(l):
                e = weight_entry_cheb(l, p, q)
                assert e.degree <= l.twice


def test_trace_product_scalar_case_is_chebyshev_linearisation():
    r = trace_product_expansion(0, 1, 1, F(1, 2), F(1, 2))
    prod = cheb_product(ChebExpansion.U(2), ChebExpansion.U(1)).scale(F(1, 6))
    lp = poly_in_x_to_laurent(cheb_to_poly(prod))
    assert r.coefficients == {F(k, 2): c for k, c in lp.terms.items()}
    assert r.matches_laurent


def test_trace_product_laurent_agreement_and_flatness():
    for l in ELLS[1:4]:
        for p in labels(l):
            l1, l2 = half((l + p).value / 2), half((l - p).value / 2)
            h = half(F(1, 2))
            r = trace_product_expansion(l, l1 + h, l2 + h, l1, l2)
            assert r.matches_laurent and r.flat
    assert trace_product_expansion(1, 1, 0, 1, 0).coefficients == {F(0): 3}
