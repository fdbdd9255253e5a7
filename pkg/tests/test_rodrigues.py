from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2mvop.core import MatrixWeight, monic_polys_for
from su2mvop.diffops import example_weight
from su2mvop.matpoly import MatPoly
from su2mvop.polynomials import Poly
from su2mvop.rodrigues import (JACOBI_REDUCTIONS, GenJacobiSum, jacobi_monic, jacobi_P, jacobi_P_rodrigues,
                               jacobi_reduction, mirror_check, norms, omega_from_norms, recurrence_tables,
                               rodrigues_check, rodrigues_constant, rodrigues_jacobi_form, rodrigues_P1)
from su2mvop.scalars import PiRat, half

HALF_ODD = [F(1, 2), F(3, 2), F(5, 2)]


def _jacobi_weight(a, b):
    """(1-x)^a (1+x)^b for half-odd a, b, as rho times a polynomial."""
    p = Poly([1, -1]) ** int(a - F(1, 2)) * Poly([1, 1]) ** int(b - F(1, 2))
    return MatrixWeight(MatPoly([[p]]))


def test_jacobi_monic_examples():
    assert jacobi_monic(F(1, 2), F(3, 2), 1) == Poly([F(-1, 4), 1])
    assert jacobi_monic(F(5, 2), F(-1, 2), 0) == Poly([1])
    assert jacobi_monic(F(3, 2), F(3, 2), 2) == monic_polys_for(_jacobi_weight(F(3, 2), F(3, 2)), 2)[2][0, 0]
    with pytest.raises(ValueError):
        jacobi_monic(-1, 0, 2)


@given(st.sampled_from(HALF_ODD), st.sampled_from(HALF_ODD))
def test_jacobi_monic_against_gram_schmidt(a, b):
    fam = monic_polys_for(_jacobi_weight(a, b), 5)
    for n in range(6):
        assert jacobi_monic(a, b, n) == fam[n][0, 0]


HALVES = [F(k, 2) for k in range(-1, 9)]


@given(st.sampled_from(HALVES), st.sampled_from(HALVES), st.integers(0, 6))
def test_jacobi_hypergeometric_equals_rodrigues(a, b, n):
    assert jacobi_P(a, b, n) == jacobi_P_rodrigues(a, b, n)


def test_generalised_jacobi_derivative():
    s = GenJacobiSum.from_poly(Poly([1, 2, 3]), F(1, 2), F(3, 2))
    # d/dx[(1-x)^a (1+x)^b p] then factoring the weight back out
    d = s.derivative(1).factor_out(F(-1, 2), F(1, 2))
    x1m, x1p = Poly([1, -1]), Poly([1, 1])
    p = Poly([1, 2, 3])
    expected = p.derivative() * x1m * x1p + p * (x1m * F(3, 2) - x1p * F(1, 2))
    assert d == expected


@pytest.mark.parametrize("key", list(JACOBI_REDUCTIONS))
def test_jacobi_reductions(key):
    assert jacobi_reduction(*key).passed


@pytest.mark.parametrize("l", [half(1), half("3/2"), half(2)])
def test_rodrigues_formula(l):
    r = rodrigues_check(l, 4)
    assert r.passed
    assert rodrigues_P1(l, 0) == MatPoly.identity(2)


def test_rodrigues_constant_rational():
    for l in (1, F(3, 2), 2):
        for n in range(5):
            assert isinstance(rodrigues_constant(l, n), F)


@pytest.mark.parametrize("l", [half(1), half("3/2"), half(2)])
def test_jacobi_expansion_form(l):
    for n in range(4):
        assert rodrigues_jacobi_form(l, n) == rodrigues_P1(l, n)


def test_mirror_l32():
    m = mirror_check(4)
    assert m.passed
    assert m.unsigned_monic == [n % 2 == 0 for n in range(5)]


@pytest.mark.parametrize("l", [half(1), half("3/2"), half(2)])
def test_monic_tables(l):
    t = recurrence_tables(l, 6)
    assert t.residual_zero
    assert all(r.matched for r in t.rows if r.name in ("Bt", "Ct"))


def test_orthonormal_table_findings():
    t1 = recurrence_tables(1, 4)
    assert all(r.matched for r in t1.by_name("A"))
    assert not any(r.matched for r in t1.by_name("B"))
    t2 = recurrence_tables(2, 4)
    assert not any(r.matched for r in t2.by_name("A"))
    assert all(r.matched for r in t2.by_name("B"))
    t32 = recurrence_tables(F(3, 2), 4)
    assert all(r.matched for r in t32.rows)


def test_norm_l1_first_entries():
    t = norms(1, 0)
    row = next(r for r in t.rows if r.frame == "displayed")
    assert row.computed[0][0] == PiRat(F(3, 2)) and row.matches[0][0]
    assert row.computed[1][1] == PiRat(F(9, 8))
    assert row.printed[1][1] == PiRat(F(9, 16)) and not row.matches[1][1]
    assert row.computed[0][1] == 0 and row.computed[1][0] == 0
    rational = next(r for r in t.rows if r.frame == "rational")
    assert all(all(m) for m in rational.matches)


def test_norm_direct_integration():
    # int rho (x^2 + 2) dx = pi/8 + pi = 9 pi / 8
    w = MatrixWeight(MatPoly([[Poly([2, 0, 1])]]))
    assert w.moment(0) == [[F(9, 8)]]


def test_omega_l1_matches():
    assert omega_from_norms(1, 3)


def test_table_weight_l1_is_rational_frame():
    assert example_weight(1).Z.entries[1][1] == Poly([1, 0, F(1, 2)])
