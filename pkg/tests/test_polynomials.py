from fractions import Fraction as F

import pytest
from hypothesis import given

from strategies import rational_lists
from su2mvop.linalg import (adjugate, bareiss_det, det, identity, inverse, is_positive_definite, matmul, nullspace,
                            rank)
from su2mvop.matpoly import MatPoly
from su2mvop.polynomials import LaurentPoly, Poly

polys = rational_lists(0, 6).map(Poly)
nonzero_polys = rational_lists(1, 5).map(Poly).filter(lambda p: bool(p))


@given(polys, nonzero_polys)
def test_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


@given(polys, nonzero_polys)
def test_exact_div(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))


@given(polys)
def test_reflect_and_derivative(p):
    assert p.reflect().reflect() == p
    assert p.derivative(2) == p.derivative().derivative()


def test_laurent_basics():
    f = LaurentPoly({1: 1, -1: 1})
    assert (f * f).coeff(0) == 2
    assert f.conj() == f
    assert LaurentPoly({3: 2}).conj() == LaurentPoly({-3: 2})
    assert (f * f).exact_div(f) == f


def test_linalg_inverse_and_det():
    a = [[F(2), F(1)], [F(1), F(3)]]
    assert matmul(a, inverse(a)) == identity(2)
    assert det(a) == 5
    assert is_positive_definite(a)
    assert not is_positive_definite([[F(1), F(2)], [F(2), F(1)]])


def test_nullspace_and_rank():
    a = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    assert rank(a) == 1
    ns = nullspace(a)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in a)


def test_polynomial_det_and_adjugate():
    x2 = Poly([1, 0, -1])
    m = [[Poly([2]), Poly([0, 2])], [Poly([0, 2]), Poly([2])]]
    d = bareiss_det(m, Poly.exact_div, Poly.const(1))
    assert d == x2 * 4
    adj = adjugate(m, Poly.exact_div, Poly.const(1))
    prod = matmul(m, adj)
    assert prod[0][0] == d and prod[1][1] == d and not prod[0][1]


def test_matpoly_algebra():
    x = MatPoly([[Poly([0, 1]), Poly([F(-1, 4)])], [Poly([F(-1, 4)]), Poly([0, 1])]])
    assert x.degree == 1
    assert x.leading() == identity(2)
    assert x.coeff(0) == [[0, F(-1, 4)], [F(-1, 4), 0]]
    assert (x @ MatPoly.identity(2)) == x
    assert x.transpose() == x
    assert MatPoly.from_coeff_matrices(x.coeff_matrices()) == x
    assert x.derivative() == MatPoly.identity(2)
