from fractions import Fraction as F

import mpmath
import pytest

from su2mvop.chebyshev import chebyshev_u, laurent_to_poly_in_x
from su2mvop.linalg import det, inverse
from su2mvop.polynomials import LaurentPoly
from su2mvop.scalars import half
from su2mvop.spherical import (check_J_symmetries, full_sf, full_sf_Q, labels, laurent_det, pairing_expected,
                               recurrence_residual, restricted_sf, sf_pairing, zeta)

ELLS = [half(F(k, 2)) for k in range(5)]
u = LaurentPoly.mono


def test_zeta():
    assert zeta(0, F(-1, 2), F(1, 2)) == (half(0), half(F(1, 2)))
    assert zeta(4, 2, 2) == (half(4), half(2))
    assert zeta(3, F(3, 2), F(3, 2)) == (half(3), half(F(3, 2)))
    with pytest.raises(ValueError):
        zeta(0, 1, F(1, 2))


def test_restricted_examples():
    phi = restricted_sf(F(1, 2), 0, F(1, 2))
    assert phi[0][0] == u(1) and phi[1][1] == u(-1) and not phi[0][1]


@pytest.mark.parametrize("twice", range(7))
def test_zonal_is_character_over_dimension(twice):
    lp = half(F(twice, 2))
    phi = restricted_sf(lp, lp, 0)
    assert laurent_to_poly_in_x(phi[0][0]) == chebyshev_u(twice).scale(F(1, twice + 1))


@pytest.mark.parametrize("l", ELLS)
def test_identity_at_e(l):
    for d in range(4):
        F_ = full_sf(l, d)
        assert all(e.at_one() == 1 for row in F_ for e in row)
    for l1 in [half(F(k, 2)) for k in range(5)]:
        for l2 in [half(F(k, 2)) for k in range(5)]:
            try:
                phi = restricted_sf(l1, l2, l)
            except ValueError:
                continue
            n = len(phi)
            assert [[phi[i][j].at_one() for j in range(n)] for i in range(n)] == \
                [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_full_sf_examples():
    assert full_sf(F(1, 2), 0) == [[u(-1), u(1)], [u(1), u(-1)]]
    for d in range(6):
        assert laurent_to_poly_in_x(full_sf(0, d)[0][0]) == chebyshev_u(d).scale(F(1, d + 1))


@pytest.mark.parametrize("l", ELLS)
def test_orthogonality(l):
    phis = [full_sf(l, d) for d in range(7)]
    n = l.twice + 1
    for d in range(7):
        for e in range(7):
            want = pairing_expected(l, d) if d == e else [[0] * n for _ in range(n)]
            assert sf_pairing(phis[d], phis[e]) == want


def test_pairing_scalar_calibration():
    assert sf_pairing(full_sf(0, 0), full_sf(0, 0)) == [[1]]
    assert sf_pairing(full_sf(0, 1), full_sf(0, 1)) == [[F(1, 4)]]


@pytest.mark.parametrize("l", [half(F(k, 2)) for k in range(7)])
def test_phi0_invertible(l):
    assert laurent_det(full_sf(l, 0))


@pytest.mark.parametrize("l", ELLS)
def test_J_symmetries(l):
    for d in range(4):
        assert check_J_symmetries(l, d).passed


@pytest.mark.parametrize("l", ELLS[:4])
def test_Q_has_invertible_leading_coefficient(l):
    for d in range(5):
        Q = full_sf_Q(l, d)
        assert Q.degree == d
        assert det(Q.coeff(d)) != 0
        inverse(Q.coeff(d))


@pytest.mark.parametrize("l", ELLS[:4])
def test_recurrence_residual_bigfloat(l):
    for d in range(5):
        assert recurrence_residual(l, d) < mpmath.mpf(2) ** -64


def test_labels():
    assert labels(1) == [half(-1), half(0), half(1)]
