from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2mvop.chebyshev import chebyshev_u
from su2mvop.core import (block_polys, cross_validate_pipelines, inner_product, is_block_diagonal_after_Y,
                          is_orthogonal_family, mirror, monic_polys, monic_polys_for, recurrence_consistency,
                          recurrence_residual, rho_moment, three_term_extract, weight_for)
from su2mvop.diffops import example_weight
from su2mvop.linalg import is_positive_definite, is_zero_matrix
from su2mvop.matpoly import MatPoly
from su2mvop.polynomials import Poly
from su2mvop.rodrigues import jacobi_monic
from su2mvop.scalars import PiRat, half

ELLS = [half(F(k, 2)) for k in range(6)]


def test_rho_moments():
    assert rho_moment(0) == F(1, 2)
    assert rho_moment(2) == F(1, 8)
    assert rho_moment(3) == 0


def test_scalar_case_is_chebyshev():
    fam = monic_polys(0, 8)
    for d in range(9):
        assert fam[d] == MatPoly([[chebyshev_u(d).scale(F(1, 2 ** d))]])


def test_spin_half_first_polynomial():
    fam = monic_polys(F(1, 2), 1)
    x, c = Poly([0, 1]), Poly([F(-1, 4)])
    assert fam[1] == MatPoly([[x, c], [c, x]])
    assert inner_product(fam[0], fam[0], weight_for(F(1, 2))) == [[PiRat(1), PiRat(0)], [PiRat(0), PiRat(1)]]
    assert all(v == 0 for row in inner_product(fam[1], fam[0], F(1, 2)) for v in row)


@pytest.mark.parametrize("l", ELLS)
def test_orthogonality_and_positive_norms(l):
    assert is_orthogonal_family(monic_polys(l, 8 if l.twice <= 3 else 6))


@pytest.mark.parametrize("l", ELLS)
def test_recurrence_residual_zero(l):
    fam = monic_polys(l, 6)
    for d in range(6):
        B, C = three_term_extract(fam, d)
        assert not recurrence_residual(fam, d, B, C)


def test_recurrence_examples():
    fam0 = monic_polys(0, 4)
    for d in range(1, 4):
        assert three_term_extract(fam0, d) == ([[0]], [[F(1, 4)]])
    fam = monic_polys(F(1, 2), 2)
    assert three_term_extract(fam, 0)[0] == [[0, F(1, 4)], [F(1, 4), 0]]
    # l = 1 first block in the rational frame, n = 1
    famb = monic_polys_for(example_weight(1), 3)
    B1, C1 = three_term_extract(famb, 1)
    assert B1 == [[0, F(1, 3)], [F(1, 12), 0]]
    assert C1 == [[F(1, 6), 0], [0, F(1, 9)]]


def test_extract_detects_a_broken_family():
    # a constant added to P_3 leaves a degree-0 residual that B_2, C_2 cannot absorb
    fam = monic_polys(F(1, 2), 4)
    fam.polys[3] = fam.polys[3] + MatPoly.identity(2)
    with pytest.raises(ArithmeticError):
        three_term_extract(fam, 2)


@pytest.mark.parametrize("l", ELLS[1:5])
def test_block_diagonal_after_Y(l):
    fam = monic_polys(l, 5)
    assert all(is_block_diagonal_after_Y(l, fam[d]) for d in range(6))


@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_projection_order_does_not_matter(d, rnd):
    def order(k):
        seq = list(range(k))
        rnd.shuffle(seq)
        return seq

    a = monic_polys(1, d)
    b = monic_polys(1, d, order=order)
    assert a.polys == b.polys


def test_bad_order_rejected():
    with pytest.raises(ValueError):
        monic_polys(1, 2, order=lambda k: [0] * k)


def test_spin_half_blocks_are_jacobi():
    fams = block_polys(F(1, 2), 5)
    for n in range(6):
        assert fams.family1[n].entries[0][0] == jacobi_monic(F(1, 2), F(3, 2), n)
        assert fams.family2[n].entries[0][0] == jacobi_monic(F(3, 2), F(1, 2), n)
    assert fams.mirror_holds


def test_spin_one_second_block_is_gegenbauer():
    fams = block_polys(1, 5)
    for n in range(6):
        assert fams.family2[n].entries[0][0] == jacobi_monic(F(3, 2), F(3, 2), n)


@pytest.mark.parametrize("l", [half(F(k, 2)) for k in (1, 3, 5)])
def test_mirror_between_blocks(l):
    fams = block_polys(l, 4)
    assert fams.mirror_holds
    assert fams.family2[1] == mirror(fams.family1[1], 1)


@pytest.mark.parametrize("l,dmax", [(0, 8), (F(1, 2), 4), (1, 3), (F(3, 2), 4)])
def test_pipelines_agree(l, dmax):
    r = cross_validate_pipelines(l, dmax)
    assert r.passed, r.mismatches


@pytest.mark.parametrize("l", ELLS[:4])
def test_recurrence_consistency_bigfloat(l):
    r = recurrence_consistency(l, 4)
    assert r.within(mpmath.mpf(2) ** -64)


def test_norms_positive_definite_and_pi_free_monic_coefficients():
    fam = monic_polys(2, 4)
    for H, P in zip(fam.norms, fam.polys):
        assert is_positive_definite(H)
        for mat in P.coeff_matrices():
            assert all(isinstance(c, F) for row in mat for c in row)
    assert is_zero_matrix([[0, 0], [0, 0]])
