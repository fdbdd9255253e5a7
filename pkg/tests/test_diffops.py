from fractions import Fraction as F

import pytest

from su2mvop.core import monic_polys, monic_polys_for, weight_for
from su2mvop.diffops import (EXAMPLE_CORRECTIONS, RHSDiffOp, E_D_commute_via_eigenvalues, apply_rhs, commutes,
                             compare_printed_D, compose, conjugated_E, eigen_D, eigen_E, eigenvalue,
                             eigenvalue_check, example_ops, example_weight, op_D, op_E, op_from,
                             symmetric_operator_space, symmetry_check, verify_examples)
from su2mvop.linalg import diag, identity, zeros
from su2mvop.matpoly import MatPoly
from su2mvop.polynomials import Poly
from su2mvop.scalars import half

ELLS = [half(v) for v in ("1/2", 1, "3/2", 2)]


def test_apply_rhs_examples():
    assert apply_rhs(MatPoly.identity(3), op_E(1)) == MatPoly.constant(diag([-4, -2, 0]))
    assert not apply_rhs(MatPoly.zero(3), op_E(1))
    d = op_from(zeros(2), identity(2))
    assert apply_rhs(MatPoly.monomial(2, 1, identity(2)), d) == MatPoly.identity(2)


def test_l0_rejected():
    with pytest.raises(ValueError):
        op_E(0)
    with pytest.raises(ValueError):
        op_D(0)


def test_D_eigenvalue_at_last_index():
    for n in range(6):
        assert eigen_D(1)(n)[2][2] == n * (n - 1)


@pytest.mark.parametrize("l", ELLS)
def test_E_and_D_symmetric(l):
    w = weight_for(l)
    assert symmetry_check(op_E(l), w).passed
    assert symmetry_check(op_D(l), w).passed


@pytest.mark.parametrize("l", ELLS)
def test_eigen_equations(l):
    fam = monic_polys(l, 6)
    for op, tab in ((op_E(l), eigen_E(l)), (op_D(l), eigen_D(l))):
        rep = eigenvalue_check(fam, op, tab, 6)
        assert rep.passed, rep.failures
        # the table agrees with the coefficient formula sum_i [n]_i F_i^i
        assert all(eigenvalue(op, n) == tab(n) for n in range(7))


@pytest.mark.parametrize("l", ELLS)
def test_E_D_commute(l):
    assert commutes(op_E(l), op_D(l))
    assert E_D_commute_via_eigenvalues(l, 6)


def test_perturbed_E_fails_third_equation():
    E = op_E(1)
    A0 = [list(r) for r in E.F(0).coeff(0)]
    A0[0][0] += 1
    bad = RHSDiffOp([MatPoly.constant(A0), E.F(1)], "E+")
    rep = symmetry_check(bad, weight_for(1))
    assert rep.equations["eq1"] and rep.equations["eq2"] and not rep.equations["eq3"]


@pytest.mark.parametrize("l", ELLS)
def test_printed_D_fails_and_corrected_passes(l):
    r = compare_printed_D(l, 3)
    assert not r.printed_symmetric and r.printed_failed_equations == ["eq2", "eq3"]
    assert r.corrected_symmetric and r.corrected_eigen_ok


@pytest.mark.parametrize("l", ELLS)
def test_symmetric_implies_eigen(l):
    """Every symmetric operator in the solved space has the monic polynomials as eigenfunctions."""
    w = weight_for(l)
    fam = monic_polys(l, 4)
    for D in symmetric_operator_space(w):
        assert symmetry_check(D, w).passed
        assert eigenvalue_check(fam, D, None, 4).passed


def test_example_space_dimension():
    # I, D1, D2, D3 span the symmetric second-order operators of the l = 3/2 block
    assert len(symmetric_operator_space(example_weight(F(3, 2)))) == 4


@pytest.mark.parametrize("l", [half(1), half("3/2"), half(2)])
def test_worked_examples(l):
    r = verify_examples(l, 6)
    assert r.passed
    assert r.commutation == {"D1D2": True, "D1D3": False, "D2D3": False}


def test_example_corrections_are_needed():
    assert not verify_examples(F(3, 2)).printed_symmetric["D2"]
    assert not verify_examples(2).printed_symmetric["D1"]
    assert verify_examples(1).printed_symmetric == {"D1": True, "D2": True, "D3": True}
    assert set(EXAMPLE_CORRECTIONS) == {(half("3/2"), "D2"), (half(2), "D1")}


def test_composition_is_leibniz():
    D = op_E(1)
    P = monic_polys(1, 3)[3]
    assert apply_rhs(P, compose(D, D)) == apply_rhs(apply_rhs(P, D), D)
    ops = dict((d.name, d) for d, _ in example_ops(2))
    assert compose(ops["D2"], ops["D3"]) != compose(ops["D3"], ops["D2"])


@pytest.mark.parametrize("l", ELLS)
def test_conjugated_E(l):
    r = conjugated_E(l)
    assert r.passed
    assert r.diagonal_constant == -(l + 1).value
    assert r.prop_blocks["first-order block (reindexed)"] and r.prop_blocks["constant block (reindexed)"]
    if l.is_integral:
        assert not r.prop_blocks["v1 (printed)"]
    else:
        assert r.prop_blocks["second block mirror (signs (-1)^(n+1), (-1)^n)"]


def test_conjugated_E_composed_equation_l32():
    assert not conjugated_E(F(3, 2), 4).composed


def test_example_weight_frames():
    w = example_weight(1)
    assert w.Z.entries[0][1] == Poly([0, 3])
    fam = monic_polys_for(w, 2)
    assert fam[0] == MatPoly.identity(2)
