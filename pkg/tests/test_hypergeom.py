from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from su2mvop.hypergeom import (HypergeometricError, chu_vandermonde, corollary_checks, cor_a2_grid, cor_a2_sides,
                               cor_a3_grid, cor_a3_sides, d_r_coefficients, e_s_closed, e_s_eval, e_s_raw,
                               hyp_eval, prop_a1_grid, rfs, sheppard_check, sheppard_sides, sweep_cor_a2,
                               sweep_cor_a3, sweep_prop_a1, sweep_sheppard)
from su2mvop.scalars import half

from strategies import small_rationals


def test_hyp_eval_small_values():
    assert hyp_eval(rfs([-2, 1], [2])) == F(1, 3)
    assert hyp_eval(rfs([0, F(7, 3)], [F(1, 2)])) == 1
    # 1F0(-n;;z) = (1-z)^n
    assert hyp_eval(rfs([-3], [], F(1, 2))) == F(1, 8)


def test_hyp_eval_non_terminating():
    with pytest.raises(HypergeometricError) as exc:
        hyp_eval(rfs([F(1, 2), 1], [2]))
    assert exc.value.kind == "non-terminating"


def test_hyp_eval_denominator_pole():
    with pytest.raises(HypergeometricError) as exc:
        hyp_eval(rfs([-3, 1], [1, -1]))
    assert exc.value.kind == "denominator-pole"
    assert exc.value.index == 1
    # a pole at or past the termination index is never reached
    assert hyp_eval(rfs([-1, 1], [-1])) == 2


@given(st.integers(0, 10), small_rationals, small_rationals)
def test_chu_vandermonde_property(n, a, c):
    if any(c + k == 0 for k in range(n)):
        with pytest.raises(HypergeometricError):
            chu_vandermonde(n, a, c)
        return
    lhs, rhs = chu_vandermonde(n, a, c)
    assert lhs == rhs


def test_sheppard_frozen():
    assert sheppard_sides(3, F(1, 2), 2, 3, F(5, 2)) == (F(6705, 4), F(6705, 4))
    lhs, rhs = sheppard_sides(3, F(1, 2), 2, 3, F(5, 2), form="printed")
    assert (lhs, rhs) == (F(66780), F(6705, 4))
    assert sheppard_check(0, 1, 2, 3, 4, form="printed")


def test_sheppard_rejects_bad_form_and_poles():
    with pytest.raises(ValueError):
        sheppard_sides(2, 1, 1, 1, 1, form="other")
    with pytest.raises(HypergeometricError):
        sheppard_sides(3, 1, 1, -1, 2)


@given(st.integers(0, 6), small_rationals, small_rationals, small_rationals, small_rationals)
def test_sheppard_corrected_property(n, a, b, d, e):
    if any(v + k == 0 for v in (d, e) for k in range(n)):
        return
    assert sheppard_check(n, a, b, d, e)


def test_e_s_values():
    assert e_s_eval(half("1/2"), half("-1/2"), half("-1/2"), 0) == (F(2), F(2))
    assert e_s_eval(1, -1, -1, 0) == (F(3), F(3))


@pytest.mark.parametrize("args", list(prop_a1_grid(2)))
def test_e_s_raw_matches_closed(args):
    assert e_s_raw(*args) == e_s_closed(*args)


def test_d_r_coefficients_flat_case():
    rep = d_r_coefficients(1, 1, -1)
    assert rep.as_dict() == {half(-1): 1, half(0): 1, half(1): 1}
    assert rep.raw_matches and rep.partial_sum_matches and rep.flat
    assert rep.printed_relation_matches and rep.e_s_matches
    assert rep.passed


@pytest.mark.parametrize("l", ["1/2", 1, "3/2", 2])
def test_d_r_all_entries(l):
    l = half(l)
    n = int(l.twice) + 1
    for i in range(n):
        for j in range(n):
            p, q = half(F(i) - l.value), half(F(j) - l.value)
            assert d_r_coefficients(l, p, q).passed


def test_corollaries_small():
    assert corollary_checks(1, 2, 1, 1, 1)
    assert corollary_checks(1, 2, 1, 1, 0)
    assert corollary_checks(2, 3, 1, 1, 1)
    with pytest.raises(ValueError):
        corollary_checks(2, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        corollary_checks(3, 2, 1, 1, 1)
    assert cor_a2_sides(2, 1, 1, 0) == (F(1), F(1))


@pytest.mark.parametrize("args", list(cor_a2_grid(4)))
def test_cor_a2_grid(args):
    lhs, rhs = cor_a2_sides(*args)
    assert lhs == rhs


@pytest.mark.parametrize("args", list(cor_a3_grid(4)))
def test_cor_a3_grid(args):
    lhs, rhs = cor_a3_sides(*args)
    assert lhs == rhs


def test_sweep_counts():
    for res, n in ((sweep_prop_a1(3), 79), (sweep_cor_a2(12), 588), (sweep_cor_a3(10), 581), (sweep_sheppard(), 50)):
        assert res.checked == n and res.passed == n and not res.counterexamples
    printed = sweep_sheppard(form="printed")
    assert (printed.checked, printed.passed) == (50, 7)
    assert printed.counterexamples


def test_sweep_sheppard_deterministic():
    assert sweep_sheppard(seed=3) == sweep_sheppard(seed=3)
