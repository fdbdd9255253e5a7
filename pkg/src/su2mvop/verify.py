"""Verification suites, one per acceptance criterion, and their aggregation.

A case has one of three statuses.  ``pass`` and ``fail`` are the usual
outcomes; ``paper-mismatch`` marks a printed closed form that disagrees with
the exact computation.  Mismatches are reported but never fail a run.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

from . import weight as weight_mod
from .clebsch_gordan import DEFAULT_PRECISION_BITS
from .matpoly import MatPoly
from .polynomials import Poly
from .scalars import HalfInt, QuadRat, half, rat_str, scalar_to_json

PASS, FAIL, MISMATCH = "pass", "fail", "paper-mismatch"
F = Fraction


@dataclass
class CaseResult:
    name: str
    status: str
    params: dict = field(default_factory=dict)
    detail: object = None

    def to_json(self):
        return {"name": self.name, "status": self.status, "params": jsonable(self.params),
                "detail": jsonable(self.detail)}


@dataclass
class SuiteReport:
    suite: str
    criterion: int
    cases: list = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, name, ok, params=None, detail=None, mismatch=False):
        status = PASS if ok else (MISMATCH if mismatch else FAIL)
        self.cases.append(CaseResult(name, status, params or {}, detail))

    def fail(self, name, params=None, detail=None):
        self.cases.append(CaseResult(name, FAIL, params or {}, detail))

    def count(self, status) -> int:
        return sum(c.status == status for c in self.cases)

    @property
    def status(self) -> str:
        if not self.cases or self.count(FAIL):
            return FAIL
        return MISMATCH if self.count(MISMATCH) else PASS

    def to_json(self, timing: bool = True):
        out = {"suite": self.suite, "criterion": self.criterion, "status": self.status,
               "counts": {s: self.count(s) for s in (PASS, FAIL, MISMATCH)},
               "cases": [c.to_json() for c in self.cases]}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


@dataclass
class VerificationReport:
    suites: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failed_suites(self):
        return [s.suite for s in self.suites if s.status == FAIL]

    @property
    def mismatches(self):
        return [(s.suite, c.name) for s in self.suites for c in s.cases if c.status == MISMATCH]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed_suites else 0

    def to_json(self, timing: bool = True):
        out = {"suites": [s.to_json(timing) for s in self.suites], "failed_suites": self.failed_suites,
               "paper_mismatches": [list(m) for m in self.mismatches], "exit_code": self.exit_code}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def jsonable(x):
    """Canonical JSON-ready form: rationals as 'num/den', exact scalars via their own encoders."""
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return rat_str(x)
    if isinstance(x, QuadRat):
        return scalar_to_json(x)
    if isinstance(x, HalfInt):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


# ---------------------------------------------------------------------------
# fault injection


@dataclass(frozen=True)
class Fault:
    """Add ``delta`` to one weight coefficient c_n(p, q) of spin l."""

    l: HalfInt = half(1)
    p: HalfInt = half(0)
    q: HalfInt = half(0)
    n: int = 0
    delta: Fraction = F(1)


def _clear_caches():
    from . import rodrigues

    rodrigues._table_family.cache_clear()


@contextmanager
def injected(fault: Fault | None):
    if fault is None:
        yield
        return
    original = weight_mod.c_formula

    def patched(l, p, q, n):
        v = original(l, p, q, n)
        if (half(l), half(p), half(q), n) == (fault.l, fault.p, fault.q, fault.n):
            v += fault.delta
        return v

    weight_mod.c_formula = patched
    _clear_caches()
    try:
        yield
    finally:
        weight_mod.c_formula = original
        _clear_caches()


# ---------------------------------------------------------------------------
# printed weight displays


def _P(*c):
    return Poly([F(x) for x in c])


def printed_weights():
    """The displayed full weights (polynomial part Z of W = rho Z) and blocks.

    Blocks are (a, b, matrix) for (1-x)^a (1+x)^b matrix.
    """
    t = F(4, 3)
    n9 = F(4, 9)
    full = {
        half(0): MatPoly([[_P(1)]]),
        half("1/2"): MatPoly([[_P(2), _P(0, 2)], [_P(0, 2), _P(2)]]),
        half(1): MatPoly([[_P(3), _P(0, 3), _P(-1, 0, 4)],
                          [_P(0, 3), _P(2, 0, 1), _P(0, 3)],
                          [_P(-1, 0, 4), _P(0, 3), _P(3)]]),
        half("3/2"): MatPoly([
            [_P(4), _P(0, 4), _P(-t, 0, 4 * t), _P(0, -4, 0, 8)],
            [_P(0, 4), _P(5 * n9, 0, 4 * n9), _P(0, 7 * n9, 0, 2 * n9), _P(-t, 0, 4 * t)],
            [_P(-t, 0, 4 * t), _P(0, 7 * n9, 0, 2 * n9), _P(5 * n9, 0, 4 * n9), _P(0, 4)],
            [_P(0, -4, 0, 8), _P(-t, 0, 4 * t), _P(0, 4), _P(4)]]),
    }
    blocks = {
        (half("1/2"), 1): (half("1/2"), half("3/2"), MatPoly([[_P(2)]])),
        (half("1/2"), 2): (half("3/2"), half("1/2"), MatPoly([[_P(2)]])),
        (half(1), 1): (half("1/2"), half("1/2"), MatPoly([
            [Poly([QuadRat(2), QuadRat(0), QuadRat(4)]), Poly([QuadRat(0), QuadRat(0, 3)])],
            [Poly([QuadRat(0), QuadRat(0, 3)]), Poly([QuadRat(2), QuadRat(0), QuadRat(1)])]])),
        (half(1), 2): (half("3/2"), half("3/2"), MatPoly([[_P(4)]])),
        (half("3/2"), 1): (half("1/2"), half("3/2"), MatPoly([
            [_P(1, -2, 2), _P(F(-1, 3), F(4, 3))],
            [_P(F(-1, 3), F(4, 3)), _P(F(5, 9), F(2, 9), F(2, 9))]]).scale(F(4))),
        (half(2), 2): (half("3/2"), half("3/2"), MatPoly([[_P(4, 0, 1), _P(0, 10)], [_P(0, 10), _P(4, 0, 16)]])),
    }
    return full, blocks


# ---------------------------------------------------------------------------
# suites


def _ells(default, ells):
    if ells is None:
        return list(default)
    wanted = {half(v) for v in ells}
    return [l for l in default if half(l) in wanted]


def _H(*vals):
    return [half(v) for v in vals]


def suite_spherical_orthogonality(ells=None, dmax=6) -> SuiteReport:
    from .spherical import full_sf, pairing_expected, sf_pairing

    rep = SuiteReport("spherical-orthogonality", 1)
    for l in _ells(_H(0, "1/2", 1, "3/2", 2), ells):
        phis = [full_sf(l, d) for d in range(dmax + 1)]
        n = l.twice + 1
        for d in range(dmax + 1):
            for e in range(d + 1):
                got = sf_pairing(phis[d], phis[e])
                want = pairing_expected(l, d) if d == e else [[F(0)] * n for _ in range(n)]
                rep.add(f"<Phi_{d}, Phi_{e}>", got == want, {"l": l, "d": d, "e": e})
    return rep


def suite_mvop_orthogonality(ells=None, dmax=8) -> SuiteReport:
    from .core import inner_product_stripped, monic_polys
    from .linalg import is_positive_definite, is_zero_matrix

    rep = SuiteReport("mvop-orthogonality", 2)
    for l in _ells(_H(0, "1/2", 1, "3/2", 2, "5/2"), ells):
        fam = monic_polys(l, dmax)
        for d in range(dmax + 1):
            for e in range(d):
                ok = is_zero_matrix(inner_product_stripped(fam[d], fam[e], fam.weight))
                rep.add(f"<P_{d}, P_{e}> = 0", ok, {"l": l, "d": d, "e": e})
            rep.add(f"<P_{d}, P_{d}> > 0", is_positive_definite(fam.norms[d]), {"l": l, "d": d})
    return rep


def suite_pipeline_equivalence(ells=None, dmax=4) -> SuiteReport:
    from .core import cross_validate_pipelines

    rep = SuiteReport("pipeline-equivalence", 3)
    for l in _ells(_H(0, "1/2", 1, "3/2"), ells):
        cv = cross_validate_pipelines(l, dmax)
        rep.add("Upsilon^-1 Q_d = P_d", cv.passed, {"l": l, "dmax": dmax}, cv.mismatches)
    return rep


def suite_weight_reproduction(ells=None) -> SuiteReport:
    from .weight import block_split, weight_W_monomial, weight_from_spherical

    rep = SuiteReport("weight-reproduction", 4)
    full, blocks = printed_weights()
    for l in _ells(list(full), ells):
        Z = weight_W_monomial(l)
        rep.add("displayed W", Z == full[l], {"l": l})
        rep.add("formula = Phi_0 Phi_0^*", Z == weight_from_spherical(l), {"l": l})
    for (l, b), (a, bb, M) in blocks.items():
        if ells is not None and l not in {half(v) for v in ells}:
            continue
        s = block_split(l)
        W = s.W1 if b == 1 else s.W2
        ok = (W.a, W.b) == (a, bb) and W.matrix == M
        rep.add(f"displayed block {b}", ok, {"l": l, "block": b})
    return rep


def suite_det_conjecture(ells=None, lmax=3) -> SuiteReport:
    from .weight import det_conjecture_check

    rep = SuiteReport("det-conjecture", 5)
    default = [half(F(k, 2)) for k in range(0, half(lmax).twice + 1)]
    for l in _ells(default, ells):
        r = det_conjecture_check(l, bound=lmax)
        rep.add("det Z = (1-x^2)^{l(2l+1)} prod 2^{2l} c_0(p,-p)", r.holds, {"l": l})
        rep.add("signed leading coefficient", not r.notes, {"l": l}, r.notes, mismatch=True)
    return rep


def suite_commutant(ells=None) -> SuiteReport:
    from .weight import commutant_basis, commutant_is_span_I_J

    rep = SuiteReport("commutant", 6)
    for l in _ells(_H("1/2", 1, "3/2", 2), ells):
        rep.add("dim = 2", len(commutant_basis(l)) == 2, {"l": l})
        rep.add("span{I, J}", commutant_is_span_I_J(l), {"l": l})
    return rep


def suite_operators(ells=None, nmax=6) -> SuiteReport:
    from .core import monic_polys
    from .diffops import (E_D_commute_via_eigenvalues, commutes, compare_printed_D, eigen_D, eigen_E,
                          eigenvalue_check, op_D, op_E, symmetry_check)

    rep = SuiteReport("operators-E-D", 7)
    for l in _ells(_H("1/2", 1, "3/2", 2), ells):
        fam = monic_polys(l, nmax)
        for name, op, table in (("E", op_E(l), eigen_E(l)), ("D", op_D(l), eigen_D(l))):
            sym = symmetry_check(op, fam.weight)
            rep.add(f"{name} symmetric", sym.passed, {"l": l}, sym.failed())
            eig = eigenvalue_check(fam.polys, op, table, nmax)
            rep.add(f"{name} eigen", eig.passed, {"l": l, "nmax": nmax}, getattr(eig, "failures", None))
        rep.add("E D = D E", commutes(op_E(l), op_D(l)) and E_D_commute_via_eigenvalues(l, nmax), {"l": l})
        pr = compare_printed_D(l, min(nmax, 4))
        rep.add("corrected D symmetric with its eigenvalues", pr.corrected_symmetric and pr.corrected_eigen_ok,
                {"l": l})
        rep.add("printed D", pr.printed_symmetric and pr.printed_eigen_table_ok, {"l": l},
                {"failed_equations": pr.printed_failed_equations}, mismatch=True)
    return rep


def suite_example_operators(ells=None, nmax=6) -> SuiteReport:
    from .diffops import EXAMPLE_CORRECTIONS, verify_examples

    rep = SuiteReport("example-operators", 8)
    for l in _ells(_H(1, "3/2", 2), ells):
        r = verify_examples(l, nmax)
        for k, v in r.symmetric.items():
            rep.add(f"{k} symmetric", v, {"l": l})
        for k, v in r.eigen.items():
            rep.add(f"{k} eigen", v, {"l": l})
        for k, v in r.table_matches_formula.items():
            rep.add(f"{k} printed eigenvalue table", v, {"l": l})
        # D1 and D2 commute; D3 commutes with neither
        expected = {"D1D2": True, "D1D3": False, "D2D3": False}
        for k, v in r.commutation.items():
            rep.add(f"commutation {k} is {expected[k]}", v == expected[k], {"l": l})
        for k, v in r.eigen_commutation.items():
            rep.add(f"eigenvalue commutation {k} is {expected[k]}", v == expected[k], {"l": l})
        for (ll, name), (_, desc) in EXAMPLE_CORRECTIONS.items():
            if ll == l:
                rep.add(f"printed {name}", r.printed_symmetric.get(name, False), {"l": l}, desc, mismatch=True)
    return rep


def suite_rodrigues(ells=None, nmax=4) -> SuiteReport:
    from .rodrigues import mirror_check, rodrigues_check

    rep = SuiteReport("rodrigues", 9)
    for l in _ells(_H(1, "3/2", 2), ells):
        r = rodrigues_check(l, nmax)
        for n in range(nmax + 1):
            p = {"l": l, "n": n}
            rep.add("rodrigues_P1 = monic P_{n,1}", r.equal_to_monic[n], p)
            rep.add("monic and orthogonal to x^m, m < n", r.orthogonal_to_lower[n], p)
            rep.add("Jacobi expansion = derivative form", r.jacobi_form_equal[n], p)
        if l == half("3/2"):
            m = mirror_check(nmax)
            rep.add("signed mirror family monic orthogonal for W2", m.passed, {"l": l})
            rep.add("unsigned mirror form monic", all(m.unsigned_monic), {"l": l},
                    "J F P(-x) F J without (-1)^n has leading -I for odd n", mismatch=True)
    return rep


def suite_recurrence(ells=None, dmax=4, precision_bits=DEFAULT_PRECISION_BITS) -> SuiteReport:
    import mpmath

    from .core import monic_polys, recurrence_consistency, three_term_extract

    rep = SuiteReport("recurrence-consistency", 10)
    tol = mpmath.mpf(2) ** -64
    for l in _ells(_H(0, "1/2", 1, "3/2"), ells):
        fam = monic_polys(l, dmax + 1)
        try:
            for d in range(dmax + 1):
                three_term_extract(fam, d)
            rep.add("exact residual zero", True, {"l": l, "dmax": dmax})
        except ArithmeticError as exc:
            rep.fail("exact residual zero", {"l": l}, str(exc))
        rc = recurrence_consistency(l, dmax, precision_bits)
        rep.add("|a|^2 recurrence agrees within 2^-64", rc.within(tol), {"l": l, "bits": precision_bits},
                mpmath.nstr(rc.max_error, 5))
    return rep


def suite_identities(lmax=3, n_a2=12, n_a3=10) -> SuiteReport:
    from .hypergeom import sweep_cor_a2, sweep_cor_a3, sweep_prop_a1, sweep_sheppard

    rep = SuiteReport("hypergeometric-identities", 11)
    for res in (sweep_prop_a1(lmax), sweep_cor_a2(n_a2), sweep_cor_a3(n_a3), sweep_sheppard(6)):
        rep.add(res.suite, res.ok, {"bound": res.bound, "checked": res.checked, "passed": res.passed},
                res.counterexamples)
    pr = sweep_sheppard(6, form="printed")
    rep.add("sheppard-printed", pr.ok, {"checked": pr.checked, "passed": pr.passed},
            "printed left side with (a)_n (b)_n", mismatch=True)
    return rep


def zonal_report(lmax=3):
    """The zonal function of (l', l') against U_{2l'}/(2l'+1) and the printed (2l'+1)^{-1/2} U_{2l'}."""
    from .chebyshev import laurent_to_poly_in_x
    from .spherical import restricted_sf
    from .chebyshev import chebyshev_u

    rows = []
    for k in range(0, half(lmax).twice + 1):
        lp = half(F(k, 2))
        phi = laurent_to_poly_in_x(restricted_sf(lp, lp, 0)[0][0])
        U = chebyshev_u(lp.twice)
        value_at_e = phi(F(1))
        computed_ok = phi == U.scale(F(1, lp.twice + 1))
        # the printed form has phi(e) = (2l'+1)^{1/2}; compare squares at the identity
        printed_sq_at_e = F(lp.twice + 1)
        rows.append({"l": lp, "computed_matches_U_over_dim": computed_ok, "phi_at_identity": value_at_e,
                     "printed_phi_at_identity_squared": printed_sq_at_e,
                     "printed_matches": printed_sq_at_e == value_at_e ** 2})
    return rows


def suite_discrepancies(ells=None) -> SuiteReport:
    """Printed closed forms that disagree with the exact computation, each as a flag."""
    from .chebyshev import ChebExpansion, cheb_weighted_antiderivative
    from .diffops import conjugated_E
    from .rodrigues import norms, recurrence_tables

    rep = SuiteReport("printed-discrepancies", 12)
    wanted = _ells(_H(0, "1/2", 1, "3/2", 2), ells)
    if half(1) in wanted:
        _norm_l1(rep)
    for l in [v for v in _H(1, "3/2", 2) if v in wanted]:
        for r in norms(l, 4).mismatches():
            if (l, r.n, r.frame) == (half(1), 0, "displayed"):
                continue
            rep.add("printed norm", False, {"l": l, "n": r.n, "frame": r.frame},
                    {"exact": r.computed, "printed": r.printed}, mismatch=True)
        t = recurrence_tables(l, 6)
        rep.add("exact monic recurrence residual", t.residual_zero, {"l": l})
        for r in t.rows:
            if r.name in ("Bt", "Ct"):
                rep.add(f"printed monic {r.name}_n", r.matched, {"l": l, "n": r.n}, r.matches, mismatch=True)
            elif not r.matched:
                rep.add(f"printed orthonormal {r.name}_n", False, {"l": l, "n": r.n},
                        {"exact": r.computed, "printed": r.printed}, mismatch=True)
    for l in [v for v in _H("1/2", 1, "3/2", 2) if v in wanted]:
        ce = conjugated_E(l)
        rep.add("Y E Y^t block structure and coupled equations", ce.passed, {"l": l},
                {"coupled": ce.coupled, "composed": ce.composed})
        for name, good in ce.prop_blocks.items():
            rep.add(f"printed conjugated E: {name}", good, {"l": l}, mismatch=True)
    for z in zonal_report(2):
        if z["l"] not in wanted:
            continue
        rep.add("zonal function = U_{2l}/(2l+1)", z["computed_matches_U_over_dim"] and z["phi_at_identity"] == 1,
                {"l": z["l"]})
        if z["l"] != 0:
            rep.add("printed zonal normalisation", z["printed_matches"], {"l": z["l"]},
                    "(2l+1)^{-1/2} U_{2l} gives phi(e)^2 = 2l+1", mismatch=True)
    try:
        cheb_weighted_antiderivative(ChebExpansion([F(1)]))
        rep.add("weighted antiderivative of U_0", False, {}, "accepted an input with no rho-polynomial antiderivative")
    except ValueError:
        rep.add("U_0 -> U_1/4 antiderivative example", False, {}, "d/dx(rho U_1/4) is not rho", mismatch=True)
    return rep


def _norm_l1(rep):
    """The norm of P_{0,1} for l = 1 in the displayed frame."""
    from .rodrigues import norms

    nt = norms(1, 0)
    row = next(r for r in nt.rows if r.frame == "displayed" and r.n == 0)
    exact22 = row.computed[1][1]
    rep.add("exact <P_{0,1}, P_{0,1}>(2,2) = 9pi/8", exact22.coeff == F(9, 8) and exact22.pi_power == 1,
            {"l": 1, "n": 0}, exact22)
    rep.add("printed norm (2,2) at n = 0", row.matches[1][1], {"l": 1, "n": 0},
            {"exact": row.computed[1][1], "printed": row.printed[1][1]}, mismatch=True)


SUITES = {
    "spherical-orthogonality": suite_spherical_orthogonality,
    "mvop-orthogonality": suite_mvop_orthogonality,
    "pipeline-equivalence": suite_pipeline_equivalence,
    "weight-reproduction": suite_weight_reproduction,
    "det-conjecture": suite_det_conjecture,
    "commutant": suite_commutant,
    "operators-E-D": suite_operators,
    "example-operators": suite_example_operators,
    "rodrigues": suite_rodrigues,
    "recurrence-consistency": suite_recurrence,
    "hypergeometric-identities": suite_identities,
    "printed-discrepancies": suite_discrepancies,
}

_TAKES_ELLS = set(SUITES) - {"hypergeometric-identities"}


def run_suite(name: str, ells=None, fault: Fault | None = None, precision_bits: int = DEFAULT_PRECISION_BITS):
    fn = SUITES[name]
    start = time.perf_counter()
    with injected(fault):
        kwargs = {}
        if name in _TAKES_ELLS:
            kwargs["ells"] = ells
        if name == "recurrence-consistency":
            kwargs["precision_bits"] = precision_bits
        try:
            rep = fn(**kwargs)
        except ArithmeticError as exc:
            rep = SuiteReport(name, 0)
            rep.fail("exactness violation", {}, str(exc))
    rep.wall_time = time.perf_counter() - start
    return rep


def _run_star(args):
    return run_suite(*args)


def verify_all(ells=None, jobs: int = 1, fault: Fault | None = None, suites=None,
               precision_bits: int = DEFAULT_PRECISION_BITS) -> VerificationReport:
    names = list(SUITES) if suites is None else list(suites)
    start = time.perf_counter()
    ells = None if ells is None else [half(v) for v in ells]
    work = [(n, ells, fault, precision_bits) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_run_star, work))
    else:
        reports = [_run_star(w) for w in work]
    return VerificationReport(reports, time.perf_counter() - start)


__all__ = [
    "jsonable", "PASS", "FAIL", "MISMATCH", "CaseResult", "SuiteReport", "VerificationReport", "Fault", "injected",
    "printed_weights", "zonal_report", "SUITES", "run_suite", "verify_all",
] + [f.__name__ for f in SUITES.values()]
