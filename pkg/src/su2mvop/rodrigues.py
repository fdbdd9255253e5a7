"""Worked examples for small l: Jacobi reductions, Rodrigues formulas, norms and
recurrence tables.

Every closed form quoted from the literature is stored as a claim and compared
with the exact value computed by ``core``; disagreements are reported entry by
entry instead of being asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .chebyshev import chebyshev_u
from .core import (
    MatrixWeight,
    block_polys,
    block_weights,
    inner_product_stripped,
    mirror,
    monic_polys_for,
    three_term_extract,
    weight_for,
)
from .diffops import example_weight
from .linalg import adjugate, bareiss_det, is_diagonal, matmul
from .matpoly import MatPoly
from .polynomials import Poly
from .scalars import HalfInt, PiRat, QuadRat, SqrtRat, binom, factorial, half, pochhammer
from .weight import F_mat, J_mat, block_split

F = Fraction


# ---------------------------------------------------------------------------
# (1-x)^a (1+x)^b x^k terms


@dataclass(frozen=True)
class GenJacobiTerm:
    """coefficient * (1-x)^a (1+x)^b x^k."""

    coefficient: object
    a: HalfInt
    b: HalfInt
    k: int

    def derivative(self) -> list:
        c, a, b, k = self.coefficient, self.a, self.b, self.k
        out = []
        if a != 0:
            out.append(GenJacobiTerm(-c * a.value, a - 1, b, k))
        if b != 0:
            out.append(GenJacobiTerm(c * b.value, a, b - 1, k))
        if k:
            out.append(GenJacobiTerm(c * k, a, b, k - 1))
        return out


class GenJacobiSum:
    """A finite sum of GenJacobiTerms with like terms merged."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for t in terms:
            key = (t.a, t.b, t.k)
            acc[key] = acc.get(key, 0) + t.coefficient
        self.terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def from_poly(cls, p: Poly, a, b) -> "GenJacobiSum":
        a, b = half(a), half(b)
        return cls(GenJacobiTerm(c, a, b, k) for k, c in enumerate(p.coeffs) if c)

    def __iter__(self):
        for (a, b, k), c in self.terms.items():
            yield GenJacobiTerm(c, a, b, k)

    def derivative(self, times: int = 1) -> "GenJacobiSum":
        s = self
        for _ in range(times):
            s = GenJacobiSum(d for t in s for d in t.derivative())
        return s

    def factor_out(self, a, b) -> Poly:
        """The polynomial p with self = (1-x)^a (1+x)^b p.

        Every term must have exponents at least (a, b) differing by integers.
        """
        a, b = half(a), half(b)
        out = Poly()
        one_minus, one_plus = Poly([1, -1]), Poly([1, 1])
        for t in self:
            da, db = t.a - a, t.b - b
            if not (da.is_integral and db.is_integral) or da < 0 or db < 0:
                raise ArithmeticError(f"term {t} is not divisible by (1-x)^{a} (1+x)^{b}")
            out = out + one_minus ** int(da) * one_plus ** int(db) * Poly.monomial(t.k, t.coefficient)
        return out


# ---------------------------------------------------------------------------
# classical Jacobi polynomials


def jacobi_P(alpha, beta, n: int) -> Poly:
    """P_n^{(alpha, beta)} in the standard normalisation, from its 2F1 form; alpha, beta half-integers."""
    alpha, beta = F(half(alpha).value), F(half(beta).value)
    if n < 0:
        return Poly()
    s = Poly([F(1, 2), F(-1, 2)])  # (1 - x) / 2
    out = Poly()
    pre = pochhammer(alpha + 1, n) / factorial(n)
    for k in range(n + 1):
        c = pre * pochhammer(-n, k) * pochhammer(n + alpha + beta + 1, k) / (pochhammer(alpha + 1, k) * factorial(k))
        out = out + s ** k * Poly.const(c)
    return out


def jacobi_P_rodrigues(alpha, beta, n: int) -> Poly:
    """P_n^{(alpha, beta)} from (-1)^n/(2^n n!) (1-x)^{-alpha}(1+x)^{-beta} [(1-x)^{alpha+n}(1+x)^{beta+n}]^{(n)}."""
    alpha, beta = half(alpha), half(beta)
    g = GenJacobiSum([GenJacobiTerm(F(1), alpha + n, beta + n, 0)]).derivative(n)
    return g.factor_out(alpha, beta).scale(F((-1) ** n, 2 ** n * factorial(n)))


def jacobi_monic(alpha, beta, n: int) -> Poly:
    """Monic Jacobi polynomial of degree n for (1-x)^alpha (1+x)^beta."""
    if half(alpha).value <= -1 or half(beta).value <= -1:
        raise ValueError("alpha and beta must exceed -1")
    p = jacobi_P(alpha, beta, n)
    return p.scale(1 / p.coeffs[-1])


def jacobi_monic_normaliser(alpha, beta, n: int) -> Fraction:
    """1 / leading coefficient of P_n^{(alpha, beta)}, i.e. 2^n n! / (n+alpha+beta+1)_n."""
    s = F(half(alpha).value + half(beta).value)
    return F(2 ** n * factorial(n)) / pochhammer(n + s + 1, n)


@dataclass
class JacobiReduction:
    l: HalfInt
    block: str
    alpha: HalfInt
    beta: HalfInt
    printed_constant: object  # callable n -> Fraction, or None
    degrees: list = field(default_factory=list)
    matches: list = field(default_factory=list)
    constant_ok: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.matches) and all(self.constant_ok)


def _printed_half_constant(n):
    return F(2 ** n * factorial(n) * factorial(n + 2), factorial(2 * n + 2))


def _printed_one_constant(n):
    return F(2 ** n * factorial(n) * factorial(n + 3), factorial(2 * n + 3))


JACOBI_REDUCTIONS = {
    # (l, block): (alpha, beta, printed normalising constant or None)
    (half(0), "W"): (half("1/2"), half("1/2"), None),
    (half("1/2"), "W1"): (half("1/2"), half("3/2"), _printed_half_constant),
    (half("1/2"), "W2"): (half("3/2"), half("1/2"), _printed_half_constant),
    (half(1), "W2"): (half("3/2"), half("3/2"), _printed_one_constant),
}


def jacobi_reduction(l, block: str, nmax: int = 6) -> JacobiReduction:
    """Scalar blocks that are Jacobi weights: the monic family against jacobi_monic."""
    l = half(l)
    alpha, beta, const = JACOBI_REDUCTIONS[(l, block)]
    if block == "W":
        w = weight_for(l)
    else:
        w1, w2 = block_weights(l)
        w = w1 if block == "W1" else w2
    fam = monic_polys_for(w, nmax)
    rep = JacobiReduction(l, block, alpha, beta, const)
    for n in range(nmax + 1):
        rep.degrees.append(n)
        rep.matches.append(fam[n][0, 0] == jacobi_monic(alpha, beta, n))
        if const is not None:
            rep.constant_ok.append(const(n) == jacobi_monic_normaliser(alpha, beta, n))
    if l == 0:
        # the scalar case is 2^{-n} U_n
        rep.matches.extend(fam[n][0, 0] == chebyshev_u(n).scale(F(1, 2 ** n)) for n in range(nmax + 1))
    return rep


# ---------------------------------------------------------------------------
# Rodrigues formulas


def _gamma_half(m: Fraction):
    """Gamma(m) for a positive half-odd m as (rational, power of sqrt(pi))."""
    k = m - F(1, 2)
    if k.denominator != 1 or k < 0:
        raise ValueError("expected a positive half-odd argument")
    k = int(k)
    return F(factorial(2 * k), 4 ** k * factorial(k)), 1


def _sqrt_pi_quotient(num, den) -> Fraction:
    """(r1 sqrt(pi)^p1) / (r2 sqrt(pi)^p2), which must be rational."""
    (r1, p1), (r2, p2) = num, den
    if p1 != p2:
        raise ArithmeticError("sqrt(pi) does not cancel in the Rodrigues constant")
    return r1 / r2


def _P(*c):
    return Poly([F(x) if not isinstance(x, QuadRat) else x for x in c])


def _quad_poly(*pairs):
    return Poly([QuadRat(a, b) for a, b in pairs])


def _data_l1(n):
    R = MatPoly([[_quad_poly((2, 0), (0, 0), (4, 0)), _quad_poly((0, 0), (0, 3))],
                 [_quad_poly((0, 0), (0, 3)), _quad_poly((2, 0), (0, 0), (1, 0))]])
    Y = MatPoly([[_quad_poly((F(2 * n, n + 2), 0)), _quad_poly((0, 0), (0, F(n, n + 2)))],
                 [_quad_poly((0, 0), (0, F(-n, n + 1))), _quad_poly((F(-n, n + 1), 0))]])
    num = (F((-1) ** n * (n + 2) * (n + 3), 2 ** (2 * n + 2)), 1)
    g, p = _gamma_half(F(2 * n + 3, 2))
    c = _sqrt_pi_quotient(num, ((2 * n + 3) * g, p))
    return R, Y, c


def _data_l32(n):
    R = MatPoly([[_P(1, -2, 2), _P(F(-1, 3), F(4, 3))],
                 [_P(F(-1, 3), F(4, 3)), _P(F(5, 9), F(2, 9), F(2, 9))]])
    Y = MatPoly([[_P(F(n, n + 3)), _P(F(n, 3 * (n + 3)), F(2 * n, 3 * (n + 3)))],
                 [_P(F(n, 3 * (n + 1)), F(-2 * n, 3 * (n + 1))), _P(F(-n, 3 * (n + 1)))]])
    num = (F((-1) ** n * (n + 3) * (n + 4), 2 ** (2 * n + 2)), 1)
    c = _sqrt_pi_quotient(num, _gamma_half(F(2 * n + 5, 2)))
    return R, Y, c


def _data_l2(n):
    R = MatPoly([[_P(4, 0, 1), _P(0, 10)], [_P(0, 10), _P(4, 0, 16)]])
    Y = MatPoly([[_P(F(-3 * n, n + 1)), _P(0, F(-6 * n, n + 1))],
                 [_P(0, F(6 * n, n + 4)), _P(F(12 * n, n + 4))]])
    num = (F((-1) ** n * (n + 3) * (n + 4) * (n + 5), 2 ** (2 * n + 4)), 1)
    g, p = _gamma_half(F(2 * n + 5, 2))
    c = _sqrt_pi_quotient(num, ((2 * n + 5) * g, p))
    return R, Y, c


@dataclass(frozen=True)
class RodriguesData:
    l: HalfInt
    alpha: HalfInt
    beta: HalfInt
    block: int  # 1 or 2: which diagonal block of Y W Y^t the formula is for
    data: object  # n -> (R, Y_n, c)


RODRIGUES = {
    half(1): RodriguesData(half(1), half("1/2"), half("1/2"), 1, _data_l1),
    half("3/2"): RodriguesData(half("3/2"), half("1/2"), half("3/2"), 1, _data_l32),
    half(2): RodriguesData(half(2), half("3/2"), half("3/2"), 2, _data_l2),
}


def _rodrigues_data(l) -> RodriguesData:
    l = half(l)
    if l not in RODRIGUES:
        raise ValueError("Rodrigues formulas are available for l in {1, 3/2, 2}")
    return RODRIGUES[l]


def rodrigues_weight(l):
    """The factored block weight (1-x)^alpha (1+x)^beta * s * R the formula inverts."""
    d = _rodrigues_data(l)
    s = block_split(d.l)
    W = s.W1 if d.block == 1 else s.W2
    if (W.a, W.b) != (d.alpha, d.beta):
        raise ArithmeticError("block weight exponents differ from the Rodrigues data")
    return W


def _weight_scale(W, R: MatPoly):
    """The constant s with W.matrix = s * R."""
    i, j = next((i, j) for i in range(2) for j in range(2) if R[i, j])
    r = R[i, j]
    w = W.matrix[i, j]
    s = w.coeffs[-1] / r.coeffs[-1]
    if W.matrix != R.scale(s):
        raise ArithmeticError("block weight is not a constant multiple of R")
    return s


def _poly_ring_one(M: MatPoly):
    for row in M.entries:
        for e in row:
            if e:
                return e.coeffs[0] * 0 + 1
    return F(1)


def _times_inverse(M: MatPoly, R: MatPoly) -> MatPoly:
    """M R^{-1} with exact polynomial division by det R."""
    one = Poly.const(_poly_ring_one(R))
    entries = R.entries
    det = bareiss_det(entries, Poly.exact_div, one)
    adj = adjugate(entries, Poly.exact_div, one)
    num = M @ MatPoly(adj)
    try:
        return num.map(lambda e: e.exact_div(det) if e else e)
    except ArithmeticError:
        raise ArithmeticError("Rodrigues expression is not a polynomial: inexact division by det R") from None


def rodrigues_constant(l, n: int) -> Fraction:
    return _rodrigues_data(l).data(n)[2]


def rodrigues_P1(l, n: int) -> MatPoly:
    """c [(1-x)^{alpha+n} (1+x)^{beta+n} (R + Y_n)]^{(n)} W^{-1}, evaluated exactly."""
    d = _rodrigues_data(l)
    R, Y, c = d.data(n)
    W = rodrigues_weight(l)
    s = _weight_scale(W, R)
    inner = R + Y
    a, b = d.alpha + n, d.beta + n
    entries = []
    for row in inner.entries:
        out_row = []
        for e in row:
            g = GenJacobiSum.from_poly(e, a, b).derivative(n)
            out_row.append(g.factor_out(d.alpha, d.beta))
        entries.append(out_row)
    M = MatPoly(entries)
    return _times_inverse(M, R).scale(c / s)


def rodrigues_jacobi_form(l, n: int) -> MatPoly:
    """The Leibniz expansion of the Rodrigues formula in classical Jacobi polynomials.

    sum_k C(n,k) (-1)^{n-k} 2^{n-k} (n-k)! (1-x^2)^k P_{n-k}^{(alpha+k, beta+k)} (R+Y_n)^{(k)} R^{-1},
    times c / s.  For l = 1 this is the three-term expression with
    P^{(1/2,1/2)}, P^{(3/2,3/2)} and P^{(5/2,5/2)}.
    """
    d = _rodrigues_data(l)
    R, Y, c = d.data(n)
    W = rodrigues_weight(l)
    s = _weight_scale(W, R)
    inner = R + Y
    one_minus_x2 = Poly([1, 0, -1])
    acc = MatPoly.zero(2)
    for k in range(min(n, inner.degree) + 1):
        m = n - k
        scal = binom(n, k) * (-1) ** m * 2 ** m * factorial(m)
        p = jacobi_P(d.alpha.value + k, d.beta.value + k, m) * one_minus_x2 ** k
        acc = acc + inner.derivative(k).scale(p.scale(scal))
    return _times_inverse(acc, R).scale(c / s)


def rodrigues_family(l, nmax: int):
    """Monic family for the Rodrigues block, computed by Gram-Schmidt in ``core``."""
    d = _rodrigues_data(l)
    fams = block_polys(d.l, nmax)
    return fams.family1 if d.block == 1 else fams.family2


@dataclass
class RodriguesCheck:
    l: HalfInt
    nmax: int
    equal_to_monic: list = field(default_factory=list)
    orthogonal_to_lower: list = field(default_factory=list)
    jacobi_form_equal: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.equal_to_monic) and all(self.orthogonal_to_lower) and all(self.jacobi_form_equal)


def rodrigues_check(l, nmax: int = 4) -> RodriguesCheck:
    d = _rodrigues_data(l)
    fam = rodrigues_family(d.l, nmax)
    w = fam.weight
    rep = RodriguesCheck(d.l, nmax)
    for n in range(nmax + 1):
        P = rodrigues_P1(d.l, n)
        rep.equal_to_monic.append(P == fam[n])
        monic = P.degree == n and P.leading() == MatPoly.identity(2).coeff(0)
        orth = all(
            all(v == 0 for row in inner_product_stripped(P, MatPoly.monomial(2, m), w) for v in row)
            for m in range(n)
        )
        rep.orthogonal_to_lower.append(monic and orth)
        rep.jacobi_form_equal.append(rodrigues_jacobi_form(d.l, n) == P)
    return rep


# ---------------------------------------------------------------------------
# mirror family for l = 3/2


@dataclass
class MirrorCheck:
    nmax: int
    signed_orthogonal: list = field(default_factory=list)
    signed_monic: list = field(default_factory=list)
    unsigned_monic: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.signed_orthogonal) and all(self.signed_monic)


def mirror_check(nmax: int = 4, l="3/2") -> MirrorCheck:
    """(-1)^n J F P_{n,1}(-x) F J is monic orthogonal for the second block.

    The form without (-1)^n is recorded too: it is monic only for even n.
    """
    l = half(l)
    _, w2 = block_weights(l)
    rep = MirrorCheck(nmax)
    k = w2.size
    I = MatPoly.identity(k).coeff(0)
    for n in range(nmax + 1):
        P1 = rodrigues_P1(l, n)
        P2 = mirror(P1, n)
        orth = all(
            all(v == 0 for row in inner_product_stripped(P2, MatPoly.monomial(k, m), w2) for v in row)
            for m in range(n)
        )
        rep.signed_orthogonal.append(orth)
        rep.signed_monic.append(P2.degree == n and P2.leading() == I)
        JF = matmul(J_mat(k), F_mat(k))
        unsigned = MatPoly.constant(JF) @ P1.reflect() @ [list(r) for r in zip(*JF)]
        rep.unsigned_monic.append(unsigned.leading() == I)
    return rep


# ---------------------------------------------------------------------------
# printed tables


def _diag2(a, b):
    return [[a, 0], [0, b]]


# monic recurrence coefficients, as displayed
PRINTED_MONIC = {
    half(1): (
        lambda n: [[0, F(4, (n + 2) * (n + 3))], [F(1, 2 * (n + 1) * (n + 2)), 0]],
        lambda n: _diag2(F(n * (n + 3), 4 * (n + 2) * (n + 1)), F(n * n * (n + 3) ** 2, 4 * (n + 2) ** 2 * (n + 1) ** 2)),
    ),
    half("3/2"): (
        lambda n: [[0, F(9, 2 * (n + 3) * (n + 4))], [F(1, 2 * (n + 1) * (n + 2)), F(2, (n + 2) * (n + 3))]],
        lambda n: _diag2(F(n * (n + 4), 4 * (n + 1) * (n + 3)), F(n * n * (n + 4) ** 2, 4 * (n + 1) * (n + 2) ** 2 * (n + 3))),
    ),
    half(2): (
        lambda n: [[0, F(1, 2 * (n + 1) * (n + 2))], [F(8, (n + 4) * (n + 5)), 0]],
        lambda n: _diag2(F(n * n * (n + 5) ** 2, 4 * (n + 1) * (n + 2) * (n + 3) * (n + 4)), F(n * (n + 5), 4 * (n + 1) * (n + 4))),
    ),
}

# orthonormal recurrence coefficients as (sign, square) pairs; the l = 2 entry
# B_n(2, 2) is blank in the display and read as 0
PRINTED_ORTHONORMAL = {
    half(1): (
        lambda n: _diag2((1, F(n * (n + 3), 4 * (n + 1) * (n + 2))), (1, F(n * n * (n + 3) ** 2, 4 * (n + 1) ** 2 * (n + 2) ** 2))),
        lambda n: [[(0, 0), (1, F(16, ((n + 2) * (n + 3)) ** 2))], [(1, F(1, 4 * ((n + 1) * (n + 4)) ** 2)), (0, 0)]],
    ),
    half("3/2"): (
        lambda n: _diag2((1, F(n * (n + 4), 4 * (n + 1) * (n + 3))), (1, F(n * n * (n + 4) ** 2, 4 * (n + 2) ** 2 * (n + 1) * (n + 3)))),
        lambda n: [[(0, 0), (1, F(9, 4 * (n + 1) * (n + 2) * (n + 3) * (n + 4)))],
                   [(1, F(9, 4 * (n + 1) * (n + 2) * (n + 3) * (n + 4))), (1, F(4, ((n + 2) * (n + 3)) ** 2))]],
    ),
    half(2): (
        lambda n: _diag2((1, F(n * n * (n + 5) ** 2, 4 * (n + 1) * (n + 2) * (n + 3) * (n + 4))), (1, F(n * (n + 5), (n + 1) * (n + 4)))),
        lambda n: [[(0, 0), (1, F(4, (n + 1) * (n + 2) * (n + 4) * (n + 5)))],
                   [(1, F(4, (n + 1) * (n + 2) * (n + 4) * (n + 5))), (0, 0)]],
    ),
}

# squared leading coefficients of the orthonormal polynomials, times pi
PRINTED_OMEGA_SQ = {
    half(1): lambda n: (F(2 ** (2 * n + 1) * (n + 1), n + 3), F(2 ** (2 * n + 4) * (n + 1) ** 2, (n + 3) ** 2)),
    half("3/2"): lambda n: (F(2 ** (2 * n + 1) * (n + 1), n + 4), F(81 * (n + 1) ** 2 * 2 ** (2 * n + 1) * (n + 2), (n + 3) * (n + 4) ** 2)),
    half(2): lambda n: (F(2 ** (4 * n + 4) * (n + 2) * (n + 1) ** 2, (n + 4) * (n + 5) ** 2), F(2 ** (2 * n + 1) * (n + 1), n + 5)),
}


def printed_norm_l1(n: int):
    """The displayed closed form of <P_{n,1}, P_{n,1}> for l = 1, divided by pi."""
    s = F(1, 2 ** (2 * n + 1))
    return _diag2(s * F(n + 3, n + 1), s * F((n + 3) ** 2, 8 * (n + 1) ** 2))


def table_weight(l) -> MatrixWeight:
    """The frame in which the printed recurrence tables hold (rational frame for l = 1)."""
    return example_weight(l)


@lru_cache(maxsize=None)
def _table_family(l, nmax: int):
    return monic_polys_for(table_weight(l), nmax)


def _sqrt_entry(pair):
    sign, sq = pair
    return SqrtRat.from_signed_square(sign, sq)


@dataclass
class TableRow:
    n: int
    name: str
    computed: object
    printed: object
    matches: list  # per-entry booleans

    @property
    def matched(self) -> bool:
        return all(all(row) for row in self.matches)


@dataclass
class RecurrenceTables:
    l: HalfInt
    nmax: int
    rows: list = field(default_factory=list)
    residual_zero: bool = True

    def mismatches(self):
        return [r for r in self.rows if not r.matched]

    def by_name(self, name):
        return [r for r in self.rows if r.name == name]


def _compare(comp, printed):
    return [[c == p for c, p in zip(rc, rp)] for rc, rp in zip(comp, printed)]


def recurrence_tables(l, nmax: int = 6) -> RecurrenceTables:
    """Monic (Bt_n, Ct_n) and orthonormal (A_n, B_n) tables, computed and printed.

    The orthonormal tables are built from the exact norms H_n, which are
    diagonal for all three examples: Omega_n = H_n^{-1/2}, A_n = Omega_{n-1} Omega_n^{-1},
    B_n = Omega_n Bt_n Omega_n^{-1}.
    """
    l = half(l)
    if l not in PRINTED_MONIC:
        raise ValueError("recurrence tables are available for l in {1, 3/2, 2}")
    fam = _table_family(l, nmax + 1)
    rep = RecurrenceTables(l, nmax)
    Bp, Cp = PRINTED_MONIC[l]
    Ap_on, Bp_on = PRINTED_ORTHONORMAL[l]
    H = fam.norms
    for n in range(nmax + 1):
        try:
            Bt, Ct = three_term_extract(fam, n)
        except ArithmeticError:
            rep.residual_zero = False
            continue
        rep.rows.append(TableRow(n, "Bt", Bt, Bp(n), _compare(Bt, Bp(n))))
        if n >= 1:
            rep.rows.append(TableRow(n, "Ct", Ct, Cp(n), _compare(Ct, Cp(n))))
        if not (is_diagonal(H[n]) and (n == 0 or is_diagonal(H[n - 1]))):
            continue
        h = [H[n][i][i] for i in range(2)]
        Bon = [[SqrtRat.from_signed_square((Bt[i][j] > 0) - (Bt[i][j] < 0), Bt[i][j] ** 2 * h[j] / h[i])
                for j in range(2)] for i in range(2)]
        printed_B = [[_sqrt_entry(e) for e in row] for row in Bp_on(n)]
        rep.rows.append(TableRow(n, "B", Bon, printed_B, _compare(Bon, printed_B)))
        if n >= 1:
            hp = [H[n - 1][i][i] for i in range(2)]
            Aon = [[SqrtRat.from_signed_square(1, h[i] / hp[i]) if i == j else SqrtRat.ZERO for j in range(2)]
                   for i in range(2)]
            printed_A = [[_sqrt_entry(e) if e != 0 else SqrtRat.ZERO for e in row] for row in Ap_on(n)]
            rep.rows.append(TableRow(n, "A", Aon, printed_A, _compare(Aon, printed_A)))
    return rep


@dataclass
class NormRow:
    n: int
    frame: str
    computed: list  # PiRat matrix
    printed: list  # PiRat matrix
    matches: list


@dataclass
class NormTable:
    l: HalfInt
    nmax: int
    rows: list = field(default_factory=list)

    def mismatches(self):
        return [r for r in self.rows if not all(all(m) for m in r.matches)]


def _pi(mat):
    return [[PiRat(c, 1) for c in row] for row in mat]


def norms(l, nmax: int = 4) -> NormTable:
    """Exact <P_{n,1}, P_{n,1}> next to the printed closed form.

    For l = 1 the printed closed form is compared in both the sqrt 2 frame
    (the displayed W_1) and the rational frame; for l = 3/2 and 2 the printed
    form is H_n = Omega_n^{-2}.
    """
    l = half(l)
    _rodrigues_data(l)
    rep = NormTable(l, nmax)
    frames = [("displayed", rodrigues_family(l, nmax))]
    if l == 1:
        frames.append(("rational", _table_family(l, nmax + 1)))
    for n in range(nmax + 1):
        if l == 1:
            printed = printed_norm_l1(n)
        else:
            o1, o2 = PRINTED_OMEGA_SQ[l](n)
            printed = _diag2(1 / o1, 1 / o2)
        for name, fam in frames:
            H = [[_simplify(v) for v in row] for row in fam.norms[n]]
            rep.rows.append(NormRow(n, name, _pi(H), _pi(printed), _compare(H, printed)))
    return rep


def _simplify(v):
    if isinstance(v, QuadRat) and v.b == 0:
        return v.a
    return v


def omega_from_norms(l, nmax: int = 4):
    """Compare the printed squared Omega_n with 1 / H_n in the table frame."""
    l = half(l)
    fam = _table_family(l, nmax + 1)
    out = []
    for n in range(nmax + 1):
        H = fam.norms[n]
        o1, o2 = PRINTED_OMEGA_SQ[l](n)
        out.append((n, [1 / H[0][0] == o1, 1 / H[1][1] == o2]))
    return out


__all__ = [
    "GenJacobiTerm", "GenJacobiSum", "jacobi_P", "jacobi_P_rodrigues", "jacobi_monic", "jacobi_monic_normaliser",
    "JacobiReduction", "jacobi_reduction", "RODRIGUES", "rodrigues_constant", "rodrigues_weight", "rodrigues_P1",
    "rodrigues_jacobi_form", "rodrigues_family", "rodrigues_check", "RodriguesCheck", "mirror_check",
    "MirrorCheck", "PRINTED_MONIC", "PRINTED_ORTHONORMAL", "PRINTED_OMEGA_SQ", "printed_norm_l1", "recurrence_tables",
    "RecurrenceTables", "TableRow", "norms", "NormTable", "NormRow", "omega_from_norms", "table_weight",
]
