"""Spherical functions restricted to the torus, as Laurent matrices in u = e^{it/2}.

Rows and columns of a (2l+1) x (2l+1) matrix are labelled p = -l, ..., l and
stored at index p + l (see ``index_of``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .chebyshev import SIN2, laurent_to_poly_in_x
from .clebsch_gordan import DEFAULT_PRECISION_BITS, cg_squared, contains, recurrence_coeff_a_squared
from .linalg import adjugate, bareiss_det, matmul
from .matpoly import MatPoly
from .polynomials import LaurentPoly
from .scalars import HalfInt, half, halfint_range

ONE = LaurentPoly.const(1)


def labels(l):
    """The labels -l, ..., l of a spin-l matrix."""
    return halfint_range(-half(l), half(l))


def index_of(p, l) -> int:
    """Array index of label p; the single place where p and p + l meet."""
    return int(half(p) + half(l))


def label_of(n: int, l) -> HalfInt:
    return half(n) - half(l)


def zeta(d: int, k, l):
    """Parameter pair ((d+l+k)/2, (d+l-k)/2) of row k of the degree-d matrix."""
    k, l = half(k), half(l)
    if abs(k) > l or not (l - k).is_integral:
        raise ValueError(f"label {k} invalid for l = {l}")
    return half(Fraction(2 * d + l.twice + k.twice, 4)), half(Fraction(2 * d + l.twice - k.twice, 4))


def restricted_sf(l1, l2, l):
    """Diagonal Laurent matrix of the spherical function of type l for (l1, l2)."""
    l1, l2, l = half(l1), half(l2), half(l)
    if not contains(l1, l2, l):
        raise ValueError(f"({l1}, {l2}) does not contain {l}")
    n = l.twice + 1
    out = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for j in labels(l):
        terms = {}
        for j1 in halfint_range(-l1, l1):
            j2 = j - j1
            if abs(j2) > l2:
                continue
            c2 = cg_squared(l1, l2, l, j1, j2, j)
            if c2:
                e = j2.twice - j1.twice
                terms[e] = terms.get(e, 0) + c2
        out[index_of(j, l)][index_of(j, l)] = LaurentPoly(terms)
    return out


def full_sf(l, d: int):
    """Row p is the diagonal of the restricted function with parameters zeta(d, p)."""
    l = half(l)
    rows = []
    for p in labels(l):
        phi = restricted_sf(*zeta(d, p, l), l)
        rows.append([phi[i][i] for i in range(l.twice + 1)])
    return rows


def conj_transpose(F):
    return [[F[j][i].conj() for j in range(len(F))] for i in range(len(F[0]))]


def mat_conj(F):
    """Entrywise t -> -t, i.e. u -> 1/u."""
    return [[e.conj() for e in row] for row in F]


def sf_pairing(F, G):
    """(1/2pi) int_0^{4pi} F(a_t) G(a_t)^* sin^2 t dt, entrywise exact."""
    if len(F) != len(G) or len(F[0]) != len(G[0]):
        raise ValueError("size mismatch")
    prod = matmul(F, conj_transpose(G))
    return [[2 * (e * SIN2).coeff(0) for e in row] for row in prod]


def pairing_expected(l, d: int):
    l = half(l)
    n = l.twice + 1
    vals = []
    for p in labels(l):
        vals.append(Fraction((l.twice + 1) ** 2, 1) / ((d + l + p + 1).value * (d + l - p + 1).value))
    return [[vals[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def laurent_det(M):
    return bareiss_det(M, LaurentPoly.exact_div, ONE)


def full_sf_Q(l, d: int) -> MatPoly:
    """Q_d = Phi_d Phi_0^{-1} as a matrix polynomial in x = cos t."""
    l = half(l)
    phi0 = full_sf(l, 0)
    det0 = laurent_det(phi0)
    adj0 = adjugate(phi0, LaurentPoly.exact_div, ONE)
    num = matmul(full_sf(l, d), adj0)
    out = []
    for row in num:
        out.append([laurent_to_poly_in_x(e.exact_div(det0)) for e in row])
    return MatPoly(out)


def flip(n):
    return [[ONE if i + j == n - 1 else LaurentPoly() for j in range(n)] for i in range(n)]


@dataclass
class SymmetryReport:
    l: HalfInt
    d: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_J_symmetries(l, d: int) -> SymmetryReport:
    """Phi_d(a_{-t}) = J Phi_d(a_t) = Phi_d(a_t) J as Laurent identities."""
    l = half(l)
    phi = full_sf(l, d)
    J = flip(l.twice + 1)
    rep = SymmetryReport(l, d)
    checks = {"theta: Phi(-t) = J Phi": (mat_conj(phi), matmul(J, phi)),
              "weyl: Phi(-t) = Phi J": (mat_conj(phi), matmul(phi, J))}
    for name, (a, b) in checks.items():
        for i, (ra, rb) in enumerate(zip(a, b)):
            for j, (x, y) in enumerate(zip(ra, rb)):
                if x != y:
                    rep.failures.append((name, i, j))
    return rep


def recurrence_matrices(l, d: int, precision_bits: int = DEFAULT_PRECISION_BITS):
    """A_d, B_d, C_d of cos t Phi_d = A_d Phi_{d+1} + B_d Phi_d + C_d Phi_{d-1}, as mpf matrices."""
    l = half(l)
    n = l.twice + 1
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    A = [[ctx.mpf(0)] * n for _ in range(n)]
    B = [[ctx.mpf(0)] * n for _ in range(n)]
    C = [[ctx.mpf(0)] * n for _ in range(n)]

    def a2(src, dst):
        return recurrence_coeff_a_squared(*src, *dst, l, precision_bits).value

    for k in labels(l):
        i = index_of(k, l)
        src = zeta(d, k, l)
        A[i][i] = a2(src, zeta(d + 1, k, l))
        for step in (1, -1):
            kk = k + step
            if abs(kk) <= l:
                B[i][index_of(kk, l)] = a2(src, zeta(d, kk, l))
        if d >= 1:
            dst = zeta(d - 1, k, l)
            if contains(*dst, l):
                C[i][i] = a2(src, dst)
    return A, B, C


def recurrence_residual(l, d: int, precision_bits: int = DEFAULT_PRECISION_BITS):
    """Max abs Laurent-coefficient residual of the recurrence for Phi_d."""
    l = half(l)
    A, B, C = recurrence_matrices(l, d, precision_bits)
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    cos_t = LaurentPoly({2: Fraction(1, 2), -2: Fraction(1, 2)})
    phis = {e: full_sf(l, e) for e in (d - 1, d, d + 1) if e >= 0}
    n = l.twice + 1
    worst = ctx.mpf(0)
    for i in range(n):
        for j in range(n):
            lhs = cos_t * phis[d][i][j]
            coeffs = {k: ctx.mpf(c.numerator) / c.denominator for k, c in lhs.terms.items()}
            for M, e in ((A, d + 1), (B, d), (C, d - 1)):
                if e not in phis:
                    continue
                for t in range(n):
                    if M[i][t] == 0:
                        continue
                    for k, c in phis[e][t][j].terms.items():
                        coeffs[k] = coeffs.get(k, ctx.mpf(0)) - M[i][t] * (ctx.mpf(c.numerator) / c.denominator)
            for v in coeffs.values():
                worst = max(worst, abs(v))
    return worst
