"""Monic matrix orthogonal polynomials for weights of the form rho(x) * Z(x).

All integrals reduce to the moments of rho, which are rational multiples of
pi.  The pi is carried through the inner products and has to cancel in every
monic coefficient; a leftover power of pi is treated as a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from .linalg import (
    inverse,
    is_positive_definite,
    is_zero_matrix,
    mat_add,
    mat_eq,
    mat_scale,
    matmul,
    transpose,
    zeros,
)
from .matpoly import MatPoly
from .scalars import PiRat, QuadRat, half
from .spherical import full_sf_Q, recurrence_matrices as sph_recurrence_matrices
from .clebsch_gordan import DEFAULT_PRECISION_BITS
from .weight import F_mat, J_mat, Y_mat, block_split, weight_W_monomial


@lru_cache(maxsize=None)
def rho_moment(k: int) -> Fraction:
    """int_{-1}^{1} x^k sqrt(1-x^2) dx divided by pi."""
    if k % 2:
        return Fraction(0)
    m = k // 2
    return Fraction(factorial(2 * m), 2 ** (2 * m + 1) * factorial(m) * factorial(m + 1))


def _zero_like(Z: MatPoly):
    for row in Z.entries:
        for e in row:
            for c in e.coeffs:
                return c * 0
    return Fraction(0)


@dataclass
class MatrixWeight:
    """The weight rho(x) * Z(x) on [-1, 1]."""

    Z: MatPoly
    name: str = ""
    _moments: list = field(default_factory=list, repr=False)

    @property
    def size(self) -> int:
        return self.Z.shape[0]

    def moment(self, k: int):
        """M_k / pi with M_k = int x^k rho Z dx."""
        while len(self._moments) <= k:
            j = len(self._moments)
            zc = self.Z.coeff_matrices()
            n = self.size
            M = zeros(n)
            for i, A in enumerate(zc):
                r = rho_moment(i + j)
                if r:
                    M = mat_add(M, mat_scale(A, r))
            self._moments.append(M)
        return self._moments[k]

    def moments(self, kmax: int):
        return [[[PiRat(c, 1) for c in row] for row in self.moment(k)] for k in range(kmax + 1)]

    def evaluate(self, x):
        return self.Z(x)


def weight_for(l) -> MatrixWeight:
    return MatrixWeight(weight_W_monomial(l), f"W(l={half(l)})")


def moments(l, kmax: int):
    return weight_for(l).moments(kmax)


def _coeffs(P: MatPoly):
    return P.coeff_matrices() if P else []


def inner_product_stripped(P: MatPoly, Q: MatPoly, w: MatrixWeight):
    """<P, Q> / pi = sum_{i,j} P_i M_{i+j} Q_j^t."""
    n, m = P.shape[0], Q.shape[0]
    out = zeros(n, m)
    Qc = [transpose(B) for B in _coeffs(Q)]
    for i, A in enumerate(_coeffs(P)):
        if is_zero_matrix(A):
            continue
        for j, Bt in enumerate(Qc):
            if is_zero_matrix(Bt):
                continue
            out = mat_add(out, matmul(matmul(A, w.moment(i + j)), Bt))
    return out


def inner_product(P: MatPoly, Q: MatPoly, w) -> list:
    """int P W Q^t dx as a matrix of pi-scaled values."""
    if not isinstance(w, MatrixWeight):
        w = weight_for(w)
    return [[PiRat(c, 1) for c in row] for row in inner_product_stripped(P, Q, w)]


def strip_pi(mat) -> list:
    """Coefficients of a matrix of PiRat values that all carry one factor of pi."""
    out = []
    for row in mat:
        r = []
        for v in row:
            if v.coeff != 0 and v.pi_power != 1:
                raise ArithmeticError("expected one power of pi")
            r.append(v.coeff)
        out.append(r)
    return out


def _pi_ratio(num, den_inv_stripped):
    """num * den^{-1} where num = pi * a and den = pi * b; the pis cancel."""
    prod = matmul(strip_pi(num), den_inv_stripped)
    return [[PiRat(c, 0).coeff for c in row] for row in prod]


@dataclass
class MonicFamily:
    weight: MatrixWeight
    polys: list
    norms: list  # <P_d, P_d> / pi

    def __getitem__(self, d):
        return self.polys[d]

    def __len__(self):
        return len(self.polys)


def monic_polys_for(w: MatrixWeight, dmax: int, order=None) -> MonicFamily:
    """Block Gram-Schmidt on x^d I.

    ``order`` optionally permutes the sequence in which projections on the
    lower-degree polynomials are subtracted for each d.
    """
    n = w.size
    one = _zero_like(w.Z) + 1
    I = [[one if i == j else one * 0 for j in range(n)] for i in range(n)]
    polys, norms, inv_norms = [], [], []
    for d in range(dmax + 1):
        P = MatPoly.monomial(n, d, I)
        seq = list(range(d)) if order is None else [e for e in order(d)]
        if sorted(seq) != list(range(d)):
            raise ValueError("projection order must be a permutation of 0..d-1")
        for e in seq:
            proj = inner_product(P, polys[e], w)
            coef = _pi_ratio(proj, inv_norms[e])
            P = P - MatPoly.constant(coef) @ polys[e]
        H = inner_product_stripped(P, P, w)
        if any(x != 0 for row in P.leading() for x in row) and not mat_eq(P.leading(), I):
            raise ArithmeticError("lost monicity")
        try:
            Hinv = inverse(H)
        except ZeroDivisionError:
            raise ArithmeticError(f"singular norm at degree {d}: the weight is degenerate") from None
        polys.append(P)
        norms.append(H)
        inv_norms.append(Hinv)
    return MonicFamily(w, polys, norms)


def monic_polys(l, dmax: int, order=None) -> MonicFamily:
    return monic_polys_for(weight_for(l), dmax, order)


def three_term_extract(F: MonicFamily, d: int):
    """(B_d, C_d) with x P_d = P_{d+1} + B_d P_d + C_d P_{d-1}, checked to leave no residual."""
    if d + 1 >= len(F):
        raise ValueError("family too short")
    R = F[d].mul_x() - F[d + 1]
    B = R.coeff(d)
    R = R - MatPoly.constant(B) @ F[d]
    n = F.weight.size
    if d == 0:
        C = zeros(n)
    else:
        C = R.coeff(d - 1)
        R = R - MatPoly.constant(C) @ F[d - 1]
    if R:
        raise ArithmeticError(f"nonzero recurrence residual at degree {d}")
    return B, C


def recurrence_residual(F: MonicFamily, d: int, B, C) -> MatPoly:
    R = F[d].mul_x() - F[d + 1] - MatPoly.constant(B) @ F[d]
    if d > 0:
        R = R - MatPoly.constant(C) @ F[d - 1]
    return R


def is_orthogonal_family(F: MonicFamily) -> bool:
    for d in range(len(F)):
        for e in range(d):
            if not is_zero_matrix(inner_product_stripped(F[d], F[e], F.weight)):
                return False
    return all(is_positive_definite(H) for H in F.norms)


# ---------------------------------------------------------------------------
# block families


def block_weights(l):
    s = block_split(l)
    return MatrixWeight(s.W1.rho_times(), "W1"), MatrixWeight(s.W2.rho_times(), "W2")


def mirror(P: MatPoly, d: int) -> MatPoly:
    """(-1)^d J F P(-x) F J."""
    k = P.shape[0]
    JF = matmul(J_mat(k), F_mat(k))
    out = MatPoly.constant(JF) @ P.reflect() @ transpose(JF)
    return out if d % 2 == 0 else -out


@dataclass
class BlockFamilies:
    family1: MonicFamily
    family2: MonicFamily
    mirror_holds: bool | None


def block_polys(l, dmax: int) -> BlockFamilies:
    l = half(l)
    w1, w2 = block_weights(l)
    f1 = monic_polys_for(w1, dmax)
    f2 = monic_polys_for(w2, dmax)
    mirror_ok = None
    if not l.is_integral:
        mirror_ok = all(f2[d] == mirror(f1[d], d) for d in range(dmax + 1))
    return BlockFamilies(f1, f2, mirror_ok)


def is_block_diagonal_after_Y(l, P: MatPoly) -> bool:
    """Y P Y^t has zero off-diagonal blocks (Y is orthogonal, so Y^{-1} = Y^t)."""
    l = half(l)
    n = l.twice + 1
    k = (n + 1) // 2
    Y = Y_mat(l)
    Pq = P.map(lambda e: e.scale(QuadRat(1)))
    M = MatPoly.constant(Y) @ Pq @ transpose(Y)
    return all(not M.entries[i][j] for i in range(n) for j in range(n) if (i < k) != (j < k))


# ---------------------------------------------------------------------------
# agreement with the spherical-function pipeline


@dataclass
class CrossValidation:
    l: object
    dmax: int
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def cross_validate_pipelines(l, dmax: int) -> CrossValidation:
    l = half(l)
    fam = monic_polys(l, dmax)
    rep = CrossValidation(l, dmax)
    for d in range(dmax + 1):
        Q = full_sf_Q(l, d)
        ups = Q.coeff(d)
        P = MatPoly.constant(inverse(ups)) @ Q
        if P != fam[d]:
            diff = P - fam[d]
            first = next((i, j) for i in range(P.shape[0]) for j in range(P.shape[1]) if diff[i, j])
            rep.mismatches.append({"d": d, "entry": first})
    return rep


def leading_coefficient_Q(l, d: int):
    return full_sf_Q(l, d).coeff(d)


@dataclass
class RecurrenceConsistency:
    l: object
    dmax: int
    precision_bits: int
    max_error: object  # mpf
    per_degree: list = field(default_factory=list)

    def within(self, tol) -> bool:
        return self.max_error <= tol


def recurrence_consistency(l, dmax: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> RecurrenceConsistency:
    """Compare the exact monic recurrence with the one assembled from |a|^2.

    With Q_d = Upsilon_d P_d the group-theoretic recurrence becomes
    Upsilon_d = A_d Upsilon_{d+1}, Bt_d = Upsilon_d^{-1} B_d Upsilon_d and
    Ct_d = Upsilon_d^{-1} C_d Upsilon_{d-1}.
    """
    l = half(l)
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    fam = monic_polys(l, dmax + 1)
    ups = [leading_coefficient_Q(l, d) for d in range(dmax + 2)]

    def mp(M):
        return ctx.matrix([[ctx.mpf(c.numerator) / c.denominator for c in row] for row in M])

    worst = ctx.mpf(0)
    per = []
    for d in range(dmax + 1):
        A, B, C = (ctx.matrix(M) for M in sph_recurrence_matrices(l, d, precision_bits))
        Bt, Ct = three_term_extract(fam, d)
        U, Uinv = mp(ups[d]), mp(inverse(ups[d]))
        errs = [ctx.mnorm(Uinv * B * U - mp(Bt), 1), ctx.mnorm(A * mp(ups[d + 1]) - U, 1)]
        if d > 0:
            errs.append(ctx.mnorm(Uinv * C * mp(ups[d - 1]) - mp(Ct), 1))
        e = max(errs)
        per.append(e)
        worst = max(worst, e)
    return RecurrenceConsistency(l, dmax, precision_bits, worst, per)


__all__ = [
    "rho_moment", "MatrixWeight", "weight_for", "moments", "inner_product", "inner_product_stripped",
    "MonicFamily", "monic_polys", "monic_polys_for", "three_term_extract", "recurrence_residual",
    "is_orthogonal_family", "block_weights", "block_polys", "mirror", "cross_validate_pipelines",
    "is_block_diagonal_after_Y", "leading_coefficient_Q", "recurrence_consistency",
]
