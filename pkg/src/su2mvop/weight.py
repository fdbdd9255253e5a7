"""The weight matrix W = rho * Z on [-1, 1], its symmetries and its block split.

Throughout, rho(x) = sqrt(1 - x^2) and a weight is stored as the polynomial
matrix Z with W = rho * Z.  Matrix indices n = 0..2l correspond to the
spin labels p = n - l (see ``spherical.index_of``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chebyshev import ChebExpansion, cheb_to_poly, laurent_to_poly_in_x
from .linalg import bareiss_det, matmul, nullspace, rank, transpose
from .matpoly import MatPoly
from .polynomials import Poly
from .scalars import HalfInt, QuadRat, factorial, half, pochhammer
from .spherical import conj_transpose, full_sf, index_of, label_of, labels


# ---------------------------------------------------------------------------
# sign and flip matrices


def J_mat(n: int):
    return [[Fraction(int(i + j == n - 1)) for j in range(n)] for i in range(n)]


def F_mat(n: int):
    return [[Fraction((-1) ** i) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def Y_mat(l):
    """The orthogonal matrix splitting W into its J = +1 and J = -1 parts."""
    l = half(l)
    n = l.twice + 1
    r = QuadRat(0, Fraction(1, 2))  # 1/sqrt(2)
    Y = [[QuadRat(0) for _ in range(n)] for _ in range(n)]
    k = n // 2
    if n % 2 == 0:
        for i in range(k):
            Y[i][i] = r
            Y[i][n - 1 - i] = r
            Y[k + i][k - 1 - i] = -r
            Y[k + i][k + i] = r
    else:
        for i in range(k):
            Y[i][i] = r
            Y[i][n - 1 - i] = r
            Y[k + 1 + i][k - 1 - i] = -r
            Y[k + 1 + i][k + 1 + i] = r
        Y[k][k] = QuadRat(1)
    return Y


# ---------------------------------------------------------------------------
# the coefficients c_n(p, q)


def in_natural_domain(p, q) -> bool:
    p, q = half(p), half(q)
    return q <= p and (p + q).twice <= 0


def natural_orientation(p, q):
    """A representative of {(p,q), (q,p), (-p,-q), (-q,-p)} with q <= p, p+q <= 0.

    All four label pairs carry the same weight entry because Z is symmetric
    and commutes with J.
    """
    p, q = half(p), half(q)
    for a, b in ((p, q), (q, p), (-p, -q), (-q, -p)):
        if in_natural_domain(a, b):
            return a, b
    raise AssertionError("unreachable")


def c_formula(l, p, q, n: int) -> Fraction:
    """Closed form for the coefficient of U_{2l+p+q-2n}, valid for q <= p, p + q <= 0."""
    l, p, q = half(l), half(p), half(q)
    if not in_natural_domain(p, q):
        raise ValueError(f"({p}, {q}) outside q <= p, p + q <= 0")
    top = int(l + q)
    if not 0 <= n <= top:
        raise ValueError(f"n = {n} outside 0..{top}")
    k = top - n
    two_l = l.twice
    val = Fraction(two_l + 1) / (l + p + 1).value
    val *= Fraction(factorial(l - q) * factorial(l + q), factorial(two_l))
    val *= pochhammer((p - l).value, k) / pochhammer((l + p + 2).value, k)
    val *= (-1) ** k
    val *= pochhammer(two_l + 2 - n, n) / factorial(n)
    return val


def _check_labels(l, p, q):
    for v in (p, q):
        if abs(v) > l or not (l - v).is_integral:
            raise ValueError(f"label {v} invalid for l = {l}")


def weight_coeff_c(l, p, q, n: int) -> Fraction:
    """Coefficient of U_{2l+p+q-2n} in the (p, q) entry of Z."""
    l, p, q = half(l), half(p), half(q)
    _check_labels(l, p, q)
    k = (2 * l + p + q).twice // 2 - 2 * n
    a, b = natural_orientation(p, q)
    m = (2 * l + a + b).twice // 2 - k
    if k < 0 or m % 2:
        raise ValueError(f"n = {n} does not index a U-coefficient of entry ({p}, {q})")
    m //= 2
    if not 0 <= m <= int(l + b):
        raise ValueError(f"n = {n} outside the expansion of entry ({p}, {q})")
    return c_formula(l, a, b, m)


def weight_entry_cheb(l, p, q) -> ChebExpansion:
    l = half(l)
    a, b = natural_orientation(p, q)
    top = int(l + b)
    base = (2 * l + a + b).twice // 2
    return ChebExpansion.from_terms([(base - 2 * n, c_formula(l, a, b, n)) for n in range(top + 1)])


@dataclass
class WeightCheb:
    """Z in the U basis; the weight is rho * Z."""

    l: HalfInt
    entries: list

    @property
    def size(self) -> int:
        return self.l.twice + 1

    def to_matpoly(self) -> MatPoly:
        return MatPoly([[cheb_to_poly(e) for e in row] for row in self.entries])

    def coefficient_matrices(self):
        """A_k with Z = sum_k U_k A_k."""
        top = max(e.degree for row in self.entries for e in row)
        return [[[e[k] for e in row] for row in self.entries] for k in range(top + 1)]

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]


def weight_Z(l) -> WeightCheb:
    l = half(l)
    return WeightCheb(l, [[weight_entry_cheb(l, p, q) for q in labels(l)] for p in labels(l)])


def weight_W_monomial(l) -> MatPoly:
    """Z in the monomial basis; W = rho * Z."""
    return weight_Z(l).to_matpoly()


def weight_from_spherical(l) -> MatPoly:
    """Z computed as Phi_0 Phi_0^* through the Laurent pipeline."""
    phi = full_sf(l, 0)
    v = matmul(phi, conj_transpose(phi))
    return MatPoly([[laurent_to_poly_in_x(e) for e in row] for row in v])


def printed_entry(l, n: int, m: int, negative_index: str = "reflect") -> ChebExpansion:
    """The entry formula in the n <= m orientation, summed over t = 0..m.

    Terms U_k with k < 0 appear when n + m > 2l; ``reflect`` reads them as
    U_{-k} = -U_{k-2}, ``clamp`` drops them.
    """
    l = half(l)
    two_l = l.twice
    if n > m:
        n, m = m, n
    pre = Fraction(two_l + 1, n + 1) * Fraction(factorial(two_l - m) * factorial(m), factorial(two_l))
    terms = []
    for t in range(m + 1):
        c = pre * (-1) ** (m - t) * pochhammer(n - two_l, m - t) / pochhammer(n + 2, m - t)
        c *= pochhammer(two_l + 2 - t, t) / factorial(t)
        k = n + m - 2 * t
        if k >= 0:
            terms.append((k, c))
        elif negative_index == "reflect" and k <= -2:
            terms.append((-k - 2, -c))
    return ChebExpansion.from_terms(terms)


# ---------------------------------------------------------------------------
# weights of the form rho * (1-x)^a (1+x)^b * matrix polynomial


def _divides_all(M: MatPoly, lin: Poly) -> bool:
    return all(not e or not e.divmod(lin)[1] for row in M.entries for e in row)


@dataclass(frozen=True)
class FactoredWeight:
    """(1-x)^a (1+x)^b * M(x), with a, b half-integers, stored in lowest terms."""

    a: HalfInt
    b: HalfInt
    matrix: MatPoly

    @classmethod
    def from_rho_times(cls, Z: MatPoly) -> "FactoredWeight":
        a = b = half("1/2")
        one_minus, one_plus = Poly([1, -1]), Poly([1, 1])
        while Z and _divides_all(Z, one_minus):
            Z = Z.map(lambda e: e.exact_div(one_minus) if e else e)
            a += 1
        while Z and _divides_all(Z, one_plus):
            Z = Z.map(lambda e: e.exact_div(one_plus) if e else e)
            b += 1
        return cls(a, b, Z)

    def rho_times(self) -> MatPoly:
        """The polynomial Z with this weight equal to rho * Z."""
        factor = Poly([1, -1]) ** int(self.a - half("1/2")) * Poly([1, 1]) ** int(self.b - half("1/2"))
        return self.matrix.scale(factor)

    def __eq__(self, other):
        if not isinstance(other, FactoredWeight):
            return NotImplemented
        return self.rho_times() == other.rho_times()

    def scale(self, c) -> "FactoredWeight":
        return FactoredWeight(self.a, self.b, self.matrix.scale(c))


def _conj_const(Y, M: MatPoly) -> MatPoly:
    return MatPoly.constant(Y) @ M @ transpose(Y)


def conjugate_by_Y(l, Z: MatPoly) -> MatPoly:
    """Y Z Y^t over Q(sqrt 2)."""
    return _conj_const(Y_mat(l), Z)


def _block(M: MatPoly, rows, cols) -> MatPoly:
    return MatPoly([[M.entries[i][j] for j in cols] for i in rows])


@dataclass
class BlockSplit:
    W1: FactoredWeight
    W2: FactoredWeight


def block_split(l) -> BlockSplit:
    """The two diagonal blocks of Y W Y^t, assembled from the blocks of Z.

    Half-odd l: W1 = A + B J and W2 = J F W1(-x) F J.  Integral l: the first
    block is the J = +1 part (it contains the middle label and carries sqrt(2)
    in its last row and column), the second the J = -1 part.
    """
    l = half(l)
    Z = weight_W_monomial(l)
    n = l.twice + 1
    k = n // 2
    if n % 2 == 0:
        A = _block(Z, range(k), range(k))
        B = _block(Z, range(k), range(k, n))
        W1 = A + B @ J_mat(k)
        JF = matmul(J_mat(k), F_mat(k))
        W2 = MatPoly.constant(JF) @ W1.reflect() @ transpose(JF)
    else:
        Jk = J_mat(k)
        A = _block(Z, range(k), range(k))
        B = _block(Z, range(k), range(k + 1, n))
        col = _block(Z, range(k), [k])
        mid = Z.entries[k][k]
        top = A + B @ Jk
        if k:
            top_q = top.map(lambda e: e.scale(QuadRat(1)))
            col_q = (col + MatPoly.constant(Jk) @ _block(Z, range(k + 1, n), [k])).map(
                lambda e: e.scale(QuadRat(0, Fraction(1, 2)))
            )
            entries = [row + c for row, c in zip(top_q.entries, col_q.entries)]
            entries.append([e for e in col_q.transpose().entries[0]] + [mid.scale(QuadRat(1))])
            W1 = MatPoly(entries)
        else:
            W1 = MatPoly([[mid]])
        D = _block(Z, range(k + 1, n), range(k + 1, n))
        W2 = D - _block(Z, range(k + 1, n), range(k)) @ Jk
    return BlockSplit(FactoredWeight.from_rho_times(W1), FactoredWeight.from_rho_times(W2))


def block_split_by_conjugation(l):
    """Cross-check route: the diagonal blocks of Y Z Y^t and whether the rest vanishes."""
    l = half(l)
    n = l.twice + 1
    k = (n + 1) // 2
    M = conjugate_by_Y(l, weight_W_monomial(l))
    off_zero = all(
        not M.entries[i][j] for i in range(n) for j in range(n) if (i < k) != (j < k)
    )
    return _block(M, range(k), range(k)), _block(M, range(k, n), range(k, n)), off_zero


# ---------------------------------------------------------------------------
# symmetries, positivity, commutant, determinant


def check_symmetries(l):
    """Z^t = Z, J Z J = Z and Z(-x) = F Z(x) F as exact identities."""
    l = half(l)
    Z = weight_W_monomial(l)
    n = l.twice + 1
    J, F = J_mat(n), F_mat(n)
    return {
        "symmetric": Z.transpose() == Z,
        "persymmetric": MatPoly.constant(J) @ Z @ J == Z,
        "parity": Z.reflect() == MatPoly.constant(F) @ Z @ F,
    }


def is_positive_definite_at(l, x) -> bool:
    from .linalg import is_positive_definite

    return is_positive_definite(weight_W_monomial(l)(Fraction(x)))


def commutant_basis(l, bound=4):
    """Basis of constant matrices B with A_k B = B A_k for every U-coefficient A_k of Z."""
    l = half(l)
    if l > bound:
        raise ValueError(f"l = {l} above the configured bound {bound}")
    n = l.twice + 1
    rows = []
    for A in weight_Z(l).coefficient_matrices():
        # (A B - B A)_{ij} = sum_k A_ik B_kj - B_ik A_kj, unknowns B_rs at r*n+s
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[k * n + j] += A[i][k]
                    row[i * n + k] -= A[k][j]
                if any(row):
                    rows.append(row)
    basis = nullspace(rows, n * n)
    return [[[v[i * n + j] for j in range(n)] for i in range(n)] for v in basis]


def commutant_is_span_I_J(l) -> bool:
    l = half(l)
    n = l.twice + 1
    basis = commutant_basis(l)
    flat = [sum(B, []) for B in basis]
    I = [Fraction(int(i == j)) for i in range(n) for j in range(n)]
    J = sum(J_mat(n), [])
    return rank(flat) == rank(flat + [I, J]) == rank([I, J])


@dataclass
class DetReport:
    l: HalfInt
    holds: bool
    lhs: Poly
    rhs: Poly
    leading_coefficient: Fraction
    leading_signed_form: Fraction
    notes: list = field(default_factory=list)


def det_conjecture_check(l, bound=3) -> DetReport:
    l = half(l)
    if l > bound:
        raise ValueError(f"l = {l} above the configured bound {bound}; raise it explicitly")
    Z = weight_W_monomial(l)
    lhs = bareiss_det(Z.entries, Poly.exact_div, Poly.const(1))
    prod = Fraction(1)
    for p in labels(l):
        prod *= 2**l.twice * weight_coeff_c(l, p, -p, 0)
    power = int(l * (l.twice + 1))
    rhs = Poly([1, 0, -1]) ** power * prod
    signed = (-1) ** power * prod
    rep = DetReport(l, lhs == rhs, lhs, rhs, lhs.coeffs[-1] if lhs else Fraction(0), signed)
    if rep.leading_coefficient != signed:
        rep.notes.append("signed leading-coefficient form disagrees")
    return rep


# ---------------------------------------------------------------------------
# Fourier coefficients of Phi Phi^*


def trace_product_laurent(l, l1, l2, m1, m2):
    """sum_j Phi^{l1,l2}_{jj} conj(Phi^{m1,m2}_{jj}) as a Laurent polynomial in u."""
    from .polynomials import LaurentPoly
    from .spherical import restricted_sf

    a = restricted_sf(l1, l2, l)
    b = restricted_sf(m1, m2, l)
    out = LaurentPoly()
    for i in range(len(a)):
        out = out + a[i][i] * b[i][i].conj()
    return out


def trace_product_coefficients(l, l1, l2, m1, m2):
    """{s: d_s} from the squared Clebsch-Gordan double sum, e^{ist} = u^{2s}."""
    from .clebsch_gordan import cg_squared
    from .scalars import halfint_range

    l, l1, l2, m1, m2 = (half(v) for v in (l, l1, l2, m1, m2))
    out = {}
    for j in labels(l):
        for j1 in halfint_range(-l1, l1):
            j2 = j - j1
            if abs(j2) > l2:
                continue
            a = cg_squared(l1, l2, l, j1, j2, j)
            if not a:
                continue
            for i1 in halfint_range(-m1, m1):
                i2 = j - i1
                if abs(i2) > m2:
                    continue
                b = cg_squared(m1, m2, l, i1, i2, j)
                s = (j2 - j1 + i1 - i2).value
                out[s] = out.get(s, 0) + a * b
    return {s: v for s, v in out.items() if v}


@dataclass
class TraceProductReport:
    coefficients: dict
    matches_laurent: bool
    flat_range: Fraction
    flat: bool


def trace_product_expansion(l, l1, l2, m1, m2) -> TraceProductReport:
    l, l1, l2, m1, m2 = (half(v) for v in (l, l1, l2, m1, m2))
    coeffs = trace_product_coefficients(l, l1, l2, m1, m2)
    lp = trace_product_laurent(l, l1, l2, m1, m2)
    via_laurent = {Fraction(k, 2): c for k, c in lp.terms.items()}
    bound = max(abs(l1 - m1), abs(l2 - m2)).value
    # attained s lie in one class mod 2; the flat window is read on that lattice
    ref = next(iter(coeffs), Fraction(0))
    flat_vals = {coeffs.get(Fraction(s2, 2), Fraction(0)) for s2 in range(-int(2 * bound), int(2 * bound) + 1)
                 if (Fraction(s2, 2) - ref) % 2 == 0}
    return TraceProductReport(coeffs, via_laurent == coeffs, bound, len(flat_vals) <= 1)


__all__ = [
    "J_mat", "F_mat", "Y_mat", "c_formula", "weight_coeff_c", "weight_Z", "weight_W_monomial",
    "weight_from_spherical", "printed_entry", "FactoredWeight", "block_split",
    "block_split_by_conjugation", "check_symmetries", "commutant_basis", "commutant_is_span_I_J",
    "det_conjecture_check", "trace_product_expansion", "natural_orientation", "index_of", "label_of",
]
