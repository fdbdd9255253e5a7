"""Dense exact linear algebra on lists of lists.

Entries may be any exact ring element.  Routines that need division either
work over a field (Fraction, QuadRat) or take an exact-division callable.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(n, m=None, zero=Fraction(0)):
    m = n if m is None else m
    return [[zero for _ in range(m)] for _ in range(n)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in r] for r in a]


def mat_neg(a):
    return [[-x for x in r] for r in a]


def matmul(a, b):
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {n}x{k} @ {k2}x{m}")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_map(f, a):
    return [[f(x) for x in r] for r in a]


def mat_eq(a, b):
    return shape(a) == shape(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a):
    return all(x == 0 for r in a for x in r)


def is_diagonal(a):
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a[0])) if i != j)


def diag(values, zero=Fraction(0)):
    n = len(values)
    return [[values[i] if i == j else zero for j in range(n)] for i in range(n)]


def inverse(a):
    """Gauss-Jordan inverse over a field."""
    n = len(a)
    one = a[0][0] ** 0 if hasattr(a[0][0], "__pow__") else Fraction(1)
    aug = [list(a[i]) + [one if i == j else one * 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_left(a, b):
    """X with X a = b over a field, i.e. X = b a^{-1}."""
    return matmul(b, inverse(a))


def bareiss_det(a, exact_div, one):
    """Fraction-free determinant over an integral domain.

    exact_div(p, q) must return the exact quotient; one is the ring unit.
    """
    n = len(a)
    if n == 0:
        return one
    m = [list(r) for r in a]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return one * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def field_div(p, q):
    return p / q


def det(a):
    """Determinant over a field (Fraction or QuadRat)."""
    if not a:
        return Fraction(1)
    return bareiss_det(a, field_div, a[0][0] ** 0)


def minor(a, i, j):
    return [r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i]


def adjugate(a, exact_div, one):
    n = len(a)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = bareiss_det(minor(a, i, j), exact_div, one)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def leading_minors(a):
    return [det([r[:k] for r in a[:k]]) for k in range(1, len(a) + 1)]


def is_positive_definite(a):
    """Sylvester criterion on a symmetric matrix with ordered entries."""
    return all(m > 0 for m in leading_minors(a))


def rref(a):
    m = [list(r) for r in a]
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(a, ncols=None):
    """Basis of {v : a v = 0} over Q."""
    if not a:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    m, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def rank(a):
    return len(rref(a)[1]) if a else 0
