"""Matrix polynomials: rectangular grids of Poly entries."""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly


class MatPoly:
    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = [[e if isinstance(e, Poly) else Poly.const(e) for e in row] for row in entries]

    # construction
    @classmethod
    def zero(cls, n, m=None):
        m = n if m is None else m
        return cls([[Poly() for _ in range(m)] for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls.constant([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def constant(cls, mat):
        return cls([[Poly.const(c) for c in row] for row in mat])

    @classmethod
    def from_coeff_matrices(cls, mats):
        """sum_k mats[k] x^k."""
        n, m = len(mats[0]), len(mats[0][0])
        return cls([[Poly([mats[k][i][j] for k in range(len(mats))]) for j in range(m)] for i in range(n)])

    @classmethod
    def monomial(cls, n, k, mat=None):
        mat = mat if mat is not None else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        return cls([[Poly.monomial(k, c) if c != 0 else Poly() for c in row] for row in mat])

    # shape and access
    @property
    def shape(self):
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    @property
    def degree(self) -> int:
        return max((e.degree for row in self.entries for e in row), default=-1)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def coeff(self, k):
        return [[e[k] for e in row] for row in self.entries]

    def coeff_matrices(self):
        return [self.coeff(k) for k in range(self.degree + 1)]

    def leading(self):
        return self.coeff(self.degree)

    def row_degree(self, i):
        return max(e.degree for e in self.entries[i])

    def __bool__(self):
        return any(e for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    # arithmetic
    def __add__(self, other):
        return MatPoly([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return MatPoly([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatPoly([[-a for a in r] for r in self.entries])

    def __matmul__(self, other):
        if isinstance(other, MatPoly):
            b = other.entries
        else:
            b = [[Poly.const(c) for c in row] for row in other]
        a = self.entries
        n, k, m = len(a), len(b), len(b[0])
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = Poly()
                for t in range(k):
                    if a[i][t] and b[t][j]:
                        acc = acc + a[i][t] * b[t][j]
                row.append(acc)
            out.append(row)
        return MatPoly(out)

    def __rmatmul__(self, other):
        return MatPoly.constant(other) @ self

    def scale(self, c):
        """Multiply every entry by a scalar or a Poly."""
        return MatPoly([[a * c for a in r] for r in self.entries])

    def mul_x(self):
        return self.scale(Poly.x())

    def map(self, f):
        return MatPoly([[f(a) for a in r] for r in self.entries])

    def derivative(self, times=1):
        return self.map(lambda p: p.derivative(times))

    def transpose(self):
        return MatPoly([list(r) for r in zip(*self.entries)])

    def reflect(self):
        """P(-x)."""
        return self.map(Poly.reflect)

    def rationalize(self) -> "MatPoly":
        """Drop QuadRat wrappers whose sqrt(2) part is zero; raise if any is irrational."""
        from .scalars import QuadRat

        def conv(c):
            if isinstance(c, QuadRat):
                if c.b != 0:
                    raise ValueError("entry is not rational")
                return c.a
            return c
        return self.map(lambda p: Poly([conv(c) for c in p.coeffs]))

    def __call__(self, x):
        return [[e(x) for e in r] for r in self.entries]

    def __repr__(self):
        return "MatPoly(" + repr(self.entries) + ")"

    def to_json(self):
        return [[e.to_json() for e in r] for r in self.entries]

    def coeff_json(self):
        from .scalars import scalar_to_json

        return [[[scalar_to_json(c) for c in row] for row in mat] for mat in self.coeff_matrices()]
