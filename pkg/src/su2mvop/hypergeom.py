"""Terminating hypergeometric sums and the summation identities behind the weight
coefficients.

Everything is an exact finite sum over Fractions.  The identity checkers
evaluate both sides independently and compare; the sweeps enumerate every
admissible parameter tuple inside the given bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import HalfInt, as_rat, binom, factorial, half, halfint_range, pochhammer

F = Fraction


class HypergeometricError(ValueError):
    """Rejected series; ``index`` names the offending parameter (or None)."""

    def __init__(self, message, kind=None, index=None):
        super().__init__(message)
        self.kind = kind
        self.index = index


def _nonpos_int(x: Fraction):
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypSeries:
    """pFq(numerator; denominator; argument)."""

    numerator: tuple
    denominator: tuple
    argument: Fraction = F(1)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(as_rat(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(as_rat(b) for b in self.denominator))
        object.__setattr__(self, "argument", as_rat(self.argument))

    @property
    def length(self) -> int:
        """Index of the last nonzero term, from the earliest terminating numerator."""
        stops = [int(-a) for a in self.numerator if _nonpos_int(a)]
        if not stops:
            raise HypergeometricError("series does not terminate: no nonpositive integer numerator",
                                      kind="non-terminating")
        return min(stops)


def rfs(numerator, denominator, argument=1) -> HypSeries:
    return HypSeries(tuple(numerator), tuple(denominator), argument)


def hyp_eval(s: HypSeries) -> Fraction:
    """sum_{k=0}^{K} prod (a_i)_k / prod (b_j)_k * z^k / k!, K the termination index.

    A denominator equal to -m with m < K would vanish inside the summation
    range; the series is rejected with that parameter's index.
    """
    K = s.length
    for j, b in enumerate(s.denominator):
        if _nonpos_int(b) and -b < K:
            raise HypergeometricError(
                f"denominator parameter {j} = {b} vanishes before the series terminates",
                kind="denominator-pole", index=j)
    total = F(0)
    term = F(1)
    for k in range(K + 1):
        total += term
        if k == K:
            break
        num = F(1)
        for a in s.numerator:
            num *= a + k
        den = F(k + 1)
        for b in s.denominator:
            den *= b + k
        term = term * num * s.argument / den
    return total


# ---------------------------------------------------------------------------
# Chu-Vandermonde and Sheppard


def chu_vandermonde(n: int, a, c):
    """(2F1(-n, a; c; 1), (c-a)_n / (c)_n)."""
    a, c = as_rat(a), as_rat(c)
    lhs = hyp_eval(rfs([-n, a], [c]))
    cn = pochhammer(c, n)
    if cn == 0:
        raise HypergeometricError("(c)_n vanishes", kind="denominator-pole", index=0)
    return lhs, pochhammer(c - a, n) / cn


def sheppard_sides(n: int, a, b, d, e, form: str = "corrected"):
    """Both finite sums of the 3F2 transformation.

    ``corrected``: sum (e+k)_{n-k} (d+k)_{n-k} (-n)_k (a)_k (b)_k / k! on the left,
    which is (d)_n (e)_n 3F2(-n, a, b; d, e; 1).  ``printed`` has (a)_n (b)_n
    in place of (a)_k (b)_k, a form that does not hold in general.
    The right side is sum (d-a)_{n-k} (e-a)_{n-k} (-n)_k (a)_k (a+b-n-d-e+1)_k / k!.
    """
    a, b, d, e = (as_rat(v) for v in (a, b, d, e))
    if form not in ("corrected", "printed"):
        raise ValueError("form must be 'corrected' or 'printed'")
    for idx, v in enumerate((d, e)):
        if pochhammer(v, n) == 0:
            raise HypergeometricError(f"parameter {'de'[idx]} = {v} gives a vanishing (.)_n",
                                      kind="denominator-pole", index=idx)
    lhs = rhs = F(0)
    c = a + b - n - d - e + 1
    for k in range(n + 1):
        common = pochhammer(-n, k) / factorial(k)
        if form == "corrected":
            ab = pochhammer(a, k) * pochhammer(b, k)
        else:
            ab = pochhammer(a, n) * pochhammer(b, n)
        lhs += pochhammer(e + k, n - k) * pochhammer(d + k, n - k) * common * ab
        rhs += pochhammer(d - a, n - k) * pochhammer(e - a, n - k) * common * pochhammer(a, k) * pochhammer(c, k)
    return lhs, rhs


def sheppard_check(n: int, a, b, d, e, form: str = "corrected") -> bool:
    lhs, rhs = sheppard_sides(n, a, b, d, e, form)
    return lhs == rhs


# ---------------------------------------------------------------------------
# e_s and d_r


def _check_prop_a1(l: HalfInt, p: HalfInt, q: HalfInt, s: int):
    for v in (p, q):
        if abs(v) > l or not (l - v).is_integral:
            raise ValueError(f"label {v} invalid for l = {l}")
    if q > p or (p + q).twice > 0:
        raise ValueError("need q <= p and p + q <= 0")
    if not 0 <= s <= int(l + q):
        raise ValueError(f"s = {s} outside 0..{int(l + q)}")


def e_s_raw(l, p, q, s: int) -> Fraction:
    """The binomial double sum."""
    l, p, q = half(l), half(p), half(q)
    _check_prop_a1(l, p, q, s)
    lp, lq, lmp, lmq, two_l = int(l + p), int(l + q), int(l - p), int(l - q), l.twice
    total = F(0)
    for n in range(lq - s + 1):
        outer = binom(lp, n) * binom(lq, n + s)
        if not outer:
            continue
        inner = F(0)
        for m in range(lmp - s + 1):
            inner += binom(lmp, m + s) * binom(lmq, m) / binom(two_l, m + n + s) ** 2
        total += outer * inner
    return total


def e_s_closed(l, p, q, s: int) -> Fraction:
    """The single-sum closed form."""
    l, p, q = half(l), half(p), half(q)
    _check_prop_a1(l, p, q, s)
    lq = int(l + q)
    two_l = l.twice
    pre = F(two_l + 1) / (l + p + 1).value * F(factorial(l - q) * factorial(l + q), factorial(two_l))
    total = F(0)
    for T in range(lq - s + 1):
        k = lq - T
        total += (-1) ** k * pochhammer((p - l).value, k) * pochhammer(two_l + 2 - T, T) / (
            pochhammer((l + p + 2).value, k) * factorial(T))
    return pre * total


def e_s_eval(l, p, q, s: int):
    """(raw, closed)."""
    return e_s_raw(l, p, q, s), e_s_closed(l, p, q, s)


def prop_a1_grid(lmax):
    """All admissible (l, p, q, s) with l <= lmax."""
    for twice in range(1, half(lmax).twice + 1):
        l = half(F(twice, 2))
        for p in halfint_range(-l, l):
            for q in halfint_range(-l, l):
                if q > p or (p + q).twice > 0:
                    continue
                for s in range(int(l + q) + 1):
                    yield l, p, q, s


def _halved(v: HalfInt) -> HalfInt:
    """v / 2 for an integral v."""
    if not v.is_integral:
        raise ValueError(f"{v} is not integral")
    return half(v.value / 2)


def _binom_h(n: HalfInt, k: HalfInt) -> Fraction:
    return binom(int(n), int(k)) if k.value >= 0 else F(0)


def F_ij(l, p, q, i, j) -> Fraction:
    """The double CG-square sum F^l_{ij}(p, q), for |i| <= (l+q)/2, |j| <= (l+p)/2."""
    l, p, q, i, j = (half(v) for v in (l, p, q, i, j))
    hp, hq, hmp, hmq = _halved(l + p), _halved(l + q), _halved(l - p), _halved(l - q)
    outer = _binom_h(l + p, j + hp) * _binom_h(l + q, i + hq)
    if not outer:
        return F(0)
    lo = max(-j - hmp, i - hmq)
    hi = min(-j + hmp, i + hmq)
    two_l = half(l.twice)
    inner = F(0)
    k = lo
    while k <= hi:
        inner += _binom_h(l - p, -k - j + hmp) * _binom_h(l - q, k - i + hmq) / _binom_h(two_l, l - k) ** 2
        k = k + 1
    return outer * inner


def d_r_raw(l, p, q, r) -> Fraction:
    """sum_i F_{i, r-i}: the coefficient of e^{-2irt} from the CG-square double sums."""
    l, p, q, r = (half(v) for v in (l, p, q, r))
    hp, hq = _halved(l + p), _halved(l + q)
    lo, hi = max(-hq, r - hp), min(hq, r + hp)
    total = F(0)
    i = lo
    while i <= hi:
        total += F_ij(l, p, q, i, r - i)
        i = i + 1
    return total


def d_r_range(l, p, q):
    """The r with |r| <= l + (p+q)/2, stepping by 1 from the top."""
    l, p, q = half(l), half(p), half(q)
    top = l + _halved(p + q)
    out = []
    r = -top
    while r <= top:
        out.append(r)
        r = r + 1
    return out


def _entry_fourier(l, p, q):
    """Fourier coefficients of v_{p,q}(cos t) in e^{-2irt}, from the spherical-function pipeline."""
    from .spherical import conj_transpose, full_sf, index_of
    from .linalg import matmul

    phi = full_sf(l, 0)
    v = matmul(phi, conj_transpose(phi))[index_of(p, l)][index_of(q, l)]
    # e^{-2irt} = u^{-4r}
    return {half(F(-k, 4)): c for k, c in v.terms.items()}


def _entry_partial_sums(l, p, q, rs):
    """d_r from the U-expansion: U_k contributes 1 to every e^{-2irt} with 2|r| <= k, k - 2r even."""
    from .weight import weight_entry_cheb

    e = weight_entry_cheb(l, p, q)
    out = {}
    for r in rs:
        tot = F(0)
        for k, c in enumerate(e.coeffs):
            if c and k >= abs(r.value) * 2 and (k - 2 * r.value) % 2 == 0:
                tot += c
        out[r] = tot
    return out


@dataclass
class DrReport:
    l: HalfInt
    p: HalfInt
    q: HalfInt
    rs: list
    values: list  # d_r in the order of rs, from the spherical-function pipeline
    raw_matches: bool
    partial_sum_matches: bool
    printed_relation_matches: bool | None  # only for q <= p, p + q <= 0
    e_s_matches: bool | None
    flat: bool

    @property
    def passed(self) -> bool:
        return (self.raw_matches and self.partial_sum_matches and self.flat
                and self.printed_relation_matches is not False and self.e_s_matches is not False)

    def as_dict(self):
        return dict(zip(self.rs, self.values))


def d_r_coefficients(l, p, q) -> DrReport:
    """Fourier coefficients d_r of v_{p,q}, cross-checked three ways.

    In the natural domain q <= p, p + q <= 0 the relation
    d_r = sum_{n=0}^{l+q-(r+(q-p)/2)} c_n(p, q) for r >= (p-q)/2 and the
    identity d_{s+(p-q)/2} = e_s are checked too.
    """
    from .weight import weight_coeff_c

    l, p, q = half(l), half(p), half(q)
    for v in (p, q):
        if abs(v) > l or not (l - v).is_integral:
            raise ValueError(f"label {v} invalid for l = {l}")
    rs = d_r_range(l, *_natural(p, q))
    fourier = _entry_fourier(l, p, q)
    vals = [fourier.get(r, F(0)) for r in rs]
    extra = {r: c for r, c in fourier.items() if c and r not in rs}
    raw_ok = not extra and all(d_r_raw(l, *_natural(p, q), r) == v for r, v in zip(rs, vals))
    partial = _entry_partial_sums(l, p, q, rs)
    partial_ok = all(partial[r] == v for r, v in zip(rs, vals))
    printed_ok = e_ok = None
    if q <= p and (p + q).twice <= 0:
        printed_ok = True
        e_ok = True
        shift = _halved(p - q)
        for r, v in zip(rs, vals):
            if r < shift:
                continue
            top = int(l + q - (r + _halved(q - p)))
            if sum((weight_coeff_c(l, p, q, n) for n in range(top + 1)), F(0)) != v:
                printed_ok = False
            s = int(r - shift)
            if e_s_raw(l, p, q, s) != v:
                e_ok = False
    bound = abs(_halved(p - q))
    flat_vals = {v for r, v in zip(rs, vals) if abs(r) <= bound}
    return DrReport(l, p, q, rs, vals, raw_ok, partial_ok, printed_ok, e_ok, len(flat_vals) <= 1)


def _natural(p, q):
    """(p, q) or (-q, -p), whichever has p + q <= 0; v_{p,q} = v_{-q,-p}."""
    return (p, q) if (p + q).twice <= 0 else (-q, -p)


# ---------------------------------------------------------------------------
# the two corollaries


def _check_a2(N, a, b, c):
    if not (N >= 0 and 0 <= a <= N and 0 <= b <= N and a <= b and N <= a + b and 0 <= c <= N - b):
        raise ValueError(f"(N, a, b, c) = {(N, a, b, c)} violates 0<=a<=N, 0<=b<=N, a<=b, N<=a+b, 0<=c<=N-b")


def _check_a3(N, a, b, c):
    if not (N >= 0 and 0 <= a <= N and 0 <= b <= N and b <= a and a + b <= N and 0 <= c <= N - a - b):
        raise ValueError(f"(N, a, b, c) = {(N, a, b, c)} violates 0<=a<=N, 0<=b<=N, b<=a, a+b<=N, 0<=c<=N-a-b")


def cor_a2_sides(N: int, a: int, b: int, c: int):
    _check_a2(N, a, b, c)
    lhs = F(0)
    for m in range(c + 1):
        pre = pochhammer(-c, m) * pochhammer(b + 1, m) ** 2 / (
            pochhammer(N - a - c + 1, m) * factorial(m) * pochhammer(b - N, m))
        if not pre:
            continue
        s = rfs([-b, N - a - b - c, N - b - m + 1, N - b - m + 1], [N - b - c + 1, -b - m, -b - m])
        lhs += pre * hyp_eval(s)
    rhs = F(0)
    for n in range(c + 1):
        k = N - b - n
        rhs += pochhammer(-a, k) * (-1) ** k * pochhammer(N + 2 - n, n) / (pochhammer(N - a + 2, k) * factorial(n))
    rhs *= binom(N + 1, a) / (binom(b, N - a - c) * binom(N - b, N - b - c))
    return lhs, rhs


def cor_a3_lhs(N: int, a: int, b: int, c: int) -> Fraction:
    _check_a3(N, a, b, c)
    total = F(0)
    for n in range(b + 1):
        pre = pochhammer(-b, n) * pochhammer(c + a - N, n) * pochhammer(a + c + 1, n) ** 2 / (
            factorial(n) * pochhammer(c + 1, n) * pochhammer(a + c - N, n) ** 2)
        if not pre:
            continue
        s = rfs([-a, -a - c, N - a - c - n + 1, N - a - c - n + 1], [N - a - b - c + 1, -a - c - n, -a - c - n])
        total += pre * hyp_eval(s)
    return binom(N - b, a + c) * binom(N - a, c) / binom(N, a + c) ** 2 * total


def cor_a3_rhs(N: int, a: int, b: int) -> Fraction:
    total = F(0)
    for m in range(b + 1):
        total += pochhammer(-a, m) * pochhammer(N - b + m + 2, b - m) * (-1) ** m / (
            pochhammer(N - a + 2, m) * factorial(b - m))
    return F(N + 1, N - a + 1) / binom(N, b) * total


def cor_a3_sides(N: int, a: int, b: int, c: int):
    return cor_a3_lhs(N, a, b, c), cor_a3_rhs(N, a, b)


def corollary_checks(which: int, N: int, a: int, b: int, c: int) -> bool:
    """Exact check of one parameter tuple; ``which`` is 1 (first corollary) or 2 (second).

    For the second corollary the left side is also evaluated over the whole
    admissible c range and required to be constant.
    """
    if which == 1:
        lhs, rhs = cor_a2_sides(N, a, b, c)
        return lhs == rhs
    if which == 2:
        lhs, rhs = cor_a3_sides(N, a, b, c)
        if lhs != rhs:
            return False
        return all(cor_a3_lhs(N, a, b, cc) == lhs for cc in range(N - a - b + 1))
    raise ValueError("which must be 1 or 2")


def cor_a2_grid(Nmax: int):
    for N in range(Nmax + 1):
        for a in range(N + 1):
            for b in range(a, N + 1):
                if N > a + b:
                    continue
                for c in range(N - b + 1):
                    yield N, a, b, c


def cor_a3_grid(Nmax: int):
    for N in range(Nmax + 1):
        for a in range(N + 1):
            for b in range(min(a, N - a) + 1):
                for c in range(N - a - b + 1):
                    yield N, a, b, c


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepResult:
    suite: str
    bound: object
    checked: int = 0
    passed: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and self.passed == self.checked

    def record(self, params, ok: bool, detail=None):
        self.checked += 1
        if ok:
            self.passed += 1
        elif len(self.counterexamples) < 10:
            self.counterexamples.append({"params": params, "detail": detail})


def sweep_prop_a1(lmax=3) -> SweepResult:
    res = SweepResult("prop-a1", lmax)
    for l, p, q, s in prop_a1_grid(lmax):
        raw, closed = e_s_eval(l, p, q, s)
        res.record((l, p, q, s), raw == closed, (raw, closed))
    return res


def sweep_cor_a2(Nmax=12) -> SweepResult:
    res = SweepResult("cor-a2", Nmax)
    for t in cor_a2_grid(Nmax):
        lhs, rhs = cor_a2_sides(*t)
        res.record(t, lhs == rhs, (lhs, rhs))
    return res


def sweep_cor_a3(Nmax=10) -> SweepResult:
    res = SweepResult("cor-a3", Nmax)
    lhs_by_abN = {}
    for N, a, b, c in cor_a3_grid(Nmax):
        lhs = cor_a3_lhs(N, a, b, c)
        rhs = cor_a3_rhs(N, a, b)
        first = lhs_by_abN.setdefault((N, a, b), lhs)
        res.record((N, a, b, c), lhs == rhs and lhs == first, (lhs, rhs))
    return res


def sweep_sheppard(nmax=6, samples=None, seed=0, form="corrected") -> SweepResult:
    """Sheppard's transformation on a deterministic grid of rationals avoiding poles."""
    import random

    rng = random.Random(seed)
    res = SweepResult(f"sheppard-{form}", nmax)
    pool = [F(k, 2) for k in range(-7, 8)] + [F(k, 3) for k in (-5, -2, 1, 4, 7)]
    count = samples if samples is not None else 50
    done = 0
    attempts = 0
    while done < count and attempts < 100 * count:
        attempts += 1
        n = rng.randint(0, nmax)
        a, b, d, e = (rng.choice(pool) for _ in range(4))
        try:
            lhs, rhs = sheppard_sides(n, a, b, d, e, form)
        except HypergeometricError:
            continue
        res.record((n, a, b, d, e), lhs == rhs, (lhs, rhs))
        done += 1
    return res


__all__ = [
    "HypSeries", "HypergeometricError", "rfs", "hyp_eval", "chu_vandermonde", "sheppard_sides", "sheppard_check",
    "e_s_raw", "e_s_closed", "e_s_eval", "prop_a1_grid", "F_ij", "d_r_raw", "d_r_range", "DrReport",
    "d_r_coefficients", "cor_a2_sides", "cor_a3_lhs", "cor_a3_rhs", "cor_a3_sides", "corollary_checks",
    "cor_a2_grid", "cor_a3_grid", "SweepResult", "sweep_prop_a1", "sweep_cor_a2", "sweep_cor_a3",
    "sweep_sheppard",
]
