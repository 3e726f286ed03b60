"""Exact algebra kernel: integer polynomials, numbers a + b*sqrt(5), Sturm
root counting, and smallest-eigenvalue decisions for integer symmetric
matrices.

Every decision procedure in this module is exact over the integers and
rationals.  Floating point appears only in reporting helpers
(`lambda_min_approx`, `GoldenNumber.to_float`) and never feeds a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence


class AlgebraError(ValueError):
    """An exact operation was applied outside its domain."""


# ---------------------------------------------------------------------------
# matrices (plain nested sequences of ints)


def as_int_rows(matrix) -> tuple[tuple[int, ...], ...]:
    entries = getattr(matrix, "entries", matrix)
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    if any(len(r) != len(rows) for r in rows):
        raise AlgebraError("matrix is not square")
    return rows


def is_symmetric(matrix) -> bool:
    rows = as_int_rows(matrix)
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def det_exact(matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in as_int_rows(matrix)]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * rows[n - 1][n - 1]


# ---------------------------------------------------------------------------
# integer polynomials


class IntPolynomial:
    """Integer-coefficient polynomial; coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    # constructors

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    # basics

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise AlgebraError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise AlgebraError("negative polynomial power")
        result = IntPolynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        """Evaluate at an int or Fraction (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_golden(self, g: "GoldenNumber") -> "GoldenNumber":
        acc = GoldenNumber.of(0)
        for c in reversed(self.coeffs):
            acc = acc * g + GoldenNumber.of(c)
        return acc

    def shifted(self, c: int) -> "IntPolynomial":
        """The polynomial p(x + c)."""
        acc = IntPolynomial.zero()
        xc = IntPolynomial((c, 1))
        for coeff in reversed(self.coeffs):
            acc = acc * xc + coeff
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the (positive) content; the leading sign is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(c // g for c in self.coeffs)

    def try_div(self, divisor: "IntPolynomial") -> Optional["IntPolynomial"]:
        """Exact quotient self / divisor over Z[x], or None if not exact."""
        if divisor.is_zero():
            raise AlgebraError("division by the zero polynomial")
        if self.is_zero():
            return IntPolynomial.zero()
        if self.degree < divisor.degree:
            return None
        rem = [Fraction(c) for c in self.coeffs]
        dv = divisor.coeffs
        dlead = Fraction(dv[-1])
        q = [Fraction(0)] * (len(rem) - len(dv) + 1)
        for k in range(len(q) - 1, -1, -1):
            coef = rem[k + len(dv) - 1] / dlead
            q[k] = coef
            if coef:
                for j, d in enumerate(dv):
                    rem[k + j] -= coef * d
        if any(rem):
            return None
        if any(c.denominator != 1 for c in q):
            return None
        return IntPolynomial(int(c) for c in q)

    def divexact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q = self.try_div(divisor)
        if q is None:
            raise AlgebraError("inexact polynomial division")
        return q


def char_poly(matrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - m), exact over Z.

    Division-free Berkowitz recursion; safe for arbitrary integer entries.
    """
    rows = as_int_rows(matrix)
    return IntPolynomial(reversed(_berkowitz(rows)))


def _berkowitz(rows: Sequence[Sequence[int]]) -> list[int]:
    # Returns coefficients of det(xI - rows), descending, leading 1.
    n = len(rows)
    if n == 0:
        return [1]
    if n == 1:
        return [1, -rows[0][0]]
    a = rows[0][0]
    top = rows[0][1:]
    left = [r[0] for r in rows[1:]]
    minor = [r[1:] for r in rows[1:]]
    v = _berkowitz(minor)  # length n
    col = [1, -a]
    w = list(left)
    m = n - 1
    for k in range(m):
        if k:
            w = [sum(minor[i][j] * w[j] for j in range(m)) for i in range(m)]
        col.append(-sum(top[j] * w[j] for j in range(m)))
    out = []
    for i in range(n + 1):
        s = 0
        for j in range(max(0, i - n), min(i, n - 1) + 1):
            s += col[i - j] * v[j]
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# gcd / squarefree machinery (primitive pseudo-remainder sequences)


def _prim(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = gcd(g, c)
    if g > 1:
        return [c // g for c in cs]
    return cs


def _pseudo_rem(f: list[int], g: list[int]) -> tuple[list[int], int]:
    """(prem, multiplier sign): lc(g)^(df-dg+1) * f = q*g + prem."""
    df, dg = len(f) - 1, len(g) - 1
    lead = g[-1]
    mult_sign = 1 if lead > 0 or (df - dg + 1) % 2 == 0 else -1
    rem = list(f)
    for k in range(df - dg, -1, -1):
        coef = rem[k + dg]
        for i in range(len(rem)):
            rem[i] *= lead
        if coef:
            for j in range(dg + 1):
                rem[k + j] -= coef * g[j]
        # rem now has degree < k+dg in position; keep full array, trim later
        rem[k + dg] = 0
    while rem and rem[-1] == 0:
        rem.pop()
    return rem, mult_sign


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] with positive leading coefficient."""
    a = list(f.primitive().coeffs)
    b = list(g.primitive().coeffs)
    if not a:
        return IntPolynomial(b if not b or b[-1] > 0 else [-c for c in b])
    if not b:
        return IntPolynomial(a if a[-1] > 0 else [-c for c in a])
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = _pseudo_rem(a, b)
        a, b = b, _prim(r)
    if a[-1] < 0:
        a = [-c for c in a]
    return IntPolynomial(a)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with all repeated roots collapsed to simple ones (primitive)."""
    if p.is_zero():
        raise AlgebraError("squarefree part of the zero polynomial")
    pp = p.primitive()
    if pp.degree <= 1:
        return pp
    g = poly_gcd(pp, pp.derivative())
    if g.degree == 0:
        return pp
    return pp.divexact(g).primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: [(f_i, i)] with p = c * prod f_i^i, f_i squarefree."""
    if p.is_zero():
        raise AlgebraError("decomposition of the zero polynomial")
    if p.degree < 1:
        return []
    f = [Fraction(c) for c in p.coeffs]
    df = _q_deriv(f)
    g = _q_gcd(f, df)
    out: list[tuple[IntPolynomial, int]] = []
    c = _q_divexact(f, g)
    d = _q_sub(_q_divexact(df, g), _q_deriv(c))
    i = 1
    while len(c) > 1:
        h = _q_gcd(c, d)
        if len(h) > 1:
            out.append((_q_to_int(h), i))
        c = _q_divexact(c, h)
        d = _q_sub(_q_divexact(d, h), _q_deriv(c))
        i += 1
    return out


# small helpers on Fraction-coefficient polynomials (lists, ascending)


def _q_trim(f: list[Fraction]) -> list[Fraction]:
    while f and not f[-1]:
        f.pop()
    return f


def _q_deriv(f: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(f) if i]


def _q_sub(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    out = list(f) + [Fraction(0)] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return _q_trim(out)


def _q_divmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not g:
        raise AlgebraError("division by zero polynomial")
    rem = list(f)
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        coef = rem[k + len(g) - 1] / g[-1]
        q[k] = coef
        if coef:
            for j, d in enumerate(g):
                rem[k + j] -= coef * d
    return _q_trim(q), _q_trim(rem)


def _q_divexact(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    q, r = _q_divmod(f, g)
    if r:
        raise AlgebraError("inexact rational polynomial division")
    return q


def _q_gcd(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    a, b = list(f), list(g)
    while b:
        _, r = _q_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _q_to_int(f: list[Fraction]) -> IntPolynomial:
    den = 1
    for c in f:
        den = lcm(den, c.denominator)
    return IntPolynomial(int(c * den) for c in f).primitive()


# ---------------------------------------------------------------------------
# numbers in Q(sqrt5)


@dataclass(frozen=True)
class GoldenNumber:
    """Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt5)."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0) -> "GoldenNumber":
        return GoldenNumber(Fraction(a), Fraction(b))

    @staticmethod
    def tau() -> "GoldenNumber":
        """The golden ratio (1 + sqrt5)/2."""
        return GoldenNumber(Fraction(1, 2), Fraction(1, 2))

    def __add__(self, other) -> "GoldenNumber":
        other = _coerce_golden(other)
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "GoldenNumber":
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, other) -> "GoldenNumber":
        return self + (-_coerce_golden(other))

    def __rsub__(self, other) -> "GoldenNumber":
        return (-self) + _coerce_golden(other)

    def __mul__(self, other) -> "GoldenNumber":
        other = _coerce_golden(other)
        return GoldenNumber(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite strict signs; a^2 == 5 b^2 is impossible for nonzero
        # rationals since sqrt5 is irrational
        if a > 0:
            return 1 if a * a > 5 * b * b else -1
        return -1 if a * a > 5 * b * b else 1

    def is_rational(self) -> bool:
        return self.b == 0

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __lt__(self, other) -> bool:
        return (self - _coerce_golden(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - _coerce_golden(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - _coerce_golden(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - _coerce_golden(other)).sign() >= 0


def _coerce_golden(x) -> GoldenNumber:
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenNumber(Fraction(x), Fraction(0))
    raise AlgebraError(f"cannot coerce {x!r} into Q(sqrt5)")


def golden_sign(x: GoldenNumber) -> int:
    """Exact sign of a + b*sqrt5 by rational case analysis."""
    return x.sign()


# ---------------------------------------------------------------------------
# thresholds: distinguished real algebraic cutoffs


@dataclass(frozen=True)
class Threshold:
    """A real algebraic cutoff, always the smallest real root of min_poly.

    Cutoffs inside Q(sqrt5) carry their exact value and Sturm signs are
    evaluated directly in the field; other cutoffs carry an isolating
    rational interval and counting falls back to interval refinement.
    """

    name: str
    min_poly: IntPolynomial
    value: Optional[GoldenNumber] = None
    interval: Optional[tuple[Fraction, Fraction]] = None

    @staticmethod
    def neg_tau() -> "Threshold":
        # -(1+sqrt5)/2, the smaller root of x^2 + x - 1
        return Threshold(
            "-tau",
            IntPolynomial((-1, 1, 1)),
            GoldenNumber(Fraction(-1, 2), Fraction(-1, 2)),
        )

    @staticmethod
    def neg_one_minus_tau() -> "Threshold":
        # -(3+sqrt5)/2, the smaller root of x^2 + 3x + 1
        return Threshold(
            "-1-tau",
            IntPolynomial((1, 3, 1)),
            GoldenNumber(Fraction(-3, 2), Fraction(-1, 2)),
        )

    @staticmethod
    def from_rational(r) -> "Threshold":
        r = Fraction(r)
        poly = IntPolynomial((-r.numerator, r.denominator))
        return Threshold(str(r), poly, GoldenNumber(r, Fraction(0)))

    @staticmethod
    def smallest_root(name: str, min_poly: IntPolynomial,
                      lo, hi) -> "Threshold":
        """Cutoff pinned as the smallest real root of min_poly.

        Requires min_poly squarefree with no root at or below lo except the
        target, a sign change across (lo, hi), and exactly one root there.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        min_poly = min_poly.primitive()
        sf = squarefree_part(min_poly)
        if sf != min_poly and sf != -min_poly:
            raise AlgebraError("threshold minimal polynomial must be squarefree")
        chain = _sturm_chain(list(min_poly.primitive().coeffs))
        below_lo = _count_below_rational(chain, lo)
        if below_lo != 0:
            raise AlgebraError("threshold is not the smallest root of its polynomial")
        slo = _sign_at_rational(min_poly.coeffs, lo)
        shi = _sign_at_rational(min_poly.coeffs, hi)
        if slo == 0 or shi == 0 or slo == shi:
            raise AlgebraError("interval endpoints must bracket a sign change")
        inside = _count_below_rational(chain, hi) - below_lo
        if inside != 1:
            raise AlgebraError("interval must isolate exactly one root")
        return Threshold(name, min_poly, None, (lo, hi))


NEG_TAU = Threshold.neg_tau()
NEG_ONE_MINUS_TAU = Threshold.neg_one_minus_tau()


def parse_threshold(text: str) -> Threshold:
    """Parse '-tau', '-1-tau', or an exact rational 'a/b'; floats rejected."""
    t = text.strip()
    if t == "-tau":
        return NEG_TAU
    if t == "-1-tau":
        return NEG_ONE_MINUS_TAU
    if "." in t or "e" in t.lower():
        raise AlgebraError(f"threshold must be exact, got {text!r}")
    try:
        return Threshold.from_rational(Fraction(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraError(f"cannot parse threshold {text!r}") from exc


# ---------------------------------------------------------------------------
# Sturm chains and root counting


def _sturm_chain(p0: list[int]) -> list[list[int]]:
    chain = [list(p0)]
    if len(p0) <= 1:
        return chain
    p1 = _prim([i * c for i, c in enumerate(p0) if i])
    chain.append(p1)
    while len(chain[-1]) > 1:
        f, g = chain[-2], chain[-1]
        r, mult_sign = _pseudo_rem(f, g)
        if not r:
            break
        if mult_sign > 0:
            r = [-c for c in r]
        chain.append(_prim(r))
    return chain


def _sign_at_neg_inf(cs: Sequence[int]) -> int:
    if not cs:
        return 0
    lead = cs[-1]
    s = 1 if lead > 0 else -1
    return s if (len(cs) - 1) % 2 == 0 else -s


def _variations(signs: Iterable[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign_at_rational(cs: Sequence[int], x: Fraction) -> int:
    """Sign of p(x) for rational x, all-integer Horner."""
    if not cs:
        return 0
    num, den = x.numerator, x.denominator
    acc = cs[-1]
    dpow = 1
    for c in reversed(cs[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def _sign_at_golden_scaled(cs: Sequence[int], c: int, d: int, e: int) -> int:
    """Sign of p((c + d*sqrt5)/e) with e > 0, all-integer Horner on pairs."""
    if not cs:
        return 0
    A, B = cs[-1], 0
    epow = 1
    for coeff in reversed(cs[:-1]):
        epow *= e
        A, B = A * c + 5 * B * d, A * d + B * c
        A += coeff * epow
    return GoldenNumber(Fraction(A), Fraction(B)).sign() if not (A == 0 and B == 0) else 0


def _scaled_golden(x: GoldenNumber) -> tuple[int, int, int]:
    e = lcm(x.a.denominator, x.b.denominator)
    return int(x.a * e), int(x.b * e), e


def _count_below_rational(chain: list[list[int]], x: Fraction) -> int:
    """Distinct real roots of chain[0] strictly below rational x.

    Requires chain[0](x) != 0.
    """
    v_inf = _variations(_sign_at_neg_inf(q) for q in chain)
    v_x = _variations(_sign_at_rational(q, x) for q in chain)
    return v_inf - v_x


def _count_in_open_interval(chain: list[list[int]], lo: Fraction, hi: Fraction) -> int:
    v_lo = _variations(_sign_at_rational(q, lo) for q in chain)
    v_hi = _variations(_sign_at_rational(q, hi) for q in chain)
    return v_lo - v_hi


def _nonroot_point(polys: list[Sequence[int]], lo: Fraction, hi: Fraction) -> Fraction:
    """A rational strictly inside (lo, hi) that is a root of none of polys."""
    k = 2
    while True:
        for j in range(1, k):
            cand = lo + (hi - lo) * Fraction(j, k)
            if all(_sign_at_rational(p, cand) != 0 for p in polys):
                return cand
        k += 1
        if k > 4096:  # polys have finitely many roots; unreachable in practice
            raise AlgebraError("could not find a non-root sample point")


def deflate(p: IntPolynomial, t: Threshold) -> tuple[IntPolynomial, int]:
    """Write p = min_poly(t)^k * q with q not divisible; returns (q, k)."""
    if p.is_zero():
        raise AlgebraError("cannot deflate the zero polynomial")
    k = 0
    current = p
    while True:
        q = current.try_div(t.min_poly)
        if q is None:
            return current, k
        current = q
        k += 1


def count_roots_below(p: IntPolynomial, t: Threshold) -> int:
    """Number of distinct real roots of p strictly less than the cutoff.

    Deflates the cutoff's minimal polynomial out of p first; since every
    cutoff is the smallest root of its minimal polynomial, deflation never
    removes roots strictly below it.
    """
    if p.is_zero():
        raise AlgebraError("cannot count roots of the zero polynomial")
    pd, _ = deflate(p, t)
    sf = squarefree_part(pd)
    if sf.degree <= 0:
        return 0
    chain = _sturm_chain(list(sf.coeffs))
    if t.value is not None:
        c, d, e = _scaled_golden(t.value)
        v_inf = _variations(_sign_at_neg_inf(q) for q in chain)
        v_t = _variations(_sign_at_golden_scaled(q, c, d, e) for q in chain)
        return v_inf - v_t
    lo, hi = _refine_to_gap(sf, chain, t)
    return _count_below_rational(chain, lo)


def _refine_to_gap(sf: IntPolynomial, chain: list[list[int]],
                   t: Threshold) -> tuple[Fraction, Fraction]:
    """Shrink the cutoff's isolating interval until sf has no root in it.

    Deflation removed full copies of the minimal polynomial from sf, so sf
    can only still vanish at the cutoff if the minimal polynomial is
    reducible and a proper factor survived; that is detected exactly via a
    gcd certificate and rejected, making the bisection terminate.
    """
    lo, hi = t.interval
    mp = t.min_poly.coeffs
    sfc = sf.coeffs
    common = poly_gcd(sf, t.min_poly)
    if common.degree >= 1 and _count_in_open_interval(
            _sturm_chain(list(common.coeffs)), lo, hi) >= 1:
        raise AlgebraError(
            "threshold minimal polynomial must be irreducible for interval "
            "counting (a proper factor shares the cutoff root)")
    while True:
        if (_sign_at_rational(sfc, lo) != 0 and _sign_at_rational(sfc, hi) != 0
                and _count_in_open_interval(chain, lo, hi) == 0):
            return lo, hi
        mid = _nonroot_point([mp, sfc], lo, hi)
        if _sign_at_rational(mp, lo) != _sign_at_rational(mp, mid):
            lo, hi = lo, mid
        else:
            lo, hi = mid, hi


def threshold_is_root(p: IntPolynomial, t: Threshold) -> bool:
    """Exact test: is the cutoff value a root of p?"""
    _, k = deflate(p, t)
    return k >= 1


def count_roots_in_interval(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in the open interval (lo, hi); endpoints
    must not be roots."""
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return 0
    if _sign_at_rational(sf.coeffs, lo) == 0 or _sign_at_rational(sf.coeffs, hi) == 0:
        raise AlgebraError("interval endpoints must not be roots")
    return _count_in_open_interval(_sturm_chain(list(sf.coeffs)), lo, hi)


def lambda_min_at_least(matrix, t: Threshold) -> bool:
    """Exact test: smallest eigenvalue of a symmetric matrix >= cutoff."""
    if not is_symmetric(matrix):
        raise AlgebraError("matrix must be symmetric")
    return count_roots_below(char_poly(matrix), t) == 0


def lambda_min_equals(matrix, t: Threshold) -> bool:
    """Exact test: smallest eigenvalue of a symmetric matrix == cutoff."""
    if not is_symmetric(matrix):
        raise AlgebraError("matrix must be symmetric")
    p = char_poly(matrix)
    return count_roots_below(p, t) == 0 and threshold_is_root(p, t)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: all real roots of p lie in (-bound, bound)."""
    if p.is_zero() or p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(Fraction(abs(c), lead) for c in p.coeffs[:-1])


def isolate_smallest_root(p: IntPolynomial, max_width: Fraction) -> tuple[Fraction, Fraction]:
    """Interval [lo, hi) of width <= max_width containing the smallest real
    root of p, with no root below lo."""
    sf = squarefree_part(p)
    if sf.degree < 1:
        raise AlgebraError("polynomial has no roots")
    chain = _sturm_chain(list(sf.coeffs))
    bound = root_bound(sf)
    lo, hi = -bound, bound
    if _count_below_rational(chain, hi) == 0:
        raise AlgebraError("polynomial has no real roots")
    while hi - lo > max_width:
        mid = _nonroot_point([sf.coeffs], lo, hi)
        if _count_below_rational(chain, mid) == 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def lambda_min_approx(matrix) -> float:
    """Smallest eigenvalue to within 1e-9, by exact Sturm bisection.

    Reporting helper only; decisions always go through the exact tests.
    """
    rows = as_int_rows(matrix)
    if not rows:
        raise AlgebraError("empty matrix has no eigenvalues")
    if not is_symmetric(rows):
        raise AlgebraError("matrix must be symmetric")
    p = char_poly(rows)
    lo, hi = isolate_smallest_root(p, Fraction(1, 2 * 10 ** 9))
    return float(lo + (hi - lo) / 2)


def compare_smallest_roots(pa: IntPolynomial, pb: IntPolynomial) -> int:
    """Exact three-way comparison of the smallest real roots of pa and pb.

    Interval bisection with exact Sturm counts; equality is certified by a
    shared root of gcd(pa, pb) once both isolating intervals collapse onto
    the common value.  Tolerance-free.
    """
    sa, sb = squarefree_part(pa), squarefree_part(pb)
    ca, cb = _sturm_chain(list(sa.coeffs)), _sturm_chain(list(sb.coeffs))
    ia = isolate_smallest_root(pa, root_bound(sa))
    ib = isolate_smallest_root(pb, root_bound(sb))
    h = poly_gcd(sa, sb)
    ch = _sturm_chain(list(h.coeffs)) if h.degree >= 1 else None
    while True:
        # isolating intervals are [lo, hi) with the root strictly inside
        # (lo, hi), so interval separation decides strictly
        if ia[1] <= ib[0]:
            return -1
        if ib[1] <= ia[0]:
            return 1
        if ch is not None:
            lo = min(ia[0], ib[0])
            hi = max(ia[1], ib[1])
            if (_sign_at_rational(sa.coeffs, lo) != 0 and _sign_at_rational(sa.coeffs, hi) != 0
                    and _sign_at_rational(sb.coeffs, lo) != 0 and _sign_at_rational(sb.coeffs, hi) != 0
                    and _count_in_open_interval(ca, lo, hi) == 1
                    and _count_in_open_interval(cb, lo, hi) == 1
                    and _count_in_open_interval(ch, lo, hi) >= 1):
                return 0
        ia = _halve(sa, ca, ia)
        ib = _halve(sb, cb, ib)


def _halve(sf: IntPolynomial, chain: list[list[int]],
           iv: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    mid = _nonroot_point([sf.coeffs], lo, hi)
    if _count_below_rational(chain, mid) == 0:
        return mid, hi
    return lo, mid
