"""Exact arithmetic substrate.

Everything here is integer-exact: polynomials in ``q`` over the integers
(QPoly), polynomials in ``x`` over that ring (XQPoly), dense square matrices
over QPoly, characteristic polynomials, determinants and Lagrange
interpolation.  Rational numbers appear only transiently (fractions.Fraction
inside the interpolation / orbit solvers); every returned coefficient is an
int, and anything that would not be integral raises instead of rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = float("-inf")


class ExactAlgError(Exception):
    """Raised when an exactness contract is violated (non-integer result,
    degree-bound failure at a verification point, singular system)."""


def binom(n: int, r: int) -> int:
    """Binomial coefficient with C(n, r) = 0 whenever r < 0 or r > n."""
    if r < 0 or r > n or n < 0:
        return 0
    return math.comb(n, r)


# ---------------------------------------------------------------------------
# Polynomials in q over Z
# ---------------------------------------------------------------------------

class QPoly:
    """Polynomial in the symbol q with integer coefficients.

    Coefficients are stored ascending by degree; the canonical form has no
    trailing zeros, so the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(d) + other.coeff(d) for d in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self.coeff(d) - other.coeff(d) for d in range(n))

    def __rsub__(self, other) -> "QPoly":
        return _as_qpoly(other) - self

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __mul__(self, other) -> "QPoly":
        other = _as_qpoly(other)
        if not self or not other:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, q0: int) -> int:
        """Evaluate at an integer, exactly (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def __str__(self) -> str:
        return format_qpoly(self)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


Q = QPoly((0, 1))
QZERO = QPoly()
QONE = QPoly((1,))


def _as_qpoly(v) -> QPoly:
    if isinstance(v, QPoly):
        return v
    if isinstance(v, int):
        return QPoly.const(v)
    raise TypeError(f"cannot coerce {v!r} to QPoly")


def format_qpoly(p: QPoly, var: str = "q") -> str:
    """Descending powers with explicit signs, e.g. ``-62q+404``."""
    if not p:
        return "0"
    parts = []
    for d in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeff(d)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if d == 0:
            term = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            term = f"{head}{var}" if d == 1 else f"{head}{var}^{d}"
        parts.append(sign + term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Polynomials in x over Z[q]
# ---------------------------------------------------------------------------

class XQPoly:
    """Polynomial in x whose coefficients are QPoly values (Z[q][x])."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_qpoly(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, d: int) -> QPoly:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else QZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, XQPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "XQPoly") -> "XQPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XQPoly(self.coeff(d) + other.coeff(d) for d in range(n))

    def __sub__(self, other: "XQPoly") -> "XQPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XQPoly(self.coeff(d) - other.coeff(d) for d in range(n))

    def __neg__(self) -> "XQPoly":
        return XQPoly(-c for c in self.coeffs)

    def __mul__(self, other: "XQPoly") -> "XQPoly":
        if not self or not other:
            return XQPoly()
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XQPoly(out)

    def eval_x(self, x0: int) -> QPoly:
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def eval_q(self, q0: int) -> list:
        """Integer coefficient list (ascending in x) at a fixed q."""
        return [c(q0) for c in self.coeffs]

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeff(d)
            if not c:
                continue
            cs = format_qpoly(c)
            if d > 0:
                if sum(1 for t in c.coeffs if t) > 1:
                    cs = f"({cs})"
                elif cs == "1":
                    cs = ""
                elif cs == "-1":
                    cs = "-"
                cs += "x" if d == 1 else f"x^{d}"
            sep = "" if not parts or cs.startswith("-") else "+"
            parts.append(sep + cs)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"XQPoly({[list(c.coeffs) for c in self.coeffs]!r})"


X = XQPoly((QZERO, QONE))
XONE = XQPoly((QONE,))


def xqpoly_from_int_coeffs(coeffs: Sequence[int]) -> XQPoly:
    return XQPoly(QPoly.const(c) for c in coeffs)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass
class PolyMatrix:
    """Dense square matrix over Z[q]."""

    entries: list

    def __post_init__(self):
        n = len(self.entries)
        if n < 1 or any(len(r) != n for r in self.entries):
            raise ValueError("matrix must be square with dimension >= 1")
        self.entries = [[_as_qpoly(e) for e in row] for row in self.entries]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def eval_q(self, q0: int) -> list:
        return [[e(q0) for e in row] for row in self.entries]

    def q_dependent_rows(self) -> list:
        return [i for i, row in enumerate(self.entries)
                if any(e.degree >= 1 for e in row)]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries


def charpoly_int(m: Sequence[Sequence[int]]) -> list:
    """det(xI - m) for an integer matrix, as an ascending coefficient list.

    Faddeev-LeVerrier iteration: every division (by 1..n) is exact over Z,
    so all intermediates stay integers.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # identity
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                mk[i][i] += c[n - k + 1]
        mk = _matmul_int(m, mk)
        tr = sum(mk[i][i] for i in range(n))
        if tr % k != 0:
            raise ExactAlgError("non-exact division in characteristic polynomial")
        c[n - k] = -tr // k
    return c


def _matmul_int(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Interpolation and evaluate-interpolate characteristic polynomials
# ---------------------------------------------------------------------------

def lagrange_interpolate(points: Sequence, deg_bound: int) -> QPoly:
    """Unique integer polynomial of degree <= deg_bound through the points.

    Fits on the first deg_bound+1 points with exact rationals, then checks
    the remaining points and the integrality of every coefficient; either
    failure signals a wrong degree bound and raises ExactAlgError.
    """
    if deg_bound < 0:
        raise ValueError("deg_bound must be >= 0")
    if len(points) < deg_bound + 1:
        raise ValueError("need at least deg_bound+1 points")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    fit = points[: deg_bound + 1]
    # Newton divided differences over Fraction.
    n = len(fit)
    dd = [Fraction(y) for _, y in fit]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (fit[i][0] - fit[i - level][0])
    # Expand the Newton form into monomial coefficients.
    coeffs = [Fraction(0)] * n
    acc = [Fraction(1)]  # product (x - x_0)...(x - x_{i-1})
    for i in range(n):
        for d, c in enumerate(acc):
            coeffs[d] += dd[i] * c
        if i < n - 1:
            x_i = fit[i][0]
            acc = [Fraction(0)] + acc
            for d in range(len(acc) - 1):
                acc[d] -= x_i * acc[d + 1]
    if any(c.denominator != 1 for c in coeffs):
        raise ExactAlgError(f"non-integer interpolation result: {coeffs}")
    poly = QPoly(int(c) for c in coeffs)
    for x0, y0 in points[deg_bound + 1:]:
        if poly(x0) != y0:
            raise ExactAlgError(
                f"degree bound {deg_bound} fails at verification point "
                f"({x0}, {y0}): polynomial gives {poly(x0)}")
    return poly


def _eval_interp_q(m: PolyMatrix, kernel) -> list:
    """Run an integer kernel at enough q-points and interpolate each output
    coefficient back into Z[q].

    The determinant is multilinear in the rows, so its q-degree is bounded by
    the number of q-dependent rows; one extra point verifies the bound.
    """
    bad = [e for row in m.entries for e in row if e.degree not in (NEG_INF, 0, 1)]
    if bad:
        raise ValueError("matrix entries must have degree <= 1 in q")
    deg_bound = len(m.q_dependent_rows())
    q_points = list(range(5, 5 + deg_bound + 2))
    samples = [kernel(m.eval_q(q0)) for q0 in q_points]
    width = max(len(s) for s in samples) if isinstance(samples[0], list) else 1
    if isinstance(samples[0], int):
        samples = [[s] for s in samples]
    out = []
    for d in range(width):
        pts = [(q0, s[d] if d < len(s) else 0) for q0, s in zip(q_points, samples)]
        out.append(lagrange_interpolate(pts, deg_bound))
    return out


def charpoly_q(m: PolyMatrix) -> XQPoly:
    """det(xI - m) as an exact element of Z[q][x], by evaluating q at
    integer points, running charpoly_int, and interpolating per x-coefficient."""
    return XQPoly(_eval_interp_q(m, charpoly_int))


def det_q(m: PolyMatrix) -> QPoly:
    """Exact determinant over Z[q] via the same evaluate-interpolate scheme."""
    return _eval_interp_q(m, det_int)[0]


def matrix_from_orbit(vectors: Sequence[Sequence]) -> list:
    """Recover the unique matrix M with g_{t+1} = M g_t from nu+1 orbit
    vectors g_0..g_nu (the first nu must be linearly independent).

    Solves M G = G* by exact rational elimination; entries come back as
    Fractions (integers when the system is integral).
    """
    if len(vectors) < 2:
        raise ValueError("need at least two orbit vectors")
    nu = len(vectors[0])
    if len(vectors) != nu + 1 or any(len(v) != nu for v in vectors):
        raise ValueError(f"expected {nu + 1} vectors of length {nu}")
    g = [[Fraction(vectors[t][i]) for t in range(nu)] for i in range(nu)]
    gstar = [[Fraction(vectors[t + 1][i]) for t in range(nu)] for i in range(nu)]
    # Row-reduce [G^T | (G*)^T] so that M^T = solution of G^T M^T = (G*)^T.
    a = [[g[i][r] for i in range(nu)] + [gstar[i][r] for i in range(nu)]
         for r in range(nu)]
    for col in range(nu):
        piv = next((r for r in range(col, nu) if a[r][col] != 0), None)
        if piv is None:
            raise ExactAlgError("initial vectors not independent")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(nu):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [[a[c][nu + r] for c in range(nu)] for r in range(nu)]
