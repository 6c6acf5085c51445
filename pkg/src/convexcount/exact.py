"""Exact integer arithmetic core: binomials, dense integer polynomials,
upper Hessenberg-Toeplitz matrices and count vectors.

Everything here is immutable and computes with plain Python integers, so
there is no overflow and no rounding anywhere in the counting pipeline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


def binomial(n: int, k: int, *, generalized: bool = False) -> int:
    """Binomial coefficient C(n, k) with the out-of-range-is-zero convention.

    For ``k < 0`` the result is 0, and for ``k > n >= 0`` it is 0.  A
    negative upper index returns 0 unless ``generalized`` is set, in which
    case the falling-factorial value n(n-1)...(n-k+1)/k! is returned
    (so C(-1, 0) = 1, C(-1, 1) = -1, ...).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    if not generalized:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def exact_div(num: int, den: int) -> int:
    """Divide asserting exactness; counting formulas never truncate."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are stored low-to-high; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, t: int) -> int:
        """Coefficient of x**t (0 outside the stored range)."""
        if 0 <= t < len(self.coeffs):
            return self.coeffs[t]
        return 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, mpf or mpc ``x``."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for t in range(self.degree, -1, -1):
            c = self.coeffs[t]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if t == 0:
                body = str(mag)
            else:
                var = "x" if t == 1 else f"x^{t}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


#: The indeterminate, handy for building polynomials in code and tests.
LAMBDA = IntPolynomial((0, 1))


@dataclass(frozen=True)
class HTMatrix:
    """Upper Hessenberg matrix with Toeplitz band, optional first-row override.

    ``sub`` is the constant subdiagonal value and ``band[m]`` the constant
    value on diagonal offset m >= 0.  When ``row0`` is given it replaces the
    first row (needed for transfer matrices whose row 0 is not the shifted
    band); every other entry still comes from the band.
    """

    size: int
    sub: int
    band: tuple[int, ...]
    row0: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("matrix size must be >= 1")
        if len(self.band) != self.size:
            raise ValueError("band must provide offsets 0..size-1")
        if self.row0 is not None and len(self.row0) != self.size:
            raise ValueError("row0 override must have length size")

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError("matrix index out of range")
        if j < i - 1:
            return 0
        if j == i - 1:
            return self.sub
        if i == 0 and self.row0 is not None:
            return self.row0[j]
        return self.band[j - i]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for j in range(self.size))

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.size)]

    def is_toeplitz(self) -> bool:
        """True when the first row agrees with the Toeplitz band."""
        return self.row0 is None or all(
            self.row0[j] == self.band[j] for j in range(self.size)
        )


@dataclass(frozen=True)
class CountVector:
    """Exact graph counts partitioned by root degree.

    ``entries[j-1]`` (1-based index j) counts objects whose root vertex has
    degree j-1; ``level`` is the number of vertices (or of faces, for the
    face-parameterized classes).
    """

    entries: tuple[int, ...]
    level: int

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise ValueError("count vector entries must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def padded(self, size: int) -> CountVector:
        if size < len(self.entries):
            if any(self.entries[size:]):
                raise ValueError("cannot truncate nonzero entries")
            return CountVector(self.entries[:size], self.level)
        pad = (0,) * (size - len(self.entries))
        return CountVector(self.entries + pad, self.level)


def mat_vec(m: HTMatrix, v: CountVector) -> CountVector:
    """One production step: exact product m @ v, level incremented."""
    if len(v.entries) != m.size:
        raise ValueError(
            f"dimension mismatch: matrix size {m.size}, vector length {len(v.entries)}"
        )
    out = []
    for i in range(m.size):
        lo = max(0, i - 1)
        out.append(sum(m.entry(i, j) * v.entries[j] for j in range(lo, m.size)))
    return CountVector(tuple(out), v.level + 1)


@lru_cache(maxsize=None)
def _det_poly(rows: tuple[tuple[IntPolynomial, ...], ...], colmask: int) -> IntPolynomial:
    # Laplace expansion along the first remaining row, memoized on the
    # remaining column set.  Deliberately ignores the Hessenberg structure
    # so it stays an independent check of the banded recurrence.
    n = len(rows)
    row_index = n - colmask.bit_count()
    if row_index == n:
        return IntPolynomial.one()
    acc = IntPolynomial.zero()
    sign = 1
    for j in range(n):
        if not (colmask >> j) & 1:
            continue
        e = rows[row_index][j]
        if not e.is_zero():
            term = e * _det_poly(rows, colmask & ~(1 << j))
            acc = acc + (term if sign > 0 else -term)
        sign = -sign
    return acc


def charpoly_determinant(m: HTMatrix) -> IntPolynomial:
    """det(m - x*I) by exact cofactor expansion over integer polynomials.

    Exponential in the matrix size; intended as an oracle for sizes up to
    about 12.
    """
    n = m.size
    rows = tuple(
        tuple(
            IntPolynomial((m.entry(i, j), -1)) if i == j
            else IntPolynomial.constant(m.entry(i, j))
            for j in range(n)
        )
        for i in range(n)
    )
    result = _det_poly(rows, (1 << n) - 1)
    _det_poly.cache_clear()
    return result
