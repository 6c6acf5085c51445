"""Characteristic polynomials and eigenpairs of the production matrices.

The banded recurrence and the closed forms are evaluated exactly; real
eigenvalues are then located by Sturm isolation plus sign bisection on the
exact polynomial, never by floating-point matrix solvers.  High-precision
values use mpmath at CONVEX_COUNT_PRECISION bits (default 256).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from mpmath import mp

from .exact import HTMatrix, IntPolynomial, binomial

DEFAULT_PRECISION_BITS = 256


def precision_bits() -> int:
    """Working precision in bits, from CONVEX_COUNT_PRECISION."""
    raw = os.environ.get("CONVEX_COUNT_PRECISION", "")
    try:
        bits = int(raw) if raw else DEFAULT_PRECISION_BITS
    except ValueError:
        raise ValueError(f"CONVEX_COUNT_PRECISION must be an integer, got {raw!r}")
    if bits < 53:
        raise ValueError("precision must be at least 53 bits")
    return bits


@dataclass(frozen=True)
class CharPolySequence:
    """Characteristic polynomials of the leading principal truncations,
    index i holding the degree-i polynomial (index 0 is the constant 1)."""

    label: str
    polys: tuple[IntPolynomial, ...]

    def __getitem__(self, i: int) -> IntPolynomial:
        return self.polys[i]

    def __len__(self) -> int:
        return len(self.polys)


def charpoly_recurrence(m: HTMatrix, n: int | None = None, label: str = "") -> CharPolySequence:
    """Characteristic polynomials d_0..d_n of a Hessenberg-Toeplitz matrix by
    the banded recurrence

        d_s = (a_0 - x) d_{s-1} + sum_{i=2..s} (-1)**(i+1) a_{i-1} a_sub**(i-1) d_{s-i}.
    """
    if n is None:
        n = m.size
    if n > m.size:
        raise ValueError("recurrence needs band values up to offset n-1")
    if not m.is_toeplitz():
        raise ValueError("recurrence requires a pure Toeplitz band")
    head = IntPolynomial((m.band[0], -1)) if n >= 1 else None
    polys = [IntPolynomial.one()]
    for s in range(1, n + 1):
        acc = head * polys[s - 1]
        sub_pow = m.sub
        for i in range(2, s + 1):
            term = m.band[i - 1] * sub_pow
            if i % 2 == 0:
                term = -term
            acc = acc + term * polys[s - i]
            sub_pow *= m.sub
        polys.append(acc)
    return CharPolySequence(label, tuple(polys))


def charpoly_closed_kangulation(k: int, r: int) -> IntPolynomial:
    """Closed form for the k-angulation matrix:
    sum_l (-1)**l C((k-2)(l+1), r-l) x**l."""
    if k < 3:
        raise ValueError("k-angulations require k >= 3")
    if r < 0:
        raise ValueError("r must be >= 0")
    coeffs = []
    for ell in range(r + 1):
        c = binomial((k - 2) * (ell + 1), r - ell)
        coeffs.append(-c if ell % 2 else c)
    return IntPolynomial(coeffs)


def charpoly_closed_geometric(n: int) -> IntPolynomial:
    """Closed form for the plane-graph matrix:
    sum_t sum_{k=t..n} (-1)**k C(k,t) C(t+1,n-k) 2**(2n-t-k) x**t."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for t in range(n + 1):
        c = 0
        for k in range(t, n + 1):
            term = binomial(k, t) * binomial(t + 1, n - k) * 2 ** (2 * n - t - k)
            c += -term if k % 2 else term
        coeffs.append(c)
    return IntPolynomial(coeffs)


def charpoly_closed_connected(n: int) -> IntPolynomial:
    """Closed form for the connected-graph matrix.

    Powers of 3 can carry a negative exponent next to a vanishing binomial
    bracket; terms are evaluated in exact rationals and the final
    coefficients asserted integral.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for t in range(n + 1):
        c = Fraction(0)
        for ell in range(t + 1):
            bracket = 2 * binomial(ell, n + 2 * ell - 3 * t - 2) + 9 * binomial(
                ell + 1, n + 2 * ell - 3 * t
            )
            if bracket == 0:
                continue
            c += (
                binomial(t, ell)
                * 2 ** (t - ell)
                * Fraction(3) ** (n + 2 * ell - 3 * t - 2)
                * bracket
            )
        if t % 2:
            c = -c
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {c} at degree {t}")
        coeffs.append(c.numerator)
    return IntPolynomial(coeffs)


def charpoly_closed_partition(n: int) -> IntPolynomial:
    """Closed form for the non-crossing partition matrix (triple sum with
    powers of 2, rational-exact like the connected case)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for t in range(n + 1):
        c = Fraction(0)
        for k in range(t, n + 1):
            ckt = binomial(k, t)
            if ckt == 0:
                continue
            for ell in range(min(t, k) + 1):
                bracket = 4 * binomial(k - t, 2 * k - n - ell + 1) + binomial(
                    k - t, 2 * k - n - ell
                )
                if bracket == 0:
                    continue
                term = (
                    ckt
                    * binomial(t, ell)
                    * Fraction(2) ** (2 * k - n + t - 2 * ell)
                    * bracket
                )
                c += -term if k % 2 else term
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {c} at degree {t}")
        coeffs.append(c.numerator)
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Exact real-root location (Sturm isolation + sign bisection).

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(rem) - len(b), -1, -1):
        coef = rem[i + len(b) - 1] / b[-1]
        if coef == 0:
            continue
        quo[i] = coef
        for j, bj in enumerate(b):
            rem[i + j] -= coef * bj
    return _trim(quo), _trim(rem)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _squarefree(p: list[Fraction]) -> list[Fraction]:
    dp = _trim([i * c for i, c in enumerate(p)][1:] if len(p) > 1 else [])
    if not dp:
        return list(p)
    g = _poly_gcd(p, dp)
    if len(g) <= 1:
        return list(p)
    q, _ = _poly_divmod(p, g)
    return q


def _sturm_chain(q: list[Fraction]) -> list[list[Fraction]]:
    chain = [list(q), _trim([i * c for i, c in enumerate(q)][1:])]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(q: Sequence[Fraction]) -> Fraction:
    lead = abs(q[-1])
    biggest = max(abs(c) for c in q[:-1]) if len(q) > 1 else Fraction(0)
    return 2 + biggest / lead


def _deflate(q: list[Fraction], r: Fraction) -> list[Fraction]:
    # synthetic division by (x - r); remainder is zero by construction
    out = [Fraction(0)] * (len(q) - 1)
    carry = Fraction(0)
    for i in range(len(q) - 1, 0, -1):
        carry = q[i] + carry * r
        out[i - 1] = carry
    return _trim(out)


def real_roots(p: IntPolynomial, tol: Fraction | float = Fraction(1, 10**40)) -> list[Fraction]:
    """All distinct real roots of an integer polynomial, each within ``tol``
    of the true root.  Rational roots hit head-on by the bisection grid
    (including all roots of linear factors) come back exactly.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every number as a root")
    tol = Fraction(tol) if not isinstance(tol, Fraction) else tol
    if tol <= 0:
        raise ValueError("tol must be positive")
    q = _squarefree([Fraction(c) for c in p.coeffs])
    exact: list[Fraction] = []
    isolated: list[tuple[Fraction, Fraction]] = []
    while len(q) > 1:
        if len(q) == 2:
            exact.append(-q[0] / q[1])
            q = []
            isolated = []
            break
        chain = _sturm_chain(q)
        bound = _root_bound(q)
        stack = [(-bound, bound)]
        isolated = []
        deflated = False
        while stack:
            a, b = stack.pop()
            count = _variations(chain, a) - _variations(chain, b)
            if count == 0:
                continue
            if count == 1:
                isolated.append((a, b))
                continue
            mid = (a + b) / 2
            if _eval(q, mid) == 0:
                exact.append(mid)
                q = _deflate(q, mid)
                deflated = True
                break
            stack.append((a, mid))
            stack.append((mid, b))
        if not deflated:
            break
    else:
        isolated = []
    roots = list(exact)
    for a, b in isolated:
        fa = _eval(q, a)
        while b - a > tol:
            mid = (a + b) / 2
            fm = _eval(q, mid)
            if fm == 0:
                a = b = mid
                break
            if (fa > 0) == (fm > 0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append((a + b) / 2)
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# Eigenpairs.

@dataclass(frozen=True)
class EigenPair:
    """Candidate eigenpair with its relative residual max|Ax - lx| / max|x|.
    The vector is ordered (x_{n-1}, ..., x_0), matching the matrix rows."""

    lam: object
    vector: tuple
    residual: object


def _to_mp(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpmathify(x)


def eigenvector_from_charpoly(m: HTMatrix, lam) -> EigenPair:
    """Eigenvector candidate x_i = (-1/a_sub)**i d_i(lam) with x_0 = 1.

    ``lam`` should approximate a root of the size-n characteristic
    polynomial; the returned residual tells how good the pair is, so a
    non-eigenvalue simply comes back with a large residual.
    """
    if m.sub == 0:
        raise ValueError("eigenvector formula requires a nonzero subdiagonal")
    n = m.size
    seq = charpoly_recurrence(m, n - 1)
    with mp.workprec(precision_bits()):
        lam_mp = _to_mp(lam)
        factor = mp.mpf(-1) / m.sub
        xs = [seq.polys[i](lam_mp) * factor**i for i in range(n)]
        vector = tuple(reversed(xs))  # (x_{n-1}, ..., x_0)
        resid = mp.mpf(0)
        for i in range(n):
            row_val = sum(m.entry(i, j) * vector[j] for j in range(max(0, i - 1), n))
            resid = max(resid, abs(row_val - lam_mp * vector[i]))
        scale = max(abs(x) for x in vector)
        residual = resid / scale if scale != 0 else resid
        return EigenPair(lam_mp, vector, residual)


def matrix_charpoly(m: HTMatrix) -> IntPolynomial:
    """Full-size characteristic polynomial, via the recurrence when the band
    is Toeplitz and by the determinant oracle otherwise."""
    from .exact import charpoly_determinant

    if m.is_toeplitz():
        return charpoly_recurrence(m).polys[m.size]
    if m.size > 12:
        raise ValueError("determinant fallback capped at size 12")
    return charpoly_determinant(m)


def dominant_eigenvalue(m: HTMatrix, tol: float | Fraction = 1e-30):
    """Largest-modulus real root of the exact characteristic polynomial,
    located to within ``tol`` (ties broken toward the positive root)."""
    p = matrix_charpoly(m)
    roots = real_roots(p, Fraction(tol))
    if not roots:
        raise ValueError("no real eigenvalue found")
    best = max(roots, key=lambda r: (abs(r), r))
    with mp.workprec(precision_bits()):
        return _to_mp(best)
