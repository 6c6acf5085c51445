"""Closed-form counts by root degree, evaluated independently of any matrix.

Each formula multiplies first and divides last, asserting exact divisibility,
so integrality failures surface instead of being rounded away.  Boundary
terms of the alternating sums hit binomials with upper index -1 and lower
index 0; those must evaluate to 1, hence the generalized binomial here.
"""
from __future__ import annotations

from .exact import binomial, exact_div


def _b(n: int, k: int) -> int:
    return binomial(n, k, generalized=True)


def kangulation_entry(k: int, r: int, j: int) -> int:
    """Number of k-angulations with r k-gons and root degree j-1:
    (j/r) C((k-1)r - j - 1, r - j)."""
    if k < 3:
        raise ValueError("k-angulations require k >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    if not 1 <= j <= r:
        return 0
    return exact_div(j * _b((k - 1) * r - j - 1, r - j), r)


def geometric_entry(n: int, j: int) -> int:
    """Number of plane graphs on n vertices with root visibility degree j-1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= j <= n - 1:
        return 0
    acc = 0
    for k in range(j, n):
        sign = -1 if (n - 1 - k) % 2 else 1
        acc += sign * _b(n - 1, k) * _b(n + k - j - 2, k - j) * 2**k
    return exact_div(j * 2 ** (n - 1 - j) * acc, n - 1)


def connected_entry(n: int, j: int) -> int:
    """Number of connected plane graphs on n vertices with root visibility
    degree j-1.

    The (-1/2)**k factor of the alternating outer sum is cleared against the
    leading 2**(n-1), keeping every intermediate value an integer.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= j <= n - 1:
        return 0
    acc = 0
    for k in range(n):
        inner = 0
        for ell in range(n - j):
            inner += (
                _b(n - 2 - k + ell, ell)
                * _b(k + n - ell - j - 2, n - ell - j - 1)
                * 2**ell
            )
        sign = -1 if k % 2 else 1
        acc += sign * _b(n - 1, k) * 2 ** (n - 1 - k) * inner
    return exact_div(j * acc, n - 1)


def partition_entry(n: int, j: int) -> int:
    """Number of non-crossing partitions of [n] with root isolation degree j-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= j <= n + 1:
        return 0
    lo = -((n + j + 1) // -2)
    acc = 0
    for k in range(lo, n + 2):
        acc += _b(n + 1, k) * _b(k - j - 1, 2 * k - n - j - 1) * 2 ** (2 * k - n - j - 1)
    return exact_div(j * acc, n + 1)


def kangulation_vector(k: int, r: int) -> tuple[int, ...]:
    return tuple(kangulation_entry(k, r, j) for j in range(1, r + 1))


def geometric_vector(n: int) -> tuple[int, ...]:
    return tuple(geometric_entry(n, j) for j in range(1, n))


def connected_vector(n: int) -> tuple[int, ...]:
    return tuple(connected_entry(n, j) for j in range(1, n))


def partition_vector(n: int) -> tuple[int, ...]:
    return tuple(partition_entry(n, j) for j in range(1, n + 2))


def lemma1_check(t: int, m: int, n: int) -> bool:
    """Verify sum_j (-1)**j C(j+m-1, j) C(m(t+1), n-j-t) == C(mt, n-t).

    Written with the multiset form C(j+m-1, j) of the first factor, which
    agrees with C(j+m-1, m-1) for every m >= 1 and keeps the m = 0 case
    meaningful (only the j = 0 term survives).
    """
    if t < 0 or m < 0 or n < 0:
        raise ValueError("arguments must be non-negative")
    lhs = 0
    for j in range(n + 1):
        sign = -1 if j % 2 else 1
        lhs += sign * _b(j + m - 1, j) * _b(m * (t + 1), n - j - t)
    return lhs == _b(m * t, n - t)
