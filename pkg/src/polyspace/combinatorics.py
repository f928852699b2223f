"""Closed-form counts attached to an odd number of edges n = 2m + 1.

All values are exact Python integers; C(20, 10) and friends overflow
fixed-width types, so nothing here ever truncates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class InvariantTable:
    """The counting invariants of one odd n = 2m + 1."""

    n: int
    m: int
    D: int
    alpha: int
    beta: int
    gamma: int
    d: int


def _check_n(n: int) -> int:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 5, got {n}")
    return (n - 1) // 2


def invariant_table(n: int) -> InvariantTable:
    """Evaluate the closed forms D, alpha, beta, gamma, d at odd n >= 5.

    d is an alternating binomial sum; the sign pattern is the integer
    sequence (0, 1, 0, -1) by residue, never a floating-point sine.
    """
    m = _check_n(n)
    D = binom(n - 1, m - 1)
    alpha = sum(2 ** (m - 1 - i) * binom(2 * i, i) for i in range(m))
    beta = D - alpha
    gamma = sum(binom(n - 1, i) for i in range(m - 1))
    d = sum((-1) ** i * binom(2 * m, m - 1 - 2 * i) for i in range((m - 1) // 2 + 1))
    return InvariantTable(n=n, m=m, D=D, alpha=alpha, beta=beta, gamma=gamma, d=d)


def alpha_series(count: int) -> list[int]:
    """First `count` coefficients of 1 / ((1 - 2x) sqrt(1 - 4x)).

    Computed as the convolution of the geometric sequence 2^k with the
    central binomial coefficients C(2k, k); coefficient i equals the
    alpha-invariant of n = 2i + 3.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    return [
        sum(2 ** (k - j) * binom(2 * j, j) for j in range(k + 1))
        for k in range(count)
    ]
