"""Exact integer matrices, Smith normal form, and the classification of
integral involutions by the elementary divisors of I - P.

Entries are Python integers, so nothing overflows; pivoting always picks
the smallest nonzero absolute value, which keeps coefficient growth mild
for the small matrices handled here.
"""

from __future__ import annotations

import random
from math import gcd
from typing import NamedTuple, Sequence


class NotInvolution(ValueError):
    """The matrix does not square to the identity."""


class UnexpectedDivisor(ArithmeticError):
    """I - P produced an elementary divisor outside {0, 1, 2}; impossible
    for a true involution, so this signals an arithmetic bug."""


class IntMatrix:
    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = [list(map(int, row)) for row in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.entries = rows

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries!r})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        ot = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                for row in self.entries
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )


class InvolutionClass(NamedTuple):
    """Multiplicities of the three blocks in the involution normal form:
    x swap blocks, y entries +1, z entries -1."""

    x: int
    y: int
    z: int


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant needs a square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [row[:] for row in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _min_pivot(a, t, rows, cols):
    best = None
    pos = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = a[i][j]
            if v and (best is None or abs(v) < best):
                best = abs(v)
                pos = (i, j)
    return pos


def smith_normal_form(M: IntMatrix) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... padded with zeros to
    min(rows, cols); invariant under row/column permutations of M."""
    a = [row[:] for row in M.entries]
    rows, cols = M.rows, M.cols
    k = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < k:
        pos = _min_pivot(a, t, rows, cols)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            if i0 != t:
                a[i0], a[t] = a[t], a[i0]
            if j0 != t:
                for row in a:
                    row[j0], row[t] = row[t], row[j0]
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                viol = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % p:
                            viol = i
                            break
                    if viol is not None:
                        break
                if viol is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[viol])]
            pos = _min_pivot(a, t, rows, cols)
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (k - len(diag)))
    # Divisibility repair: replace out-of-order pairs by (gcd, lcm).
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            g = gcd(x, y)
            l = x * y // g if g else 0
            if (x, y) != (g, l):
                diag[i], diag[i + 1] = g, l
                changed = True
    return diag


def build_F(x: int, y: int, z: int) -> IntMatrix:
    """Block-diagonal involution normal form: x swap blocks, then y
    entries +1, then z entries -1."""
    if min(x, y, z) < 0:
        raise ValueError("block counts must be nonnegative")
    n = 2 * x + y + z
    out = IntMatrix.zeros(n, n)
    for b in range(x):
        out.entries[2 * b][2 * b + 1] = 1
        out.entries[2 * b + 1][2 * b] = 1
    for i in range(y):
        out.entries[2 * x + i][2 * x + i] = 1
    for i in range(z):
        out.entries[2 * x + y + i][2 * x + y + i] = -1
    return out


def classify_involution(P: IntMatrix) -> InvolutionClass:
    """Complete integral-similarity invariant (x, y, z) of an involution,
    read off the elementary divisors of I - P: their multiplicities of
    1, 0 and 2 are x, x + y and z."""
    if P.rows != P.cols:
        raise NotInvolution("matrix is not square")
    size = P.rows
    if P @ P != IntMatrix.identity(size):
        raise NotInvolution("matrix squared is not the identity")
    divisors = smith_normal_form(IntMatrix.identity(size) - P)
    counts = {0: 0, 1: 0, 2: 0}
    for d in divisors:
        if d not in counts:
            raise UnexpectedDivisor(f"elementary divisor {d} outside {{0,1,2}}")
        counts[d] += 1
    x = counts[1]
    z = counts[2]
    y = counts[0] - counts[1]
    if y < 0 or 2 * x + y + z != size:
        raise UnexpectedDivisor("divisor counts inconsistent with an involution")
    return InvolutionClass(x, y, z)


def random_unimodular_pair(size: int, seed: int) -> tuple[IntMatrix, IntMatrix]:
    """Deterministic unimodular matrix and its exact inverse.

    Built as a bounded product of shears (coefficients in [-2, 2]),
    swaps and sign flips, so entries stay modest.
    """
    if size < 1:
        raise ValueError("size must be positive")
    rng = random.Random(seed)
    s = IntMatrix.identity(size)
    sinv = IntMatrix.identity(size)
    for _ in range(3 * size + 4):
        kind = rng.choice(("shear", "shear", "swap", "negate"))
        if kind == "shear" and size >= 2:
            i, j = rng.sample(range(size), 2)
            c = rng.choice((-2, -1, 1, 2))
            # row_i += c * row_j on S; the inverse acts on columns of Sinv.
            s.entries[i] = [x + c * y for x, y in zip(s.entries[i], s.entries[j])]
            for row in sinv.entries:
                row[j] -= c * row[i]
        elif kind == "swap" and size >= 2:
            i, j = rng.sample(range(size), 2)
            s.entries[i], s.entries[j] = s.entries[j], s.entries[i]
            for row in sinv.entries:
                row[i], row[j] = row[j], row[i]
        else:
            i = rng.randrange(size)
            s.entries[i] = [-x for x in s.entries[i]]
            for row in sinv.entries:
                row[i] = -row[i]
    return s, sinv


def random_unimodular(size: int, seed: int) -> IntMatrix:
    """Deterministic-in-seed matrix with determinant +1 or -1."""
    return random_unimodular_pair(size, seed)[0]
