"""Dense exact linear algebra over GF(2) with rows packed into 64-bit words.

Column j lives at bit j % 64 of word j // 64 of its row; trailing bits
beyond `cols` are always zero. Matrices are treated as immutable once
built: rank and kernel computations work on private copies, so values
can be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._kernels import WORD_BITS, echelonize


def _nwords(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


class Gf2Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        if data.shape != (rows, _nwords(cols)) or data.dtype != np.uint64:
            raise ValueError("packed data has wrong shape or dtype")
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, np.zeros((rows, _nwords(cols)), np.uint64))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i, i // WORD_BITS] = np.uint64(1 << (i % WORD_BITS))
        return m

    @classmethod
    def from_dense(cls, dense) -> "Gf2Matrix":
        """Pack a 0/1 array-like, row-major."""
        arr = np.asarray(dense, dtype=np.uint8) % 2
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = arr.shape
        words = _nwords(cols)
        if rows == 0 or cols == 0:
            return cls.zeros(rows, cols)
        padded = np.zeros((rows, words * WORD_BITS), np.uint8)
        padded[:, :cols] = arr
        packed = np.packbits(padded, axis=1, bitorder="little").view(np.uint64)
        return cls(rows, cols, packed)

    @classmethod
    def from_int_rows(cls, masks: Sequence[int], cols: int) -> "Gf2Matrix":
        """Pack rows given as Python-int bitmasks (bit j = column j)."""
        words = _nwords(cols)
        data = np.zeros((len(masks), words), np.uint64)
        full = (1 << WORD_BITS) - 1
        for i, mask in enumerate(masks):
            if mask >> cols:
                raise ValueError("row mask has bits beyond cols")
            for w in range(words):
                chunk = (mask >> (w * WORD_BITS)) & full
                if chunk:
                    data[i, w] = np.uint64(chunk)
        return cls(len(masks), cols, data)

    # -- basic queries -------------------------------------------------

    def to_dense(self) -> np.ndarray:
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), np.uint8)
        bits = np.unpackbits(
            self.data.view(np.uint8), axis=1, bitorder="little"
        )
        return bits[:, : self.cols]

    def get(self, i: int, j: int) -> int:
        return int(self.data[i, j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & 1

    def copy(self) -> "Gf2Matrix":
        return Gf2Matrix(self.rows, self.cols, self.data.copy())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Gf2Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return not self.data.any()

    # -- algebra -------------------------------------------------------

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_dense(self.to_dense().T)

    def matmul(self, other: "Gf2Matrix") -> "Gf2Matrix":
        """GF(2) product; row i of the result is the XOR of the rows of
        `other` selected by the set bits of row i."""
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        out = Gf2Matrix.zeros(self.rows, other.cols)
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return out
        sel = self.to_dense().astype(bool)
        for i in range(self.rows):
            picked = other.data[sel[i]]
            if picked.shape[0]:
                out.data[i] = np.bitwise_xor.reduce(picked, axis=0)
        return out

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        work = self.data.copy()
        return len(echelonize(work, self.cols))

    def kernel_basis(self) -> list[np.ndarray]:
        """Basis of the right kernel {x : Mx = 0}, as 0/1 uint8 vectors
        of length cols. Size is cols - rank."""
        if self.cols == 0:
            return []
        if self.rows == 0:
            basis = []
            for j in range(self.cols):
                v = np.zeros(self.cols, np.uint8)
                v[j] = 1
                basis.append(v)
            return basis
        work = self.data.copy()
        pivots = echelonize(work, self.cols)
        pivot_set = set(int(p) for p in pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = np.zeros(self.cols, np.uint8)
            v[free] = 1
            fw, fb = divmod(free, WORD_BITS)
            fmask = np.uint64(1 << fb)
            for r, p in enumerate(pivots):
                if work[r, fw] & fmask:
                    v[int(p)] = 1
            basis.append(v)
        return basis


def vstack(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    if a.cols != b.cols:
        raise ValueError("column counts differ")
    return Gf2Matrix(a.rows + b.rows, a.cols, np.vstack([a.data, b.data]))


def induced_quotient_rank(images: Gf2Matrix, relations: Gf2Matrix) -> int:
    """dim of (row-span(images) + row-span(relations)) / row-span(relations)."""
    if images.cols != relations.cols:
        raise ValueError("column counts differ")
    return vstack(images, relations).rank() - relations.rank()


def matrix_from_vectors(vectors: Iterable[np.ndarray], cols: int) -> Gf2Matrix:
    """Stack 0/1 vectors of length `cols` as rows."""
    vecs = list(vectors)
    if not vecs:
        return Gf2Matrix.zeros(0, cols)
    return Gf2Matrix.from_dense(np.vstack(vecs))
