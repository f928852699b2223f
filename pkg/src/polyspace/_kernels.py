"""Row-reduction kernels for bit-packed GF(2) matrices.

Two interchangeable implementations of the same full row reduction:
a numba-compiled loop (default when numba imports) and a pure-numpy
fallback. Setting the environment variable POLYSPACE_NO_NUMBA to a
non-empty value forces the fallback; `benchmarks/bench_gf2.py` times
both on identical inputs.

Both functions reduce `work` in place to reduced row-echelon form and
return the array of pivot columns. They must stay bit-identical.
"""

from __future__ import annotations

import os

import numpy as np

WORD_BITS = 64


def echelonize_numpy(work: np.ndarray, cols: int) -> np.ndarray:
    """Pure-numpy reduction; the per-pivot row clearing is vectorized."""
    nrows = work.shape[0]
    pivots = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        w, b = divmod(c, WORD_BITS)
        mask = np.uint64(1 << b)
        hits = np.nonzero(work[r:, w] & mask)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        clear = (work[:, w] & mask) != 0
        clear[r] = False
        if clear.any():
            work[clear] ^= work[r]
        pivots.append(c)
        r += 1
    return np.asarray(pivots, dtype=np.int64)


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def echelonize_numba(work, cols):  # pragma: no cover - compiled
        nrows, words = work.shape
        pivots = np.empty(min(nrows, cols), np.int64)
        one = np.uint64(1)
        r = 0
        for c in range(cols):
            if r == nrows:
                break
            w = c // WORD_BITS
            mask = one << np.uint64(c % WORD_BITS)
            p = -1
            for i in range(r, nrows):
                if work[i, w] & mask:
                    p = i
                    break
            if p < 0:
                continue
            if p != r:
                for j in range(words):
                    t = work[r, j]
                    work[r, j] = work[p, j]
                    work[p, j] = t
            for i in range(nrows):
                if i != r and (work[i, w] & mask):
                    for j in range(words):
                        work[i, j] ^= work[r, j]
            pivots[r] = c
            r += 1
        return pivots[:r]

    return echelonize_numba


def _select():
    if os.environ.get("POLYSPACE_NO_NUMBA"):
        return echelonize_numpy
    try:
        return _build_numba_kernel()
    except ImportError:
        return echelonize_numpy


echelonize = _select()
