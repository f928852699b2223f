"""Benchmark the two GF(2) elimination kernels on identical inputs.

Times the numba-compiled kernel against the pure-numpy fallback on
random packed matrices and on a real subset boundary matrix, which is
the shape that dominates the toolkit's runtime.

Run:  python3 benchmarks/bench_gf2.py
"""

import random
import time

import numpy as np

from polyspace import _kernels
from polyspace.gf2 import Gf2Matrix
from polyspace.subset_complex import boundary_matrix


def random_packed(seed, rows, cols, density=0.5):
    rng = random.Random(seed)
    dense = np.zeros((rows, cols), np.uint8)
    for i in range(rows):
        for j in range(cols):
            dense[i, j] = 1 if rng.random() < density else 0
    return Gf2Matrix.from_dense(dense)


def time_kernel(kernel, matrix, repeats=3):
    best = None
    rank = None
    for _ in range(repeats):
        work = matrix.data.copy()
        start = time.perf_counter()
        pivots = kernel(work, matrix.cols)
        elapsed = time.perf_counter() - start
        rank = len(pivots)
        best = elapsed if best is None else min(best, elapsed)
    return rank, best


def main():
    try:
        numba_kernel = _kernels._build_numba_kernel()
    except ImportError:
        print("numba not available; nothing to compare")
        return

    cases = [
        ("random 512x512", random_packed(1, 512, 512)),
        ("random 2000x1024 sparse", random_packed(2, 2000, 1024, 0.05)),
        ("boundary v=14 k=8 (3003x3003)", boundary_matrix(14, 8)),
        ("boundary v=16 k=9 (11440x11440)", boundary_matrix(16, 9)),
    ]

    # warm up compilation outside the timings
    warm = random_packed(0, 8, 8)
    numba_kernel(warm.data.copy(), warm.cols)

    print(f"{'case':<32} {'rank':>6} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, matrix in cases:
        rank_nb, t_nb = time_kernel(numba_kernel, matrix)
        rank_np, t_np = time_kernel(_kernels.echelonize_numpy, matrix)
        assert rank_nb == rank_np, (name, rank_nb, rank_np)
        print(
            f"{name:<32} {rank_nb:>6} {t_nb * 1000:>8.1f}ms {t_np * 1000:>8.1f}ms "
            f"{t_np / t_nb:>7.2f}x"
        )


if __name__ == "__main__":
    main()
