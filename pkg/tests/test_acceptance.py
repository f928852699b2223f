"""Acceptance suite: one test per criterion, each printing a pass line.

All arithmetic is exact, so every comparison is equality. Wall-clock
assertions are made only where the budget is a hard sub-second bound on
pure integer arithmetic; elimination-based criteria report their timing
but are not timed against the loose "seconds"-scale budgets.
"""

import random
import time
from itertools import combinations
from math import gcd

import pytest

from polyspace.combinatorics import alpha_series, binom, invariant_table
from polyspace.int_linalg import (
    IntMatrix,
    build_F,
    classify_involution,
    determinant,
    random_unimodular_pair,
    smith_normal_form,
)
from polyspace.invariants import (
    cup_square_rank_formula,
    gysin_check,
    involution_triple,
    series_bundle,
    uct_quotient,
    wang_divisor_counts,
)
from polyspace.ring import cohomology_dim, cup_square_rank, splitting_independence
from polyspace.subset_complex import (
    boundary_matrix,
    complex_homology,
    inclusion_rank,
    middle_kernel,
)


@pytest.fixture(scope="module", autouse=True)
def warm_kernel():
    # First elimination may pay numba compilation; keep it out of timings.
    boundary_matrix(4, 3).rank()


def report(name, elapsed):
    print(f"ACCEPTANCE {name}: PASS ({elapsed * 1000:.0f} ms)")


def test_c01_closed_form_table():
    start = time.perf_counter()
    expected = {
        5: (4, 4, 0),
        7: (15, 14, 1),
        9: (56, 48, 8),
        11: (210, 166, 44),
        # n = 13 row frozen from the series-convolution oracle run up front:
        # D = C(12, 5) = 792, alpha = coefficient 5 of the alpha series = 584.
        13: (792, 584, 208),
    }
    for n, (D, alpha, beta) in expected.items():
        t = invariant_table(n)
        assert (t.D, t.alpha, t.beta) == (D, alpha, beta)
        assert t.alpha + t.beta == t.D
        assert (t.beta != 0) == (n >= 7)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("01 closed-form table", elapsed)


def test_c02_alternating_sum_identity_and_series():
    start = time.perf_counter()
    for n in range(5, 22, 2):
        t = invariant_table(n)
        assert t.d == t.alpha, n
    series = alpha_series(9)
    assert series[0] == 1
    for i in range(1, 9):
        assert series[i] == invariant_table(2 * i + 3).alpha, i
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("02 d equals alpha + series", elapsed)


def test_c03_middle_kernel_dimension():
    start = time.perf_counter()
    for n in (5, 7, 9, 11, 13):
        dim, _ = middle_kernel(n)
        assert dim == invariant_table(n).beta, n
    report("03 middle kernel dims", time.perf_counter() - start)


def test_c04_parity_complex_vanishing():
    start = time.perf_counter()
    for m in range(2, 7):
        v = 2 * m
        top_acyclic = v if (m + 1) % 2 == 0 else v - 1
        acyclic = complex_homology(v, top_acyclic)
        assert all(d == 0 for d in acyclic.homology_dims), m
        other = complex_homology(v, v - 1 if top_acyclic == v else v)
        nonzero = [q for q, d in zip(other.degrees, other.homology_dims) if d]
        assert nonzero == [m], m
    report("04 parity-complex vanishing", time.perf_counter() - start)


def test_c05_inclusion_rank():
    start = time.perf_counter()
    for v in range(1, 13):
        for t in range(v // 2 + 1):
            for s in range(max(t, 1), v - t + 1):
                assert inclusion_rank(v, s, t) == binom(v, t), (v, s, t)
    for n in (7, 9, 11):
        m = (n - 1) // 2
        assert inclusion_rank(n - 1, m + 1, m - 1) == binom(n - 1, m - 1), n
    report("05 inclusion-matrix rank", time.perf_counter() - start)


def test_c06_ring_dimensions():
    start = time.perf_counter()
    for n in (5, 7, 9, 11):
        bundle = series_bundle(n)
        for q in range(-1, n):
            assert cohomology_dim(n, q) == bundle.ps_Z2_Mbar.coeff(q), (n, q)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    report("06 ring dimensions", elapsed)


def test_c07_cup_square_ranks():
    start = time.perf_counter()
    for n in (5, 7, 9, 11):
        t = invariant_table(n)
        m = t.m
        for q in range(n):
            assert cup_square_rank(n, q) == cup_square_rank_formula(n, q), (n, q)
        assert cup_square_rank(n, m - 2) == t.gamma - t.beta, n
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    report("07 cup-square ranks", elapsed)


def test_c08_splitting_independence():
    start = time.perf_counter()
    for n in (5, 7, 9, 11):
        dim, independent = splitting_independence(n)
        assert independent, n
        assert dim == invariant_table(n).beta, n
    report("08 splitting independence", time.perf_counter() - start)


def test_c09_series_bookkeeping():
    start = time.perf_counter()
    b = series_bundle(7)
    assert b.ps_M.coeffs == (1, 6, 30, 6, 1)
    assert b.ps_Z2_Mbar.coeffs == (1, 7, 22, 7, 1)
    assert b.ps_Z2_E.coeffs == (1, 7, 22, 22, 7, 1)
    assert b.gamma_E.coeffs == (0, 6, 1, 0, 1)
    for n in range(5, 16, 2):
        lambdas = [cup_square_rank_formula(n, q) for q in range(n)]
        assert gysin_check(n, lambdas), n
        bundle = series_bundle(n)
        assert uct_quotient(bundle) == bundle.gamma_E, n
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("09 series bookkeeping", elapsed)


def test_c10_divisor_count_table():
    start = time.perf_counter()
    parities = set()
    for n in range(5, 16, 2):
        t = invariant_table(n)
        parities.add(t.m % 2)
        assert wang_divisor_counts(n) == (t.D, t.alpha, t.beta), n
    assert parities == {0, 1}
    report("10 divisor counts", time.perf_counter() - start)


def test_c11_involution_normal_form():
    start = time.perf_counter()
    for n in range(5, 12, 2):
        t = invariant_table(n)
        triple = involution_triple(n)
        assert triple == (t.alpha, t.beta, t.beta), n
        assert classify_involution(build_F(*triple)) == triple, n
    rng = random.Random(20240)
    trials = 0
    while trials < 200:
        x = rng.randrange(0, 6)
        y = rng.randrange(0, 6)
        z = rng.randrange(0, 6)
        size = 2 * x + y + z
        if size == 0 or size > 10:
            continue
        s, sinv = random_unimodular_pair(size, rng.randrange(1 << 30))
        conj = s @ build_F(x, y, z) @ sinv
        assert classify_involution(conj) == (x, y, z), (x, y, z)
        trials += 1
    report("11 involution normal form", time.perf_counter() - start)


def _minor_gcd(M, k):
    g = 0
    for ri in combinations(range(M.rows), k):
        for ci in combinations(range(M.cols), k):
            sub = IntMatrix([[M.entries[i][j] for j in ci] for i in ri])
            g = gcd(g, determinant(sub))
    return g


def test_c12_snf_property_suite():
    start = time.perf_counter()
    rng = random.Random(31337)
    for _ in range(500):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        divisors = smith_normal_form(m)
        for a, b in zip(divisors, divisors[1:]):
            assert b % a == 0 if a else b == 0, (m, divisors)
        acc = 1
        for k, d in enumerate(divisors, start=1):
            acc *= d
            assert acc == _minor_gcd(m, k), (m, divisors)
    report("12 snf property suite", time.perf_counter() - start)
