from itertools import combinations

import numpy as np
import pytest

from polyspace.combinatorics import binom, invariant_table
from polyspace.gf2 import Gf2Matrix
from polyspace.subset_complex import (
    boundary_matrix,
    complex_homology,
    inclusion_rank,
    k_subset_masks,
    middle_kernel,
)


def masks_by_enumeration(v, k):
    """Brute-force oracle: enumerate and sort by mask (colex order)."""
    out = []
    for combo in combinations(range(v), k):
        mask = 0
        for p in combo:
            mask |= 1 << p
        out.append(mask)
    return tuple(sorted(out))


def test_k_subset_masks_against_enumeration():
    for v in range(0, 9):
        for k in range(0, v + 2):
            assert k_subset_masks(v, k) == masks_by_enumeration(v, k)


def test_boundary_matrix_v4_k3_is_j_plus_i():
    # Each 3-set contains three of the four singletons; under colex order
    # on both sides the missing singleton sits at the mirrored column, so
    # the matrix is J plus the reversed identity (J + I up to row order).
    dense = boundary_matrix(4, 3).to_dense()
    assert np.array_equal(dense, 1 - np.eye(4, dtype=np.uint8)[::-1])
    assert np.array_equal(dense[::-1], 1 - np.eye(4, dtype=np.uint8))


def test_boundary_matrix_small_shapes():
    b = boundary_matrix(3, 2)
    assert (b.rows, b.cols) == (1, 3)
    assert b.to_dense().tolist() == [[1, 1, 1]]
    b = boundary_matrix(4, 4)
    assert (b.rows, b.cols) == (6, 1)
    assert b.to_dense().tolist() == [[1]] * 6


def test_boundary_matrix_entries_by_containment():
    v, k = 6, 4
    rows = k_subset_masks(v, k - 2)
    cols = k_subset_masks(v, k)
    dense = boundary_matrix(v, k).to_dense()
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            assert dense[i, j] == (1 if (r & c) == r else 0)


def test_boundary_matrix_rejects_bad_k():
    with pytest.raises(ValueError):
        boundary_matrix(4, 1)
    with pytest.raises(ValueError):
        boundary_matrix(4, 5)


def test_boundary_squares_to_zero():
    for v in range(4, 13):
        for k in range(4, v + 1):
            outer = boundary_matrix(v, k - 2)
            inner = boundary_matrix(v, k)
            assert outer.matmul(inner).is_zero()


def test_complex_homology_tiny():
    report = complex_homology(2, 2)
    assert report.homology_dims == (0, 0)
    report = complex_homology(4, 3)
    assert report.parity == "odd-start"
    assert report.degrees == (3, 1)
    assert report.homology_dims == (0, 0)
    with pytest.raises(ValueError):
        complex_homology(4, 5)


def test_one_parity_complex_acyclic_other_concentrated():
    # At v = 2m the complex through C_{m+1} is acyclic; the complementary
    # one has homology only at its middle term C_m.
    for m in range(2, 7):
        v = 2 * m
        top_a = v if (m + 1) % 2 == 0 else v - 1
        acyclic = complex_homology(v, top_a)
        assert all(d == 0 for d in acyclic.homology_dims), (m, acyclic)
        other = complex_homology(v, v - 1 if top_a == v else v)
        nonzero = [q for q, d in zip(other.degrees, other.homology_dims) if d]
        assert nonzero == [m], (m, other)


@pytest.mark.parametrize("n, dim", [(5, 0), (7, 1), (9, 8), (11, 44)])
def test_middle_kernel_dims(n, dim):
    got_dim, basis = middle_kernel(n)
    assert got_dim == dim == len(basis)
    assert got_dim == invariant_table(n).beta
    mat = boundary_matrix(n - 1, (n - 1) // 2 + 1)
    dense = mat.to_dense()
    for vec in basis:
        assert len(vec) == mat.cols
        assert not (dense @ vec % 2).any()


def test_middle_kernel_matches_euler_identity():
    for n in range(5, 14, 2):
        t = invariant_table(n)
        assert middle_kernel(n)[0] == t.D - t.d == t.beta


def test_inclusion_rank_examples():
    assert inclusion_rank(6, 4, 2) == 15
    assert inclusion_rank(2, 1, 0) == 1
    assert inclusion_rank(4, 3, 1) == 4


def test_inclusion_rank_rejects_bad_args():
    with pytest.raises(ValueError):
        inclusion_rank(4, 5, 1)
    with pytest.raises(ValueError):
        inclusion_rank(4, 2, 3)


def test_inclusion_rank_formula_small():
    for v in range(1, 9):
        for t in range(v // 2 + 1):
            for s in range(max(t, 1), v - t + 1):
                assert inclusion_rank(v, s, t) == binom(v, t), (v, s, t)
