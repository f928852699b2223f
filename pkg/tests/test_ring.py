import pytest

from polyspace.combinatorics import binom, invariant_table
from polyspace.invariants import betti_z2_formula, cup_square_rank_formula
from polyspace.ring import (
    Gf2Poly,
    Monomial,
    cohomology_dim,
    cup_square_rank,
    mono_mul,
    monomial_basis,
    normalize,
    relation_space,
    splitting_independence,
)
from polyspace.subset_complex import middle_kernel


def test_normalize_square_rewrites():
    assert normalize(7, [1, 1]) == Gf2Poly([Monomial(1, 0b1)])
    assert normalize(7, [1, 2]) == Gf2Poly([Monomial(0, 0b11)])
    assert normalize(5, [1, 2, 3]).is_zero()
    assert normalize(7, [0, 0, 3, 3, 3]) == Gf2Poly([Monomial(4, 0b100)])
    with pytest.raises(ValueError):
        normalize(7, [7])


def test_mono_mul():
    m = 3
    a = Monomial(1, 0b011)
    b = Monomial(0, 0b010)
    assert mono_mul(a, b, m) == Monomial(2, 0b011)
    assert mono_mul(a, Monomial(0, 0b100), m) is None


def test_monomial_basis_counts():
    assert [mo.degree for mo in monomial_basis(7, 3)] == [3] * len(
        monomial_basis(7, 3)
    )
    assert len(monomial_basis(7, 0)) == 1
    assert len(monomial_basis(7, 2)) == 22
    assert len(monomial_basis(5, 3)) == 5
    for n in (5, 7, 9):
        m = (n - 1) // 2
        for q in range(0, 7):
            want = sum(binom(n - 1, k) for k in range(min(q, m - 1) + 1))
            assert len(monomial_basis(n, q)) == want


def test_monomial_basis_order():
    # size ascending, colex within each size
    basis = monomial_basis(7, 2)
    sizes = [mo.vmask.bit_count() for mo in basis]
    assert sizes == sorted(sizes)
    for k in set(sizes):
        masks = [mo.vmask for mo in basis if mo.vmask.bit_count() == k]
        assert masks == sorted(masks)


def test_relation_space_ranks():
    assert relation_space(7, 2).rank() == 0
    assert relation_space(7, 3).rank() == 15
    assert relation_space(5, 2).rank() == 4


def test_cohomology_dim_fixtures():
    assert [cohomology_dim(5, q) for q in range(3)] == [1, 5, 1]
    assert cohomology_dim(7, 1) == 7
    assert cohomology_dim(7, 4) == 1
    assert cohomology_dim(7, -1) == 0
    assert cohomology_dim(7, 5) == 0


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_cohomology_dim_matches_formula(n):
    for q in range(-1, n):
        assert cohomology_dim(n, q) == betti_z2_formula(n, q), q


def test_cup_square_rank_fixtures():
    assert cup_square_rank(7, 0) == 1
    assert cup_square_rank(7, 1) == 6
    assert cup_square_rank(7, 2) == 1
    assert cup_square_rank(7, 3) == 0
    with pytest.raises(ValueError):
        cup_square_rank(7, -1)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_cup_square_rank_matches_formula(n):
    m = (n - 1) // 2
    table = invariant_table(n)
    for q in range(n):
        got = cup_square_rank(n, q)
        assert got == cup_square_rank_formula(n, q), q
        if q <= m - 3:
            assert got == cohomology_dim(n, q)
        elif q == m - 2:
            assert got == table.gamma - table.beta
        elif q <= 2 * m - 4:
            assert got == cohomology_dim(n, q + 2)
        else:
            assert got == 0


@pytest.mark.parametrize("n, dim", [(5, 0), (7, 1), (9, 8), (11, 44)])
def test_splitting_independence(n, dim):
    got_dim, independent = splitting_independence(n)
    assert got_dim == dim
    assert independent
    assert got_dim == invariant_table(n).beta
    assert got_dim == middle_kernel(n)[0]
