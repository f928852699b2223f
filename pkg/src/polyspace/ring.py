"""The presented mod-2 cohomology ring of the halved polygon space.

Generators: one degree-one class R and degree-one classes V_1 ... V_{n-1}.
Relations: V_i^2 = R V_i (used as a rewrite, so stored monomials are
square-free in the V's); any V-product over a set of size >= m is zero
(folded into the normal form, such monomials are never stored); and for
every subset L of {1,...,n-1} with at least m+1 elements, the element

    g_L = sum over S a subset of L with |S| <= m-1 of R^(|L|-|S|-1) V_S

lies in the defining ideal.

A normal-form monomial is R^a V_S with |S| <= m-1; its degree is a + |S|.
Monomials of one degree q are ordered by |S| ascending, colex within each
size; that fixed order indexes all coordinate vectors below.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .combinatorics import _check_n
from .gf2 import Gf2Matrix, induced_quotient_rank
from .subset_complex import _bit_positions, boundary_matrix, k_subset_masks


class Monomial(NamedTuple):
    r_exp: int
    vmask: int

    @property
    def degree(self) -> int:
        return self.r_exp + self.vmask.bit_count()


class Gf2Poly:
    """A GF(2) sum of normal-form monomials; addition is symmetric
    difference of the term sets."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Monomial] = ()):
        self.terms = frozenset(terms)

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.terms ^ other.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Gf2Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({sorted(self.terms)!r})"

    def is_zero(self) -> bool:
        return not self.terms


def mono_mul(a: Monomial, b: Monomial, m: int) -> Optional[Monomial]:
    """Product of two normal-form monomials, renormalized; None if the
    combined V-support reaches size m (the monomial is zero)."""
    union = a.vmask | b.vmask
    if union.bit_count() >= m:
        return None
    shared = (a.vmask & b.vmask).bit_count()
    return Monomial(a.r_exp + b.r_exp + shared, union)


def normalize(n: int, factors: Iterable[int]) -> Gf2Poly:
    """Normal form of a product of generators.

    `factors` lists generator codes with multiplicity: 0 is R, i in
    1..n-1 is V_i. Each V_i^e rewrites to R^(e-1) V_i; the result is a
    single normal-form monomial, or zero if the V-support is too large.
    """
    m = _check_n(n)
    r_exp = 0
    support = 0
    counts: dict[int, int] = {}
    for f in factors:
        if f == 0:
            r_exp += 1
        elif 1 <= f <= n - 1:
            counts[f] = counts.get(f, 0) + 1
        else:
            raise ValueError(f"unknown generator code {f}")
    for i, e in counts.items():
        support |= 1 << (i - 1)
        r_exp += e - 1
    if support.bit_count() >= m:
        return Gf2Poly()
    return Gf2Poly([Monomial(r_exp, support)])


@lru_cache(maxsize=None)
def monomial_basis(n: int, q: int) -> tuple[Monomial, ...]:
    """All degree-q normal-form monomials R^(q-k) V_S, |S| = k <= m-1,
    sizes ascending and colex within each size."""
    m = _check_n(n)
    if q < 0:
        return ()
    out = []
    for k in range(min(q, m - 1) + 1):
        for mask in k_subset_masks(n - 1, k):
            out.append(Monomial(q - k, mask))
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(n: int, q: int) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomial_basis(n, q))}


@lru_cache(maxsize=None)
def _generator_terms(n: int, ell: int) -> tuple[tuple[Monomial, ...], ...]:
    """For each ell-subset L (colex order), the normal-form terms of g_L."""
    m = _check_n(n)
    out = []
    for lmask in k_subset_masks(n - 1, ell):
        bits = _bit_positions(lmask)
        terms = []
        for k in range(min(ell, m - 1) + 1):
            for sub in combinations(bits, k):
                smask = 0
                for p in sub:
                    smask |= 1 << p
                terms.append(Monomial(ell - k - 1, smask))
        out.append(tuple(terms))
    return tuple(out)


@lru_cache(maxsize=None)
def relation_space(n: int, q: int) -> Gf2Matrix:
    """Degree-q slice of the defining ideal, as coordinate rows in the
    degree-q monomial basis.

    Rows are the normalized products M * g_L over every L with
    m+1 <= |L| <= q+1 and every monomial M of degree q - (|L| - 1).
    All such L are used, not only the smallest size: whether the larger
    generators are redundant is not settled, and the closed-form
    dimension check is the safety net.
    """
    m = _check_n(n)
    basis = monomial_basis(n, q)
    index = _basis_index(n, q)
    rows: list[int] = []
    for ell in range(m + 1, min(q + 1, n - 1) + 1):
        gens = _generator_terms(n, ell)
        left = monomial_basis(n, q - (ell - 1))
        for terms in gens:
            for mono in left:
                acc = 0
                for t in terms:
                    prod = mono_mul(mono, t, m)
                    if prod is not None:
                        acc ^= 1 << index[prod]
                rows.append(acc)
    return Gf2Matrix.from_int_rows(rows, len(basis))


@lru_cache(maxsize=None)
def _relation_rank(n: int, q: int) -> int:
    return relation_space(n, q).rank()


def cohomology_dim(n: int, q: int) -> int:
    """dim of the degree-q piece of the quotient ring: monomial count
    minus relation rank. Zero outside 0 <= q <= n - 3."""
    _check_n(n)
    if q < 0 or q > n - 3:
        return 0
    return len(monomial_basis(n, q)) - _relation_rank(n, q)


def cup_square_rank(n: int, q: int) -> int:
    """Rank of multiplication by R^2 from degree q to degree q+2 of the
    quotient ring, computed by elimination in the quotient at q+2."""
    _check_n(n)
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q + 2 > n - 3:
        return 0
    index = _basis_index(n, q + 2)
    rows = []
    for mono in monomial_basis(n, q):
        rows.append(1 << index[Monomial(mono.r_exp + 2, mono.vmask)])
    images = Gf2Matrix.from_int_rows(rows, len(index))
    return induced_quotient_rank(images, relation_space(n, q + 2))


def splitting_independence(n: int) -> tuple[int, bool]:
    """Split each size-(m+1) generator g_L as p_L + f_L, where p_L holds
    the terms with |S| = m-1 and f_L those with |S| <= m-2.

    Returns (k, flag): k is the kernel dimension of the p-coefficient
    matrix (which, forgetting R, is the subset boundary matrix), and
    flag reports whether the polynomials sum(xi_i f_i) over a kernel
    basis {xi} are linearly independent.
    """
    m = _check_n(n)
    v = n - 1
    kernel = boundary_matrix(v, m + 1).kernel_basis()
    k = len(kernel)
    if k == 0:
        return 0, True
    # f-part coordinates live in the degree-m monomial basis.
    index = _basis_index(n, m)
    f_rows = []
    for terms in _generator_terms(n, m + 1):
        acc = 0
        for t in terms:
            if t.vmask.bit_count() <= m - 2:
                acc ^= 1 << index[t]
        f_rows.append(acc)
    combos = []
    for xi in kernel:
        acc = 0
        for i, bit in enumerate(xi):
            if bit:
                acc ^= f_rows[i]
        combos.append(acc)
    mat = Gf2Matrix.from_int_rows(combos, len(index))
    return k, mat.rank() == k
