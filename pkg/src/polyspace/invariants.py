"""Poincare-series formulas and the exact-sequence bookkeeping that turns
them into elementary-divisor counts and the involution normal form.

The middle-degree inputs of `wang_divisor_counts` rest on a stated
assumption, not on an independent computation here: one degree below the
middle, the map 1 - (induced involution) is zero when m is even and is
multiplication by 2 when m is odd. That behaviour comes from comparing
with the ambient torus and is consumed as given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .combinatorics import InvariantTable, _check_n, binom, invariant_table
from .int_linalg import InvolutionClass


class NegativeCoefficient(ArithmeticError):
    """A series subtraction produced a negative coefficient; the inputs
    violate an invariant, so fail loudly instead of wrapping."""


class Inconsistent(ArithmeticError):
    """Divisor counts cannot be matched to an involution normal form."""


@dataclass(frozen=True)
class PoincarePoly:
    """Polynomial in t with nonnegative integer coefficients; trailing
    zeros are trimmed, so degree is len(coeffs) - 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        if any(x < 0 for x in c):
            raise NegativeCoefficient(f"negative coefficient in {c}")
        object.__setattr__(self, "coeffs", c)

    def coeff(self, q: int) -> int:
        if 0 <= q < len(self.coeffs):
            return self.coeffs[q]
        return 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        return sum(c * t**q for q, c in enumerate(self.coeffs))

    def mul_one_plus_t(self) -> "PoincarePoly":
        out = [0] * (len(self.coeffs) + 1)
        for q, c in enumerate(self.coeffs):
            out[q] += c
            out[q + 1] += c
        return PoincarePoly(tuple(out))

    def sub(self, other: "PoincarePoly") -> "PoincarePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return PoincarePoly(tuple(self.coeff(q) - other.coeff(q) for q in range(n)))

    def div_one_plus_t(self) -> "PoincarePoly":
        """Exact synthetic division by (1 + t); raises if the division
        leaves a remainder or a negative quotient coefficient."""
        quot = []
        carry = 0
        for q in range(len(self.coeffs)):
            c = self.coeff(q) - carry
            quot.append(c)
            carry = c
        if carry != 0:
            raise NegativeCoefficient("not divisible by 1 + t")
        return PoincarePoly(tuple(quot))


class DivisorCounts(NamedTuple):
    zeros: int
    ones: int
    twos: int


@dataclass(frozen=True)
class SeriesBundle:
    """All six series attached to one odd n."""

    n: int
    ps_M: PoincarePoly
    phi: PoincarePoly
    ps_Q_E: PoincarePoly
    gamma_E: PoincarePoly
    ps_Z2_Mbar: PoincarePoly
    ps_Z2_E: PoincarePoly


def _coeffs(length: int) -> list[int]:
    return [0] * length


def series_bundle(n: int) -> SeriesBundle:
    m = _check_n(n)
    table = invariant_table(n)
    D, beta = table.D, table.beta

    ps_m = _coeffs(n - 2)
    for q in range(m - 1):
        ps_m[q] = binom(n - 1, q)
    ps_m[m - 1] = 2 * D
    for q in range(m, n - 2):
        ps_m[q] = binom(n - 1, q + 2)

    phi = _coeffs(n - 2)
    for q in range(0, m - 1, 2):
        phi[q] = binom(n - 1, q)
    phi[m - 1] = D
    for q in range(m, n - 3):
        if q % 2 == 1:
            phi[q] = binom(n - 1, q + 2)

    gamma_e = _coeffs(n - 2)
    for q in range(1, m - 1, 2):
        gamma_e[q] = binom(n - 1, q)
    gamma_e[m - 1] = beta
    for q in range(m, n - 2):
        if q % 2 == 0:
            gamma_e[q] = binom(n - 1, q + 2)

    mbar = _coeffs(n - 2)
    for q in range(m):
        mbar[q] = sum(binom(n - 1, i) for i in range(q + 1))
    for q in range(m, n - 2):
        mbar[q] = sum(binom(n - 1, i) for i in range(n - 2 - q))

    e2 = _coeffs(n - 1)
    for q in range(m - 1):
        e2[q] = binom(n, q)
    e2[m - 1] = binom(n, m - 1) + beta
    e2[m] = binom(n, m - 1) + beta
    for q in range(m + 1, n - 1):
        e2[q] = binom(n, q + 2)

    phi_poly = PoincarePoly(tuple(phi))
    return SeriesBundle(
        n=n,
        ps_M=PoincarePoly(tuple(ps_m)),
        phi=phi_poly,
        ps_Q_E=phi_poly.mul_one_plus_t(),
        gamma_E=PoincarePoly(tuple(gamma_e)),
        ps_Z2_Mbar=PoincarePoly(tuple(mbar)),
        ps_Z2_E=PoincarePoly(tuple(e2)),
    )


def uct_quotient(bundle: SeriesBundle) -> PoincarePoly:
    """(mod-2 series of the total space minus its rational series),
    divided by (1 + t); the universal-coefficient bookkeeping says this
    must reproduce the 2-torsion series gamma_E."""
    return bundle.ps_Z2_E.sub(bundle.ps_Q_E).div_one_plus_t()


def betti_z2_formula(n: int, q: int) -> int:
    """Closed-form mod-2 Betti number of the halved space at degree q."""
    m = _check_n(n)
    if q < 0 or q > n - 3:
        return 0
    if q <= m - 1:
        return sum(binom(n - 1, i) for i in range(q + 1))
    return sum(binom(n - 1, i) for i in range(n - 2 - q))


def cup_square_rank_formula(n: int, q: int) -> int:
    """Closed form for the rank of cup product with R^2 out of degree q:
    injective below the middle band, a computed defect at q = m - 2,
    surjective above, zero once the target degree is out of range."""
    m = _check_n(n)
    table = invariant_table(n)
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q + 2 > n - 3:
        return 0
    if q <= m - 3:
        return betti_z2_formula(n, q)
    if q == m - 2:
        return table.gamma - table.beta
    return betti_z2_formula(n, q + 2)


def gysin_check(n: int, lambdas: Sequence[int]) -> bool:
    """True iff the circle-bundle exact-sequence recurrence

        dim^q(total) = dim^{q-1}(base) + dim^q(base) - lam_{q-2} - lam_{q-1}

    reproduces the closed-form mod-2 series of the total space."""
    _check_n(n)
    bundle = series_bundle(n)

    def lam(q: int) -> int:
        if 0 <= q < len(lambdas):
            return lambdas[q]
        return 0

    mbar = bundle.ps_Z2_Mbar
    expected = bundle.ps_Z2_E
    for q in range(max(expected.degree, mbar.degree + 1) + 2):
        predicted = mbar.coeff(q - 1) + mbar.coeff(q) - lam(q - 2) - lam(q - 1)
        if predicted != expected.coeff(q):
            return False
    return True


def wang_divisor_counts(n: int) -> DivisorCounts:
    """Elementary-divisor counts of 1 - (induced involution) on the
    middle integral homology, forced by exactness of the mapping-torus
    sequence together with the rank and 2-torsion of the total space one
    degree below the top of the middle band.

    Relies on the stated middle-band assumption documented at module
    level (zero map for even m, multiplication by 2 for odd m).
    """
    m = _check_n(n)
    table = invariant_table(n)
    bundle = series_bundle(n)
    total_rank = 2 * table.D
    a = bundle.ps_Q_E.coeff(m - 1)
    b = bundle.gamma_E.coeff(m - 1)
    if m % 2 == 0:
        zeros = a - binom(n - 1, m - 2)
    else:
        zeros = a
    twos = b
    ones = total_rank - zeros - twos
    if min(zeros, ones, twos) < 0:
        raise Inconsistent(f"negative divisor count for n={n}")
    return DivisorCounts(zeros=zeros, ones=ones, twos=twos)


def involution_triple(n: int) -> InvolutionClass:
    """Normal-form block counts (x, y, z) of the involution on middle
    homology, matched against the divisor counts of I - F(x, y, z)."""
    counts = wang_divisor_counts(n)
    if counts.zeros < counts.ones:
        raise Inconsistent("more divisors 1 than 0; no normal form matches")
    return InvolutionClass(
        x=counts.ones, y=counts.zeros - counts.ones, z=counts.twos
    )


def invariant_table_for(n: int) -> InvariantTable:
    return invariant_table(n)
