"""The GF(2) chain complex on subsets of {1, ..., v}.

Basis elements of degree k are the k-element subsets, encoded as
bitmasks (bit i-1 represents element i). The boundary of a k-subset is
the sum of its (k-2)-subsets. Subsets of a fixed size are ordered
colexicographically, which for bitmasks is plain numeric order; this
fixed global order is what makes basis vectors and fixtures portable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .combinatorics import _check_n, binom
from .gf2 import WORD_BITS, Gf2Matrix


@lru_cache(maxsize=None)
def k_subset_masks(v: int, k: int) -> tuple[int, ...]:
    """All k-subsets of {1,...,v} as bitmasks, in colex (numeric) order."""
    if k < 0 or k > v:
        return ()
    if k == 0:
        return (0,)
    out = []
    mask = (1 << k) - 1
    last = mask << (v - k)
    while True:
        out.append(mask)
        if mask == last:
            break
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple
    return tuple(out)


def _bit_positions(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def boundary_matrix(v: int, k: int) -> Gf2Matrix:
    """Matrix of the boundary map from k-subsets to (k-2)-subsets.

    Rows are indexed by (k-2)-subsets, columns by k-subsets, both in
    colex order; entry 1 iff the row subset is contained in the column.
    """
    if v < 1:
        raise ValueError("v must be positive")
    if k < 2 or k > v:
        raise ValueError(f"need 2 <= k <= v, got k={k}, v={v}")
    row_masks = k_subset_masks(v, k - 2)
    col_masks = k_subset_masks(v, k)
    row_index = {m: i for i, m in enumerate(row_masks)}
    out = Gf2Matrix.zeros(len(row_masks), len(col_masks))
    for j, cmask in enumerate(col_masks):
        w, b = divmod(j, WORD_BITS)
        bit = np.uint64(1 << b)
        bits = _bit_positions(cmask)
        for a, c in combinations(bits, 2):
            sub = cmask & ~((1 << a) | (1 << c))
            out.data[row_index[sub], w] |= bit
    return out


@dataclass(frozen=True)
class ChainComplexReport:
    """Homology of the truncated one-parity complex C_top -> ... -> C_eps."""

    v: int
    parity: str  # "even-start" (eps = 0) or "odd-start" (eps = 1)
    homology_dims: tuple[int, ...]  # index i holds the dim at degree top - 2i

    @property
    def degrees(self) -> tuple[int, ...]:
        eps = 0 if self.parity == "even-start" else 1
        top = eps + 2 * (len(self.homology_dims) - 1)
        return tuple(range(top, eps - 1, -2))


def complex_homology(v: int, top: int) -> ChainComplexReport:
    """Homology dims of C_top -> C_{top-2} -> ... -> C_eps -> 0.

    The map into C_top from C_{top+2} is included whenever top + 2 <= v,
    so homology at the top term is meaningful.
    """
    if top > v:
        raise ValueError("top must be at most v")
    if top < 0:
        raise ValueError("top must be nonnegative")
    eps = top % 2
    dims = []
    for q in range(top, eps - 1, -2):
        dim_c = binom(v, q)
        rank_out = boundary_matrix(v, q).rank() if q >= 2 else 0
        ker = dim_c - rank_out
        if q < top or top + 2 <= v:
            rank_in = boundary_matrix(v, q + 2).rank()
        else:
            rank_in = 0
        dims.append(ker - rank_in)
    parity = "even-start" if eps == 0 else "odd-start"
    return ChainComplexReport(v=v, parity=parity, homology_dims=tuple(dims))


def middle_kernel(n: int) -> tuple[int, list[np.ndarray]]:
    """Kernel of the boundary map out of the (m+1)-subsets of {1,...,n-1}.

    Its dimension equals the beta-invariant of n; basis vectors are
    indexed by the colex ordering of the (m+1)-subsets.
    """
    m = _check_n(n)
    basis = boundary_matrix(n - 1, m + 1).kernel_basis()
    return len(basis), basis


def inclusion_matrix(v: int, s: int, t: int) -> Gf2Matrix:
    """Inclusion matrix: rows are all k-subsets with 0 <= k <= t, columns
    are s-subsets; entry 1 iff the row subset is contained in the column."""
    if s > v or t > s:
        raise ValueError(f"need t <= s <= v, got v={v}, s={s}, t={t}")
    if s < 1:
        raise ValueError("s must be positive")
    if t < 0:
        raise ValueError("t must be nonnegative")
    row_index: dict[int, int] = {}
    for k in range(t + 1):
        for mask in k_subset_masks(v, k):
            row_index[mask] = len(row_index)
    col_masks = k_subset_masks(v, s)
    out = Gf2Matrix.zeros(len(row_index), len(col_masks))
    for j, cmask in enumerate(col_masks):
        w, b = divmod(j, WORD_BITS)
        bit = np.uint64(1 << b)
        bits = _bit_positions(cmask)
        for k in range(t + 1):
            for sub_bits in combinations(bits, k):
                sub = 0
                for p in sub_bits:
                    sub |= 1 << p
                out.data[row_index[sub], w] |= bit
    return out


def inclusion_rank(v: int, s: int, t: int) -> int:
    """GF(2) rank of the inclusion matrix; equals C(v, t) when
    t <= s <= v - t."""
    return inclusion_matrix(v, s, t).rank()
