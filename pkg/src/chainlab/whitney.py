"""Whitney numbers of the grid poset {0..m-1}^n and their top-k sums.

The Whitney number at rank r is the number of grid points whose
coordinates sum to r, i.e. the coefficient of x^r in
(1 + x + ... + x^(m-1))^n.  The table is symmetric and unimodal, its
entries total m^n, and the sum of its ceil(kappa*m + n) largest entries,
divided by m^n, converges to the slab volume as m grows.  Everything
here is exact integer / rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ResourceLimitError
from .rational import as_rational, RationalLike
from .slab_volume import SlabSpec, slab_volume_exact

#: Default memory budget for a coefficient table, in bytes.
DEFAULT_TABLE_BUDGET = 1 << 28


@dataclass(frozen=True)
class CoefficientTable:
    """Whitney numbers of {0..m-1}^n, indexed by rank."""

    n: int
    m: int
    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def total(self) -> int:
        return self.m**self.n

    @property
    def max_rank(self) -> int:
        return self.n * (self.m - 1)


@dataclass(frozen=True)
class WhitneySum:
    """Sum of the k largest Whitney numbers."""

    k: int
    value: int


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    value: int
    ratio: Fraction
    volume: Fraction

    @property
    def gap(self) -> Fraction:
        return abs(self.ratio - self.volume)


def _convolve_ones(coeffs: Sequence[int], m: int) -> list[int]:
    # Schoolbook product with the all-ones window of length m: each output
    # coefficient is the sum of a window of at most m inputs.
    out_len = len(coeffs) + m - 1
    return [
        sum(coeffs[max(0, r - m + 1) : min(r, len(coeffs) - 1) + 1])
        for r in range(out_len)
    ]


def _estimate_table_bytes(n: int, m: int) -> int:
    # n(m-1)+1 entries, each at most m^n, stored as Python ints.
    entries = n * (m - 1) + 1
    bits_per_entry = max(1, int(n * math.log2(m))) if m > 1 else 1
    return entries * (bits_per_entry // 8 + 32)


def whitney_numbers(
    n: int, m: int, max_bytes: int = DEFAULT_TABLE_BUDGET
) -> CoefficientTable:
    """Exact Whitney numbers, by n-fold convolution of the length-m window."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if _estimate_table_bytes(n, m) > max_bytes:
        raise ResourceLimitError(
            f"coefficient table for n={n}, m={m} exceeds the {max_bytes}-byte budget"
        )
    coeffs = [1] * m
    for _ in range(n - 1):
        coeffs = _convolve_ones(coeffs, m)
    return CoefficientTable(n=n, m=m, coeffs=tuple(coeffs))


def central_block(table_length: int, k: int) -> tuple[int, int]:
    """Index range [lo, hi) of the k central entries of a table.

    When k and the table length have opposite parities the block cannot
    be centred exactly; it is shifted one step toward the lower ranks.
    """
    if k >= table_length:
        return 0, table_length
    lo = (table_length - k) // 2
    return lo, lo + k


def sum_k_largest(table: CoefficientTable, k: int) -> WhitneySum:
    """Sum of the k largest entries of the table.

    Symmetry plus unimodality make the k largest entries a block of k
    consecutive central entries; `central_block` picks that block
    deterministically, and the result equals the sort-and-take-top-k
    value.  k beyond the table length returns the total m^n.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    lo, hi = central_block(len(table.coeffs), k)
    return WhitneySum(k=k, value=sum(table.coeffs[lo:hi]))


def whitney_sum(n: int, m: int, kappa: RationalLike) -> WhitneySum:
    """Sum of the ceil(kappa*m + n) largest Whitney numbers of {0..m-1}^n.

    The ceiling is taken exactly on rationals; float ceilings misround
    near integers.
    """
    kappa = as_rational(kappa)
    if not 0 < kappa <= n:
        raise DomainError(f"kappa must lie in (0, n] = (0, {n}], got {kappa}")
    k = math.ceil(kappa * m + n)
    return sum_k_largest(whitney_numbers(n, m), k)


def convergence_table(
    n: int, kappa: RationalLike, m_list: Iterable[int]
) -> list[ConvergenceRow]:
    """One row per m, witnessing whitney_sum / m^n -> slab volume.

    The gap column is exact; CLI/CSV emission converts to floats.
    """
    kappa = as_rational(kappa)
    volume = slab_volume_exact(SlabSpec(n=n, kappa=kappa)).exact
    rows = []
    for m in m_list:
        value = whitney_sum(n, m, kappa).value
        rows.append(
            ConvergenceRow(m=m, value=value, ratio=Fraction(value, m**n), volume=volume)
        )
    return rows
