"""The grid poset {0..m-1}^n: chains, chain DP, decompositions, oracles.

Points are plain integer tuples ordered componentwise.  The module
provides the maximum-weight chain DP (rank-layered sweep, n * m^n time),
a symmetric chain decomposition built by the inductive product splice,
and a brute-force maximiser over families with no (k+1)-element chain,
for grids small enough to enumerate every family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, ResourceLimitError
from .rational import as_rational
from .whitney import sum_k_largest, whitney_numbers

GridPoint = tuple[int, ...]

#: Cap on m^n for the chain DP.
DEFAULT_MAX_STATES = 10**7
#: Cap on m^n for the brute-force family enumeration.
BRUTEFORCE_MAX_POINTS = 16
#: Cap on m^n for the symmetric chain decomposition output.
SCD_MAX_POINTS = 12**6

_ZERO = Fraction(0)


def _check_point(p: GridPoint, n: int, m: int) -> None:
    if len(p) != n:
        raise DomainError(f"point {p} has {len(p)} coordinates, expected {n}")
    for c in p:
        if not isinstance(c, int) or not 0 <= c <= m - 1:
            raise DomainError(f"coordinate {c!r} of {p} outside [0, {m - 1}]")


def dominates(a: GridPoint, b: GridPoint) -> bool:
    """Componentwise a >= b."""
    return all(x >= y for x, y in zip(a, b))


def comparable(a: GridPoint, b: GridPoint) -> bool:
    return dominates(a, b) or dominates(b, a)


def is_chain(points: Iterable[GridPoint]) -> bool:
    """Whether every pair of points is comparable componentwise."""
    pts = list(points)
    if pts and any(len(p) != len(pts[0]) for p in pts):
        raise DomainError("points of mixed dimension")
    pts.sort(key=lambda p: (sum(p), p))
    return all(dominates(pts[i + 1], pts[i]) for i in range(len(pts) - 1))


@dataclass(frozen=True)
class ChainOfPoints:
    """A nondecreasing sequence of distinct grid points."""

    points: tuple[GridPoint, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.points, self.points[1:]):
            if a == b or not dominates(b, a):
                raise DomainError(f"{a} -> {b} is not a strict componentwise step")

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class WeightedGrid:
    """Nonnegative rational weights on {0..m-1}^n; absent points weigh 0."""

    n: int
    m: int
    weights: Mapping[GridPoint, Fraction]

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 2:
            raise DomainError(f"need n >= 1 and m >= 2, got n={self.n}, m={self.m}")
        clean = {}
        for p, w in self.weights.items():
            _check_point(p, self.n, self.m)
            w = as_rational(w)
            if w < 0:
                raise DomainError(f"negative weight {w} at {p}")
            clean[p] = w
        object.__setattr__(self, "weights", clean)


@dataclass(frozen=True)
class MaxChainResult:
    total: Fraction
    witness: ChainOfPoints


@dataclass(frozen=True)
class SymmetricChainDecomposition:
    """Partition of {0..m-1}^n into saturated rank-symmetric chains."""

    n: int
    m: int
    chains: tuple[ChainOfPoints, ...]


def _strides(n: int, m: int) -> list[int]:
    return [m ** (n - 1 - j) for j in range(n)]


def _unflatten(i: int, n: int, m: int) -> GridPoint:
    digits = []
    for _ in range(n):
        i, d = divmod(i, m)
        digits.append(d)
    return tuple(reversed(digits))


def max_weight_chain(
    grid: WeightedGrid, max_states: int = DEFAULT_MAX_STATES
) -> MaxChainResult:
    """Maximum total weight of a chain, with a deterministic witness.

    best[d] = weight[d] + max over d' > d of best[d'], computed in one
    sweep from the top of the grid: with nonnegative weights, best is
    already its own dominance closure, so the max over all successors
    equals the max over the n single-coordinate successors.

    The witness is the lexicographically smallest optimal chain among
    those whose points all carry positive weight (zero-weight points
    never change the total and are not reported).
    """
    n, m = grid.n, grid.m
    size = m**n
    if size > max_states:
        raise ResourceLimitError(f"grid has {size} states, cap is {max_states}")
    strides = _strides(n, m)
    weight: list[Fraction] = [_ZERO] * size
    for p, w in grid.weights.items():
        weight[sum(c * s for c, s in zip(p, strides))] = w

    best: list[Fraction] = [_ZERO] * size
    for i in range(size - 1, -1, -1):
        above = _ZERO
        rem = i
        for j in range(n - 1, -1, -1):
            rem, digit = divmod(rem, m)
            if digit < m - 1:
                cand = best[i + strides[j]]
                if cand > above:
                    above = cand
        best[i] = weight[i] + above

    optimum = best[0]
    if optimum == 0:
        return MaxChainResult(total=_ZERO, witness=ChainOfPoints(()))

    positives = sorted(
        (p for p, w in grid.weights.items() if w > 0),
        key=lambda p: p,
    )
    flat = {p: sum(c * s for c, s in zip(p, strides)) for p in positives}
    witness: list[GridPoint] = []
    remaining = optimum
    prev: GridPoint | None = None
    while remaining > 0:
        for p in positives:
            if prev is not None and (p == prev or not dominates(p, prev)):
                continue
            if best[flat[p]] == remaining:
                witness.append(p)
                remaining -= grid.weights[p]
                prev = p
                break
        else:
            raise AssertionError("witness reconstruction failed; DP bug")
    return MaxChainResult(total=optimum, witness=ChainOfPoints(tuple(witness)))


def symmetric_chain_decomposition(n: int, m: int) -> SymmetricChainDecomposition:
    """Symmetric chain decomposition of {0..m-1}^n.

    Inductive product construction: each symmetric chain of the
    (n-1)-dimensional decomposition, crossed with the new length-m
    factor, is peeled into hooks (one row to its corner, then up the
    column), every hook again saturated and symmetric.
    """
    if n < 1 or m < 2:
        raise DomainError(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    if m**n > SCD_MAX_POINTS:
        raise ResourceLimitError(
            f"decomposition of {m}^{n} points exceeds the cap {SCD_MAX_POINTS}"
        )
    q = m - 1
    chains: list[list[GridPoint]] = [[(j,) for j in range(m)]]
    for _ in range(n - 1):
        spliced: list[list[GridPoint]] = []
        for chain in chains:
            p = len(chain) - 1
            for t in range(min(p, q) + 1):
                hook = [chain[t] + (j,) for j in range(q - t + 1)]
                hook += [chain[i] + (q - t,) for i in range(t + 1, p + 1)]
                spliced.append(hook)
        chains = spliced
    return SymmetricChainDecomposition(
        n=n, m=m, chains=tuple(ChainOfPoints(tuple(c)) for c in chains)
    )


def ksperner_bound_via_scd(n: int, m: int, k: int) -> int:
    """Upper bound sum over chains of min(k, |chain|) for k-Sperner families.

    The value must coincide with the sum of the k largest Whitney
    numbers; the equality is asserted here because a mismatch means one
    of the two computations is broken.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    scd = symmetric_chain_decomposition(n, m)
    bound = sum(min(k, len(chain)) for chain in scd.chains)
    expected = sum_k_largest(whitney_numbers(n, m), k).value
    if bound != expected:
        raise AssertionError(
            f"SCD bound {bound} != Whitney top-{k} sum {expected} for n={n}, m={m}"
        )
    return bound


def ksperner_max_bruteforce(n: int, m: int, k: int, prune: bool = True) -> int:
    """Exact maximum size of a family with no chain of k+1 points.

    Depth-first enumeration over all families, processed in a linear
    extension of the grid so the longest chain ending at each chosen
    point is fixed at insertion time.  The optional pruning is the
    extendability bound (chosen + remaining <= incumbent) and never
    changes the result.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    size = m**n
    if size > BRUTEFORCE_MAX_POINTS:
        raise ResourceLimitError(
            f"family space 2^{size} too large; cap is 2^{BRUTEFORCE_MAX_POINTS}"
        )
    points = sorted(_unflatten(i, n, m) for i in range(size))
    points.sort(key=lambda p: (sum(p), p))
    preds = [
        [j for j in range(i) if dominates(points[i], points[j])]
        for i in range(len(points))
    ]

    best = 0
    depth = [0] * len(points)  # longest chosen chain ending here, 0 = not chosen
    chosen_count = 0

    def visit(i: int) -> None:
        nonlocal best, chosen_count
        if i == len(points):
            if chosen_count > best:
                best = chosen_count
            return
        if prune and chosen_count + (len(points) - i) <= best:
            return
        d = 1 + max((depth[j] for j in preds[i] if depth[j]), default=0)
        if d <= k:
            depth[i] = d
            chosen_count += 1
            visit(i + 1)
            chosen_count -= 1
            depth[i] = 0
        visit(i + 1)

    visit(0)
    return best
