"""Slab volume: exact formula vs independent oracles."""

import math
import random
from fractions import Fraction

import pytest

from chainlab import (
    DomainError,
    SlabSpec,
    slab_membership,
    slab_volume_exact,
    slab_volume_montecarlo,
)


def sum_distribution_cdf(n: int, t: Fraction) -> Fraction:
    """P(U_1 + ... + U_n <= t) for iid uniforms, by inclusion-exclusion.

    Independent oracle: evaluates the CDF at both slab boundaries rather
    than using the symmetry-folded volume formula.
    """
    if t <= 0:
        return Fraction(0)
    if t >= n:
        return Fraction(1)
    total = Fraction(0)
    for j in range(math.floor(t) + 1):
        total += (-1) ** j * math.comb(n, j) * (t - j) ** n
    return total / math.factorial(n)


def oracle_volume(n: int, kappa: Fraction) -> Fraction:
    lo = (n - kappa) / 2
    hi = (n + kappa) / 2
    return sum_distribution_cdf(n, hi) - sum_distribution_cdf(n, lo)


class TestExactVolume:
    def test_dimension_one_is_kappa(self):
        for i in range(1, 11):
            kappa = Fraction(i, 10)
            assert slab_volume_exact(SlabSpec(1, kappa)).exact == kappa

    def test_frozen_derived_values(self):
        # unit square minus two corner triangles of area 1/8
        assert slab_volume_exact(SlabSpec(2, Fraction(1))).exact == Fraction(3, 4)
        # formula: 1 - (2/6)(1 - 3*0)
        assert slab_volume_exact(SlabSpec(3, Fraction(1))).exact == Fraction(2, 3)
        assert slab_volume_exact(SlabSpec(3, Fraction(3))).exact == 1
        assert slab_volume_exact(SlabSpec(1, Fraction(1, 2))).exact == Fraction(1, 2)

    def test_full_cube_for_kappa_equal_n(self):
        for n in range(1, 9):
            assert slab_volume_exact(SlabSpec(n, Fraction(n))).exact == 1

    def test_against_cdf_oracle(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 6)
            kappa = Fraction(rng.randint(1, 24 * n), 24)
            if kappa > n:
                kappa = Fraction(n)
            result = slab_volume_exact(SlabSpec(n, kappa))
            assert result.exact == oracle_volume(n, kappa)

    def test_float_shadow_close(self):
        result = slab_volume_exact(SlabSpec(4, Fraction(7, 5)))
        assert abs(Fraction(result.as_float) - result.exact) <= Fraction(1, 2**40)

    def test_monotone_in_kappa(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(1, 5)
            a = Fraction(rng.randint(1, 40), 41)
            b = a + Fraction(rng.randint(1, 40), 41)
            k1, k2 = min(a * n, Fraction(n)), min(b * n, Fraction(n))
            if k1 == k2:
                continue
            v1 = slab_volume_exact(SlabSpec(n, k1)).exact
            v2 = slab_volume_exact(SlabSpec(n, k2)).exact
            assert v1 < v2 if k2 < n or k1 < n else v1 <= v2

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            SlabSpec(2, Fraction(0))
        with pytest.raises(DomainError):
            SlabSpec(2, Fraction(5, 2))
        with pytest.raises(DomainError):
            SlabSpec(0, Fraction(1, 2))

    def test_irrational_kappa_rejected_on_exact_path(self):
        spec = SlabSpec(2, 0.5)
        with pytest.raises(DomainError):
            slab_volume_exact(spec)


class TestMembership:
    def test_center_always_inside(self):
        for n in (1, 2, 5):
            spec = SlabSpec(n, Fraction(1, 3))
            assert slab_membership([Fraction(1, 2)] * n, spec)

    def test_origin_outside_for_small_kappa(self):
        spec = SlabSpec(3, Fraction(1))
        assert not slab_membership([Fraction(0)] * 3, spec)

    def test_boundary_point_included(self):
        spec = SlabSpec(2, Fraction(1))
        assert slab_membership([Fraction(1), Fraction(0)], spec)

    def test_symmetry_under_reflection(self):
        rng = random.Random(17)
        for _ in range(300):
            n = rng.randint(1, 4)
            spec = SlabSpec(n, Fraction(rng.randint(1, 2 * n), 2))
            x = [Fraction(rng.randint(0, 12), 12) for _ in range(n)]
            mirrored = [1 - c for c in x]
            assert slab_membership(x, spec) == slab_membership(mirrored, spec)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            slab_membership([Fraction(1, 2)], SlabSpec(2, Fraction(1)))

    def test_float_kappa_membership(self):
        assert slab_membership([0.5, 0.5], SlabSpec(2, 0.25))


class TestMonteCarlo:
    def test_whole_cube_estimates_one(self):
        mc = slab_volume_montecarlo(SlabSpec(2, Fraction(2)), 10**4, seed=1)
        assert mc.estimate == 1.0
        assert mc.half_width_99 == 0.0

    def test_agrees_with_exact(self):
        for n, kappa in ((2, Fraction(1)), (1, Fraction(1, 2))):
            exact = float(slab_volume_exact(SlabSpec(n, kappa)).exact)
            mc = slab_volume_montecarlo(SlabSpec(n, kappa), 10**6, seed=0)
            assert abs(mc.estimate - exact) < 0.005

    def test_deterministic_for_fixed_seed(self):
        a = slab_volume_montecarlo(SlabSpec(3, Fraction(1)), 10**5, seed=99)
        b = slab_volume_montecarlo(SlabSpec(3, Fraction(1)), 10**5, seed=99)
        assert a == b

    def test_sample_floor(self):
        with pytest.raises(DomainError):
            slab_volume_montecarlo(SlabSpec(2, Fraction(1)), 999, seed=0)

    def test_coverage_over_seed_list(self):
        # the 99% interval should cover the exact value in >= 95 of 100 runs
        spec = SlabSpec(2, Fraction(1))
        exact = float(slab_volume_exact(spec).exact)
        covered = 0
        for seed in range(100):
            mc = slab_volume_montecarlo(spec, 10**5, seed=seed)
            if abs(mc.estimate - exact) < mc.half_width_99:
                covered += 1
        assert covered >= 95
