"""Extended-real kernel, scales, subset machinery, and survival profiles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonadd.core import (
    EXTENDED,
    FiniteSpace,
    Fn,
    INF,
    NONNEG,
    SurvivalProfile,
    UNIT,
    ValueScale,
    combine,
    expand_masks,
    iter_submasks,
    level_mask_ge,
    level_mask_gt,
    profile_eval,
    rng_for,
    scale_contains,
    subset_infima,
)
from nonadd.results import DomainError

xreals = st.one_of(
    st.floats(min_value=0.0, max_value=1e9, allow_nan=False),
    st.just(0.0),
    st.just(INF),
)


class TestCombine:
    def test_zero_times_infinity_is_zero(self):
        assert combine(0.0, INF, "mul") == 0.0
        assert combine(INF, 0.0, "mul") == 0.0

    def test_one_over_zero_is_infinity(self):
        assert combine(1.0, 0.0, "div") == INF

    def test_one_over_infinity_is_zero(self):
        assert combine(1.0, INF, "div") == 0.0

    def test_infinity_absorbs_addition(self):
        assert combine(INF, 5.0, "add") == INF

    def test_total_on_corner_cases(self):
        # the derived conventions: x/y = x * (1/y)
        assert combine(0.0, 0.0, "div") == 0.0
        assert combine(INF, INF, "div") == 0.0
        assert combine(INF, INF, "mul") == INF

    def test_rejects_nan_and_negative(self):
        with pytest.raises(DomainError):
            combine(-1.0, 2.0, "add")
        with pytest.raises(DomainError):
            combine(float("nan"), 2.0, "add")
        with pytest.raises(DomainError):
            combine(1.0, 2.0, "nope")

    @given(a=xreals, b=xreals)
    @settings(max_examples=200, deadline=None)
    def test_commutative_kinds(self, a, b):
        for kind in ("add", "mul", "min", "max"):
            assert combine(a, b, kind) == combine(b, a, kind)

    # dyadic ladder keeps float products exact, so associativity is decidable
    ladder = st.sampled_from([0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 1024.0, INF])

    @given(a=ladder, b=ladder, c=ladder)
    @settings(max_examples=200, deadline=None)
    def test_min_max_mul_add_associative_on_ladder(self, a, b, c):
        for kind in ("min", "max", "mul", "add"):
            left = combine(combine(a, b, kind), c, kind)
            right = combine(a, combine(b, c, kind), kind)
            assert left == right

    @given(a=xreals, b=xreals)
    @settings(max_examples=200, deadline=None)
    def test_mul_convention_consistent_with_division(self, a, b):
        # x / y agrees with x * (1/y) by construction; spot the identity
        assert combine(a, b, "div") == combine(a, combine(1.0, b, "div"), "mul")


class TestValueScale:
    def test_closed_boundary_belongs(self):
        assert scale_contains(UNIT, 1.0)

    def test_open_infinite_end_excluded(self):
        assert not scale_contains(NONNEG, INF)
        assert scale_contains(EXTENDED, INF)

    def test_above_bound_excluded(self):
        assert not scale_contains(UNIT, 1.5)

    @given(y=st.floats(min_value=0, max_value=2, allow_nan=False),
           z=st.floats(min_value=0, max_value=2, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_membership_monotone_downward(self, y, z):
        for scale in (UNIT, ValueScale(1.5, False)):
            if scale.contains(y) and 0 <= z <= y:
                assert scale.contains(z)

    def test_grid_contains_endpoints(self):
        g = UNIT.grid()
        assert g[0] == 0.0 and g[-1] == 1.0
        ge = EXTENDED.grid()
        assert math.isinf(ge[-1])
        gn = NONNEG.grid()
        assert not math.isinf(gn[-1])

    def test_rejects_nonpositive_upper(self):
        with pytest.raises(DomainError):
            ValueScale(0.0, True)


class TestSpaceAndFn:
    def test_space_bounds(self):
        with pytest.raises(DomainError):
            FiniteSpace(0)
        with pytest.raises(DomainError):
            FiniteSpace(25)
        assert FiniteSpace(3).full == 0b111

    def test_fn_validates_scale(self):
        with pytest.raises(DomainError):
            Fn([0.5, 1.5], UNIT)
        f = Fn([0.5, 1.0], UNIT)
        assert f[1] == 1.0 and len(f) == 2

    def test_indicator(self):
        f = Fn.indicator(3, 0b101, 0.75)
        assert f.values == (0.75, 0.0, 0.75)

    def test_level_masks(self):
        vals = [0.5, 0.2, 0.8]
        assert level_mask_ge(vals, 0.5, 0b111) == 0b101
        assert level_mask_gt(vals, 0.5, 0b111) == 0b100
        assert level_mask_ge(vals, 0.5, 0b011) == 0b001

    def test_submask_iteration(self):
        subs = sorted(iter_submasks(0b101))
        assert subs == [0b000, 0b001, 0b100, 0b101]


class TestSubsetInfima:
    def test_against_bruteforce(self):
        vals = [0.4, 0.1, 0.7, 0.4]
        table = subset_infima(vals)
        for mask in range(1, 16):
            expect = min(vals[i] for i in range(4) if mask >> i & 1)
            assert table[mask] == expect
        assert math.isinf(table[0])

    def test_expand_masks(self):
        orig = expand_masks([1, 3])
        assert list(orig) == [0, 0b0010, 0b1000, 0b1010]


class TestRngFor:
    def test_deterministic_and_distinct(self):
        a = rng_for(7, "x", 1).random()
        b = rng_for(7, "x", 1).random()
        c = rng_for(7, "x", 2).random()
        assert a == b
        assert a != c


class TestSurvivalProfile:
    def test_counterexample_profile_pointwise(self):
        # 1 - 4 t^2 at t = 1/8 evaluates to 1 - 4/64 by hand
        prof = SurvivalProfile(UNIT, fn=lambda t: np.maximum(1.0 - 4.0 * t * t, 0.0))
        assert profile_eval(prof, 0.125) == 0.9375

    def test_value_at_zero_is_domain_measure(self):
        prof = SurvivalProfile(UNIT, fn=lambda t: np.maximum(1.0 - t, 0.0),
                               domain_measure=1.0)
        assert profile_eval(prof, 0.0) == prof.domain_measure

    def test_tabulated_step_uses_left_knot(self):
        prof = SurvivalProfile(UNIT, knots=[(0.0, 1.0), (0.5, 0.25), (1.0, 0.0)])
        assert profile_eval(prof, 0.3) == 1.0
        assert profile_eval(prof, 0.5) == 0.25
        assert profile_eval(prof, 0.7) == 0.25

    def test_rejects_increasing_profile(self):
        with pytest.raises(DomainError):
            SurvivalProfile(UNIT, fn=lambda t: np.asarray(t))

    def test_rejects_out_of_scale_level(self):
        prof = SurvivalProfile(UNIT, knots=[(0.0, 1.0)])
        with pytest.raises(DomainError):
            profile_eval(prof, 1.5)

    def test_nonincreasing_on_grid(self):
        prof = SurvivalProfile(UNIT, fn=lambda t: np.maximum(1.0 - t * t, 0.0))
        ts = np.linspace(0, 1, 101)
        gs = prof.evaluate(ts)
        assert (np.diff(gs) <= 1e-12).all()
