"""Theorem verifiers: worked instances, hypothesis gates, both directions,
and the exact counterexample reproduction."""

import math

import pytest

from nonadd.core import EXTENDED, FiniteSpace, Fn, INF, NONNEG, UNIT, rng_for
from nonadd.integrals import shilkret_integral, sugeno_integral, upper_integral
from nonadd.measures import MonotoneMeasure, check_measure_property, generate_measure
from nonadd.operators import (
    bounded_sum,
    join,
    lukasiewicz,
    minimum,
    one_minus,
    phi_identity,
    phi_power,
    plain_sum,
    power_product,
    prob_sum,
    product,
    reciprocal,
)
from nonadd.results import CheckResult, DomainError, HypothesisError
from nonadd.theorems import (
    MHOperators,
    reproduce_counterexample,
    verify_comonotone_subadditive,
    verify_dual_minkowski,
    verify_lower_mh,
    verify_seminorm_minkowski,
    verify_shilkret_maxitive,
    verify_subadditive_minkowski,
    verify_sugeno_subadditive,
    verify_sugeno_subadditive_boundary,
    verify_upper_mh,
)
from nonadd import sampling

MIN, PROD, JOIN, SUM = minimum(), product(), join(), plain_sum()
SL, BSUM, PSUM = lukasiewicz(), bounded_sum(), prob_sum()
ID3 = (phi_identity(),) * 3


class TestCounterexample:
    def test_exact_values(self):
        rep = reproduce_counterexample()
        assert rep.lhs == 0.25
        assert rep.rhs_each == 0.0625
        assert rep.rhs_sum == 0.125
        assert rep.violated
        # the closed forms are the dyadic rationals 1/4, 1/16, 1/8 exactly
        assert rep.lhs == 1.0 / 4.0
        assert rep.rhs_each == 1.0 / 16.0
        assert rep.rhs_sum == 1.0 / 8.0

    def test_grid_route_within_tolerance(self):
        rep = reproduce_counterexample(1e-4)
        assert rep.lhs_grid.value == pytest.approx(0.25, abs=1e-3)
        assert rep.rhs_each_grid.value == pytest.approx(0.0625, abs=1e-3)
        assert rep.lhs_grid.error_bound <= 1e-3

    def test_premise_holds_and_power_condition_fails(self):
        rep = reproduce_counterexample()
        assert rep.premise.holds
        assert not rep.power_condition.holds


class TestUpperMH:
    def test_product_power_instance_holds(self):
        ops = MHOperators(PSUM, PSUM, (PROD,) * 3,
                          (phi_power(1.0), phi_power(2.0), phi_power(2.0)))
        for k in range(25):
            rng = rng_for(7, "upper-ineq", k)
            n = 2 + k % 5
            mu = sampling.monotone_measure(11, k, n)
            f, g = sampling.comonotone_pair(rng, n, UNIT)
            res = verify_upper_mh(ops, mu, f, g)
            assert res.holds and res.status == "checked"

    def test_condition_failed_status(self):
        ops = MHOperators(PSUM, PSUM, (PROD,) * 3,
                          (phi_power(2.0), phi_power(1.0), phi_power(2.0)))
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.25, 0.75])
        f, g = Fn([0.5, 1.0]), Fn([0.25, 0.75])
        res = verify_upper_mh(ops, mu, f, g)
        assert res.status == "condition-failed" and not res.holds

    def test_necessity_direction_confirms_violations(self):
        ops = MHOperators(PSUM, PSUM, (PROD,) * 3,
                          (phi_power(2.0), phi_power(1.0), phi_power(2.0)))
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.25, 0.75])
        f, g = Fn([0.5, 1.0]), Fn([0.25, 0.75])
        res = verify_upper_mh(ops, mu, f, g, direction="necessity")
        assert res.holds  # every condition failure produced an inequality failure
        assert res.detail["necessity_instances"] > 0
        assert res.detail["necessity_violations_confirmed"] == \
            res.detail["necessity_instances"]

    def test_indicator_equality_case(self):
        ops = MHOperators(MIN, MIN, (MIN,) * 3, ID3)
        mu = MonotoneMeasure.possibility(FiniteSpace(3), [0.25, 0.5, 1.0])
        f = Fn.indicator(3, 0b011, 0.5)
        g = Fn.indicator(3, 0b011, 0.75)
        res = verify_upper_mh(ops, mu, f, g)
        assert res.holds

    def test_association_gate(self):
        ops = MHOperators(SUM, SUM, (MIN,) * 3, ID3)
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.5, 1.0])
        f, g = Fn([1.0, 0.0]), Fn([0.0, 1.0])  # not comonotone, not sum-associated
        with pytest.raises(HypothesisError):
            verify_upper_mh(ops, mu, f, g)

    def test_flag_gate(self):
        # a combiner without declared monotonicity is rejected outright
        from nonadd.operators import from_callable
        raw = from_callable("raw", lambda a, b: a, [])
        ops = MHOperators(MIN, raw, (MIN,) * 3, ID3)
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.5, 1.0])
        with pytest.raises(HypothesisError):
            verify_upper_mh(ops, mu, Fn([0.5, 0.5]), Fn([0.25, 1.0]))


class TestSeminormMinkowski:
    def test_min_join_power_one(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(3), [0.25, 0.5, 1.0])
        for k in range(10):
            rng = rng_for(13, "semi", k)
            f, g = sampling.comonotone_pair(rng, 3, UNIT)
            res = verify_seminorm_minkowski(MIN, JOIN, 1.0, mu, f, g)
            assert res.holds

    def test_counterexample_tuple_condition_fails(self):
        # heights 0.5 against the realized measure value 0.75 reproduce the
        # refuted tuple's violating scalar triple on a finite space
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.75, 1.0])
        f, g = Fn([0.5, 0.5]), Fn([0.5, 0.5])
        res = verify_seminorm_minkowski(SL, BSUM, 1.0, mu, f, g)
        assert res.status == "condition-failed"
        w = res.witness
        assert max(min(w["a"] + w["b"], 1.0) + w["c"] - 1.0, 0.0) > \
            min(max(w["a"] + w["c"] - 1, 0.0) + max(w["b"] + w["c"] - 1, 0.0), 1.0)

    def test_same_function_reduces_to_monotonicity(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.5, 1.0])
        f = Fn([0.25, 0.5])
        res = verify_seminorm_minkowski(MIN, JOIN, 2.0, mu, f, f)
        assert res.holds

    def test_normalization_readings(self):
        small = MonotoneMeasure.possibility(FiniteSpace(2), [0.25, 0.5])
        f = Fn([0.25, 0.5])
        with pytest.raises(HypothesisError):
            verify_seminorm_minkowski(MIN, JOIN, 1.0, small, f, f,
                                      normalization="total_one")
        res = verify_seminorm_minkowski(MIN, JOIN, 1.0, small, f, f,
                                        normalization="values_unit")
        assert res.holds
        with pytest.raises(DomainError):
            verify_seminorm_minkowski(MIN, JOIN, 1.0, small, f, f,
                                      normalization="bogus")


class TestComonotoneSubadditive:
    @pytest.mark.parametrize("op", [MIN, PROD], ids=lambda o: o.name)
    def test_classical_operators_subadditive(self, op):
        for k in range(20):
            rng = rng_for(17, "como-sub", k)
            n = 2 + k % 5
            mu = sampling.monotone_measure(19, k, n)
            f, g = sampling.comonotone_pair(rng, n, UNIT, max_sum=1.0)
            res = verify_comonotone_subadditive(op, mu, f, g)
            assert res.holds

    def test_nilpotent_operator_fails_condition_and_instance(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.4, 0.8])
        f = Fn([0.5, 0.5])
        g = Fn([0.5, 0.5])
        res = verify_comonotone_subadditive(SL, mu, f, g)
        assert res.status == "condition-failed"
        # and the instance itself breaks subadditivity: by hand,
        # SL-integral of the constant 1 is mu(X), of the constant 0.5 is
        # (mu(X) - 0.5)+, and 0.8 > 2 * 0.3
        lhs = upper_integral(Fn([1.0, 1.0]), mu, SL)
        rhs = 2 * upper_integral(f, mu, SL)
        assert lhs == pytest.approx(0.8) and rhs == pytest.approx(0.6)
        assert lhs > rhs

    def test_sum_leaving_scale_rejected(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.4, 0.8])
        f = Fn([0.75, 0.75])
        with pytest.raises(HypothesisError):
            verify_comonotone_subadditive(MIN, mu, f, f)

    def test_non_comonotone_rejected(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.4, 0.8])
        with pytest.raises(HypothesisError):
            verify_comonotone_subadditive(MIN, mu, Fn([0.5, 0.0]), Fn([0.0, 0.5]))

    def test_dual_condition_reporting(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.4, 0.8])
        f, g = Fn([0.25, 0.5]), Fn([0.125, 0.25])
        res = verify_comonotone_subadditive(MIN, mu, f, g)
        assert "condition_grid" in res.detail and "condition_realized" in res.detail
        assert res.detail["condition_realized"].mode == "explicit"


class TestSubadditiveMinkowski:
    def test_min_corollary(self):
        for k in range(15):
            rng = rng_for(23, "minksub-min", k)
            n = 2 + k % 5
            mu = sampling.subadditive_measure(29, k, n)
            f = sampling.signed_vector(rng, n)
            g = sampling.signed_vector(rng, n)
            res = verify_subadditive_minkowski(MIN, 1.0, 1.0, 1.0, mu, f, g)
            assert res.holds

    def test_product_corollary_power_two(self):
        for k in range(15):
            rng = rng_for(31, "minksub-prod", k)
            n = 2 + k % 5
            mu = sampling.subadditive_measure(37, k, n)
            f = sampling.signed_vector(rng, n)
            g = sampling.signed_vector(rng, n)
            res = verify_subadditive_minkowski(PROD, 1.0, 1.0, 2.0, mu, f, g)
            assert res.holds

    def test_modified_product_exponent_relation(self):
        # (ab)^q with p = 1/(1-q) turns the root exponent into 1/p exactly
        q = 0.5
        p = 1.0 / (1.0 - q)
        assert 1.0 / (p * q + 1.0) == pytest.approx(1.0 / p)
        op = power_product(q)
        for k in range(15):
            rng = rng_for(41, "minksub-q", k)
            n = 2 + k % 4
            mu = sampling.subadditive_measure(43, k, n)
            f = sampling.signed_vector(rng, n, span=1.0)
            g = sampling.signed_vector(rng, n, span=1.0)
            res = verify_subadditive_minkowski(op, q, 1.0, p, mu, f, g)
            assert res.holds

    def test_requires_subadditive_measure(self):
        mu, _ = sampling.non_subadditive_measure(3, 4)
        with pytest.raises(HypothesisError):
            verify_subadditive_minkowski(MIN, 1.0, 1.0, 1.0, mu, [0.5] * 4, [0.25] * 4)

    def test_noncompliant_operator_reports_condition(self):
        res = verify_subadditive_minkowski(MIN, 0.5, 1.0, 0.5,
                                           sampling.subadditive_measure(1, 0, 3),
                                           [0.5, 0.25, 0.0], [0.25, 0.5, 0.125])
        assert res.status == "condition-failed"


class TestShilkretMaxitive:
    def test_possibility_forward(self):
        for seed in range(20):
            mu = generate_measure(seed, "possibility", 5)
            res = verify_shilkret_maxitive(mu, trials=6, seed=seed)
            assert res.holds
            assert res.detail["maxitive"].holds

    def test_backward_witness_violates_strictly(self):
        for seed in range(20):
            mu = generate_measure(seed, "non_maxitive", 5)
            res = verify_shilkret_maxitive(mu, trials=6, seed=seed)
            assert res.holds
            assert res.margin > 1e-9
            # the witness functions replay the violation through the integrals
            lam = res.detail["witness_pair"]["lambda"]
            a_set = res.detail["witness_pair"]["set_a"]
            b_set = res.detail["witness_pair"]["set_b"]
            f = Fn([1.0 if a_set >> i & 1 else (lam if b_set >> i & 1 else 0.0)
                    for i in range(5)], NONNEG)
            g = Fn([(1.0 - lam) if b_set >> i & 1 else 0.0 for i in range(5)], NONNEG)
            s = Fn([x + y for x, y in zip(f.values, g.values)], NONNEG)
            assert shilkret_integral(s, mu) > \
                shilkret_integral(f, mu) + shilkret_integral(g, mu)

    def test_additive_two_atoms_not_maxitive(self):
        mu = MonotoneMeasure.explicit(FiniteSpace(2), [0.0, 0.5, 0.5, 1.0],
                                      rounding=True)
        res = verify_shilkret_maxitive(mu, trials=4, seed=0)
        assert res.holds and not res.detail["maxitive"].holds


class TestSugenoSubadditive:
    def test_forward_and_recovery_on_subadditive(self):
        for k in range(20):
            mu = sampling.subadditive_measure(47, k, 2 + k % 6)
            res = verify_sugeno_subadditive(mu, trials=5, seed=k)
            assert res.holds
            assert res.detail["indicator_recovery_matches"] is True

    def test_planted_violation_located(self):
        mu, (a_set, b_set) = sampling.non_subadditive_measure(11, 5)
        res = verify_sugeno_subadditive(mu, trials=4, seed=1)
        assert res.holds  # equivalence holds: not subadditive and recovery agrees
        assert not res.detail["subadditive"].holds

    def test_boundary_probe(self):
        res = verify_sugeno_subadditive_boundary()
        assert res.holds
        assert res.detail["lhs"] > res.detail["rhs"]


class TestLowerMH:
    def test_bounded_sum_family(self):
        mu = generate_measure(3, "non_maxitive", 4)  # additive, submodular
        ops = MHOperators(BSUM, BSUM, (JOIN,) * 3, ID3)
        for k in range(10):
            rng = rng_for(53, "lower-bsum", k)
            f, g = sampling.comonotone_pair(rng, 4, UNIT)
            res = verify_lower_mh(ops, PSUM, mu, f, g)
            assert res.holds

    def test_plain_sum_family(self):
        ops = MHOperators(SUM, SUM, (JOIN,) * 3, ID3)
        for k in range(10):
            rng = rng_for(59, "lower-sum", k)
            n = 2 + k % 5
            mu = sampling.subadditive_measure(61, k, n)
            f = sampling.random_fn(rng, n, EXTENDED)
            g = sampling.random_fn(rng, n, EXTENDED)
            res = verify_lower_mh(ops, SUM, mu, f, g)
            assert res.holds

    def test_relation_gate(self):
        mu = generate_measure(5, "non_maxitive", 4)
        ops = MHOperators(SUM, SUM, (JOIN,) * 3, ID3)
        f = Fn.indicator(4, 0b0011, 1.0, EXTENDED)
        g = Fn.indicator(4, 0b1100, 1.0, EXTENDED)
        # an additive measure is not maxitive, so the join combiner fails
        with pytest.raises(HypothesisError):
            verify_lower_mh(ops, JOIN, mu, f, g)


class TestDualMinkowski:
    def test_harmonic_instance(self):
        mu = MonotoneMeasure.explicit(FiniteSpace(3),
                                      [0, 0.5, 1.0, 1.25, 2.0, 2.25, 2.5, 3.0],
                                      rounding=True)
        f = Fn([0.5, 1.0, 2.0], EXTENDED)
        g = Fn([0.25, 1.5, 3.0], EXTENDED)
        res = verify_dual_minkowski("single", SUM, SUM, reciprocal(), mu, f, g)
        assert res.holds

    def test_unit_scale_single(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(3), [0.25, 0.5, 1.0])
        for k in range(10):
            rng = rng_for(67, "dual-single", k)
            f, g = sampling.comonotone_pair(rng, 3, UNIT)
            res = verify_dual_minkowski("single", JOIN, BSUM, one_minus(), mu, f, g)
            assert res.holds

    def test_constant_equality_case(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.5, 1.0])
        f = Fn([0.5, 0.5])
        res = verify_dual_minkowski("single", JOIN, BSUM, one_minus(), mu, f, f)
        assert res.holds

    def test_top_absorption_gate(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(2), [0.5, 1.0])
        f = Fn([0.5, 0.5])
        with pytest.raises(HypothesisError):
            verify_dual_minkowski("single", JOIN, PROD, one_minus(), mu, f, f)

    def test_reciprocal_pair_instance(self):
        mu = MonotoneMeasure.explicit(FiniteSpace(2), [0, 0, 2.0, INF],
                                      rounding=True)
        f = Fn([2.0, 0.5], EXTENDED)
        g = Fn([1.0, 0.0], EXTENDED)
        res = verify_dual_minkowski("pair", SUM, MIN, reciprocal(), mu, f, g,
                                    boxplus=SUM)
        assert res.holds
