"""Metric functionals, axiom suites, the max-product norm, convergence
lemmas, the convergence-of-means bound, and the completeness probe."""

import math

import numpy as np
import pytest

from nonadd.core import EXTENDED, FiniteSpace, Fn, INF, NONNEG, UNIT, rng_for
from nonadd.integrals import lower_integral, sugeno_integral
from nonadd.measures import MonotoneMeasure, check_measure_property, generate_measure
from nonadd.metrics import (
    MetricSpec,
    cauchy_probe,
    check_convergence_lemmas,
    check_metric_axioms,
    check_shilkret_norm,
    find_triangle_violation,
    kyfan_classical,
    metric_eval,
    shilkret_norm,
    verify_mean_convergence,
)
from nonadd.operators import join, minimum, plain_sum, power_min, power_prod
from nonadd.results import DomainError, HypothesisError
from nonadd import sampling

SP2 = FiniteSpace(2)
MU2 = MonotoneMeasure.explicit(SP2, [0.0, 0.3, 0.6, 0.8])

ALL_SPECS = [MetricSpec("frechet"), MetricSpec("kyfan"),
             MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0),
             MetricSpec("d_op_p", power_prod(2.0, 1.0), 2.0),
             MetricSpec("d_op_p", power_min(0.5, 0.5), 0.5)]


class TestMetricEval:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: str(s.describe()))
    def test_identical_arguments_give_zero(self, spec):
        f = [0.5, -0.2]
        assert metric_eval(spec, f, f, MU2) == 0.0

    def test_kyfan_indicator(self):
        # |f - g| is an indicator of height a: the max-min integral is a ^ mu(A)
        f, g = [0.7, 0.0], [0.2, 0.0]
        assert metric_eval(MetricSpec("kyfan"), f, g, MU2) == min(0.5, MU2(0b01))

    def test_frechet_two_point_instance(self):
        # candidates 0, 0.2, 0.5: min(0 + 0.8, 0.2 + 0.3, 0.5 + 0) by hand
        f, g = [0.5, 0.2], [0.0, 0.0]
        assert metric_eval(MetricSpec("frechet"), f, g, MU2) == 0.5

    def test_frechet_matches_dense_grid(self):
        eps_grid = np.linspace(0, 8, 4001)
        for k in range(20):
            rng = rng_for(3, "frech", k)
            n = 2 + k % 5
            mu = sampling.subadditive_measure(5, k, n)
            f = sampling.signed_vector(rng, n)
            g = sampling.signed_vector(rng, n)
            exact = metric_eval(MetricSpec("frechet"), f, g, mu)
            diff = [abs(a - b) for a, b in zip(f, g)]
            full = (1 << n) - 1
            from nonadd.core import level_mask_gt
            dense = min(e + mu(level_mask_gt(diff, e, full)) for e in eps_grid)
            assert exact <= dense + 1e-12
            assert dense - exact <= 2.5e-3  # within one grid step

    def test_kyfan_three_way_agreement(self):
        for k in range(40):
            rng = rng_for(7, "threeway", k)
            n = 2 + k % 6
            mu = sampling.subadditive_measure(11, k, n)
            f = sampling.signed_vector(rng, n)
            g = sampling.signed_vector(rng, n)
            diff = [abs(a - b) for a, b in zip(f, g)]
            tol = max(1e-12, mu.tolerance())
            d_upper = metric_eval(MetricSpec("kyfan"), f, g, mu)
            d_lower = lower_integral(Fn(diff, EXTENDED), mu, join(), None, EXTENDED)
            d_classical = kyfan_classical(f, g, mu)
            assert abs(d_upper - d_lower) <= tol
            assert abs(d_upper - d_classical) <= tol


class TestMetricAxioms:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: str(s.describe()))
    def test_suite_passes_on_subadditive(self, spec):
        mu = sampling.subadditive_measure(13, 1, 4)
        res = check_metric_axioms(spec, mu, trials=120, seed=5)
        assert res.holds

    def test_null_support_identity_with_null_atom(self):
        mu = sampling.measure_with_null_atoms(3, 4)
        res = check_metric_axioms(MetricSpec("kyfan"), mu, trials=120, seed=6)
        assert res.holds

    def test_gate_rejects_large_second_exponent(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 2.0), 1.0)
        mu = sampling.subadditive_measure(17, 0, 3)
        with pytest.raises(HypothesisError):
            check_metric_axioms(spec, mu, trials=10)

    def test_gate_rejects_plain_min_at_small_exponent(self):
        spec = MetricSpec("d_op_p", minimum(), 0.5)
        mu = sampling.subadditive_measure(19, 0, 3)
        with pytest.raises(HypothesisError):
            check_metric_axioms(spec, mu, trials=10)

    def test_non_subadditive_measure_rejected_with_violation(self):
        mu, _ = sampling.non_subadditive_measure(7, 4)
        with pytest.raises(HypothesisError) as err:
            check_metric_axioms(MetricSpec("kyfan"), mu, trials=10)
        assert err.value.detail["triangle_violation"].holds

    def test_triangle_violation_search_replays(self):
        mu, _ = sampling.non_subadditive_measure(9, 5)
        res = find_triangle_violation(mu)
        assert res.holds
        w = res.detail["witness"]
        n = mu.space.n
        a = w["height"]
        f = [a * ((w["set_a"] >> i & 1) + (w["set_b"] >> i & 1)) for i in range(n)]
        mid = [a * (w["set_b"] >> i & 1) for i in range(n)]
        spec = MetricSpec(res.detail["metric"]["kind"]) \
            if res.detail["metric"]["kind"] != "d_op_p" \
            else MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        zero = [0.0] * n
        assert metric_eval(spec, f, zero, mu) > \
            metric_eval(spec, f, mid, mu) + metric_eval(spec, mid, zero, mu)

    def test_search_on_subadditive_reports_premise(self):
        mu = sampling.subadditive_measure(23, 2, 4)
        res = find_triangle_violation(mu)
        assert res.status == "premise-failed"


class TestShilkretNorm:
    def test_indicator_value(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(3), [0.25, 0.5, 1.0])
        f = [0.0, 0.8, 0.0]
        assert shilkret_norm(f, mu) == pytest.approx(0.8 * 0.5)

    def test_power_of_two_homogeneity_exact(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(3), [0.25, 0.5, 1.0])
        for k in range(20):
            rng = rng_for(29, "norm", k)
            f = sampling.signed_vector(rng, 3)
            assert shilkret_norm([2 * v for v in f], mu) == 2 * shilkret_norm(f, mu)

    def test_axiom_suite(self):
        mu = MonotoneMeasure.possibility(FiniteSpace(4), [0.25, 0.5, 0.75, 1.0])
        assert check_shilkret_norm(mu, trials=60, seed=1).holds

    def test_rejects_non_maxitive(self):
        mu = generate_measure(3, "non_maxitive", 4)
        with pytest.raises(HypothesisError):
            shilkret_norm([1.0] * 4, mu)


class TestConvergenceLemmas:
    def _measure(self):
        return sampling.measure_with_null_atoms(5, 4)

    def test_scaling_sequence_converges(self):
        mu = self._measure()
        f = Fn([2.0, 1.0, 3.0, 0.5], NONNEG)
        seq = [Fn([v * (1 - 1 / (k + 1)) for v in f.values], NONNEG)
               for k in range(1, 40)]
        res = check_convergence_lemmas(minimum(), mu, seq, f, "monotone",
                                       tol=max(f.values) / 40 + 1e-12)
        assert res.holds

    def test_null_set_disagreement_invisible(self):
        mu = self._measure()
        null_atom = next(i for i in range(4) if mu(1 << i) == 0.0)
        f = Fn([1.0, 2.0, 0.5, 1.5], NONNEG)
        vals = list(f.values)
        vals[null_atom] = 9.0
        seq = [Fn(vals, NONNEG)] * 5
        res = check_convergence_lemmas(minimum(), mu, seq, f, "monotone")
        assert res.holds  # exact equality through null-additivity

    def test_non_monotone_sequence_rejected(self):
        mu = self._measure()
        f = Fn([1.0, 1.0, 1.0, 1.0], NONNEG)
        seq = [f, Fn([0.5, 1.0, 1.0, 1.0], NONNEG)]
        with pytest.raises(DomainError):
            check_convergence_lemmas(minimum(), mu, seq, f, "monotone")

    def test_fatou_direction_never_reversed(self):
        mu = self._measure()
        base = Fn([1.0, 2.0, 0.5, 1.5], NONNEG)
        osc = [Fn([v * (0.5 if k % 2 else 1.0) for v in base.values], NONNEG)
               for k in range(6)]
        low = Fn([v * 0.5 for v in base.values], NONNEG)
        res = check_convergence_lemmas(minimum(), mu, osc, low, "fatou")
        assert res.holds

    def test_requires_null_additive(self):
        # a planted violation of null-additivity blocks the lemma
        tab = [0.0, 0.0, 0.5, 0.9]
        mu = MonotoneMeasure.explicit(SP2, tab, rounding=True)
        f = Fn([1.0, 1.0], NONNEG)
        with pytest.raises(HypothesisError):
            check_convergence_lemmas(minimum(), mu, [f], f, "monotone")


class TestMeanConvergence:
    def test_stationary_sequence(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        mu = sampling.subadditive_measure(31, 0, 3)
        f = Fn([0.5, 1.0, 0.25], NONNEG)
        res = verify_mean_convergence(spec, mu, [f, f, f], f)
        assert res.holds and res.margin >= 0

    def test_uniform_bump_sequence(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        mu = sampling.subadditive_measure(31, 1, 3)
        f = Fn([0.5, 1.0, 0.25], NONNEG)
        seq = [Fn([v + 1.0 / k for v in f.values], NONNEG) for k in range(1, 9)]
        res = verify_mean_convergence(spec, mu, seq, f)
        assert res.holds

    def test_premise_gate(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        mu = sampling.subadditive_measure(31, 2, 3)
        f = Fn([0.5, 1.0, 0.25], NONNEG)
        diverging = [f, Fn([v + 3.0 for v in f.values], NONNEG)]
        res = verify_mean_convergence(spec, mu, diverging, f)
        assert res.status == "premise-failed"


class TestCauchyProbe:
    def test_generated_sequences_pass(self):
        for k in range(10):
            p = (0.5, 1.0, 2.0)[k % 3]
            spec = MetricSpec("d_op_p", power_min(p, 1.0), p)
            mu = sampling.subadditive_measure(37, k, 4)
            res = cauchy_probe(spec, mu, seed=k, levels=7)
            assert res.holds and res.status == "checked"

    def test_stationary_sequence_trivially_cauchy(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        mu = sampling.subadditive_measure(41, 0, 3)
        f = Fn([0.5, 0.25, 1.0], NONNEG)
        res = cauchy_probe(spec, mu, sequence=[f] * 6)
        assert res.holds

    def test_decay_premise_gate(self):
        spec = MetricSpec("d_op_p", power_min(1.0, 1.0), 1.0)
        mu = sampling.subadditive_measure(41, 1, 3)
        f = Fn([0.5, 0.25, 1.0], NONNEG)
        g = Fn([3.5, 3.25, 4.0], NONNEG)
        res = cauchy_probe(spec, mu, sequence=[f, g, f, g, f])
        assert res.status == "premise-failed"
