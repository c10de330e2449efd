import math

import numpy as np
import pytest

from rhalton.estimator import (
    EfficiencyReport,
    ReplicationPlan,
    efficiency_experiment,
    efficiency_with_bounds,
    mc_baseline,
    mse_estimate,
    pool_values,
    replicate_estimate,
)
from rhalton.integrands import IntegrandSpec, cached_moments, sumsq_true_mean


def test_pool_values_small_cases():
    est = pool_values([1.0, 2.0, 3.0])
    assert est.mu == 2.0
    assert est.variance == pytest.approx(1 / 3, rel=1e-15)
    assert est.se == pytest.approx(math.sqrt(1 / 3), rel=1e-15)
    assert est.per_replicate == (1.0, 2.0, 3.0)
    flat = pool_values([5.0, 5.0, 5.0, 5.0])
    assert flat.variance == 0.0 and flat.se == 0.0


def test_pool_values_needs_two_flat_replicates():
    with pytest.raises(ValueError):
        pool_values([1.0])
    with pytest.raises(ValueError):
        pool_values([[1.0, 2.0]])


def test_mse_estimate_small_cases():
    e = 0.25
    mse, var = mse_estimate([1.0 + e, 1.0 - e], true_mu=1.0)
    assert mse == e * e and var == 0.0
    mse, var = mse_estimate([0.0, 2.0], true_mu=0.0)
    assert mse == 2.0 and var == 4.0


def test_efficiency_point_values():
    rep = efficiency_with_bounds(mse_hat=1e-4, mse_variance=0.0, sigma2=1.0, n=100)
    assert rep.efficiency == rep.eff_lower == rep.eff_upper == 100.0
    assert not rep.upper_unbounded


def test_efficiency_bounds_scale_with_mse_error():
    # 2 standard errors equal to mse/2 move the denominators to
    # 1.5*mse and 0.5*mse
    mse = 4e-3
    rep = efficiency_with_bounds(mse, (mse / 4) ** 2, sigma2=1.0, n=50)
    assert rep.eff_lower == pytest.approx(rep.efficiency * 2 / 3, rel=1e-12)
    assert rep.eff_upper == pytest.approx(rep.efficiency * 2, rel=1e-12)


def test_efficiency_upper_bound_goes_unbounded():
    mse = 1e-3
    rep = efficiency_with_bounds(mse, (mse / 2) ** 2, sigma2=1.0, n=10)
    assert rep.upper_unbounded and rep.eff_upper == math.inf
    assert rep.eff_lower < rep.efficiency < math.inf


def test_zero_mse_reports_infinite_efficiency():
    rep = efficiency_with_bounds(0.0, 0.0, sigma2=1.0, n=10)
    assert rep.efficiency == math.inf
    assert rep.eff_lower == math.inf and rep.eff_upper == math.inf
    assert rep.upper_unbounded


def test_efficiency_input_validation():
    with pytest.raises(ValueError):
        efficiency_with_bounds(-1e-3, 0.0, 1.0, 10)
    with pytest.raises(ValueError):
        efficiency_with_bounds(1e-3, 0.0, 0.0, 10)
    with pytest.raises(ValueError):
        efficiency_with_bounds(1e-3, 0.0, 1.0, 0)


def test_replicate_seed_rule():
    plan = ReplicationPlan(reps=5, n=10, d=3, base_seed=10)
    assert plan.stride == 1000
    assert plan.replicate_seed(1) == 1010
    assert plan.replicate_seed(3) == 3010
    wide = ReplicationPlan(reps=2, n=10, d=1500, base_seed=0)
    assert wide.stride == 1500
    wrap = ReplicationPlan(reps=2, n=10, d=3, base_seed=2**64 - 5)
    assert wrap.replicate_seed(1) == 995
    with pytest.raises(ValueError):
        plan.replicate_seed(0)
    with pytest.raises(ValueError):
        plan.replicate_seed(6)


def test_plan_validation():
    with pytest.raises(ValueError, match="stride"):
        ReplicationPlan(reps=3, n=10, d=20, base_seed=0, stride=10)
    with pytest.raises(ValueError, match="replicates"):
        ReplicationPlan(reps=1, n=10, d=2, base_seed=0)
    with pytest.raises(ValueError):
        ReplicationPlan(reps=3, n=0, d=2, base_seed=0)
    with pytest.raises(ValueError):
        ReplicationPlan(reps=3, n=10, d=2, base_seed=2**64)


def test_replicate_estimate_checks_dimensions():
    plan = ReplicationPlan(reps=3, n=10, d=2, base_seed=0)
    with pytest.raises(ValueError, match="d="):
        replicate_estimate(plan, IntegrandSpec("g1", 3))
    with pytest.raises(ValueError, match="d="):
        mc_baseline(plan, IntegrandSpec("g1", 3), rng_seed=0)


def test_estimates_are_reproducible():
    plan = ReplicationPlan(reps=4, n=200, d=3, base_seed=17)
    spec = IntegrandSpec("g1", 3)
    assert replicate_estimate(plan, spec) == replicate_estimate(plan, spec)
    assert mc_baseline(plan, spec, 5) == mc_baseline(plan, spec, 5)
    assert mc_baseline(plan, spec, 5) != mc_baseline(plan, spec, 6)


def test_worker_count_does_not_change_bits(monkeypatch):
    plan = ReplicationPlan(reps=6, n=500, d=4, base_seed=23)
    spec = IntegrandSpec("g3", 4)
    serial = replicate_estimate(plan, spec)
    monkeypatch.setenv("RHALTON_MAX_WORKERS", "4")
    threaded = replicate_estimate(plan, spec)
    assert serial.per_replicate == threaded.per_replicate
    monkeypatch.setenv("RHALTON_MAX_WORKERS", "abc")
    with pytest.raises(ValueError, match="RHALTON_MAX_WORKERS"):
        replicate_estimate(plan, spec)


def test_smooth_profile_beats_monte_carlo_comfortably():
    res = efficiency_experiment("g1", d=2, n=10**4, reps=50, base_seed=31)
    assert res.report is not None
    assert res.report.efficiency >= 50
    assert res.report.eff_lower > 1.0


def test_sumsq_experiment_has_mse_but_no_report():
    res = efficiency_experiment("sumsq", d=5, n=2000, reps=8, base_seed=50_000)
    assert res.report is None
    assert res.true_mu == sumsq_true_mean(5)
    assert res.mse_hat >= 0.0


def test_scrambled_points_tighter_than_pseudorandom_on_sumsq():
    wins = 0
    mu_ok = 0
    spec = IntegrandSpec("sumsq", 5)
    for m in range(20):
        plan = ReplicationPlan(reps=8, n=2000, d=5, base_seed=50_000 + 1009 * m)
        rq = replicate_estimate(plan, spec)
        mc = mc_baseline(plan, spec, rng_seed=60_000 + m)
        wins += int(rq.se < mc.se)
        mu_ok += int(abs(mc.mu - sumsq_true_mean(5)) <= 4 * mc.se)
    assert wins >= 18
    assert mu_ok >= 19


def test_mc_baseline_variance_scales_like_sigma2_over_n():
    plan = ReplicationPlan(reps=500, n=100, d=1, base_seed=0)
    mc = mc_baseline(plan, IntegrandSpec("g2", 1), rng_seed=314159)
    sigma2 = cached_moments("g2").sigma2
    # est.variance is the variance of the pooled mean: sigma2 / (n R)
    ratio = plan.n * plan.reps * mc.variance / sigma2
    assert ratio == pytest.approx(1.0, abs=0.10)


def test_mc_efficiency_brackets_one():
    res = efficiency_experiment(
        "g1", d=3, n=100, reps=200, base_seed=1, use_mc=True, mc_seed=8675309
    )
    rep = res.report
    assert rep.eff_lower <= 1.0 <= rep.eff_upper
    assert 0.5 < rep.efficiency < 2.0


def test_replicated_errors_are_centered_and_calibrated():
    truth = cached_moments("g3").mu
    zs = []
    for k in range(60):
        plan = ReplicationPlan(reps=8, n=32, d=2, base_seed=1234 + 101 * k)
        est = replicate_estimate(plan, IntegrandSpec("g3", 2))
        zs.append((est.mu - truth) / est.se)
    zs = np.array(zs)
    assert abs(zs.mean()) <= 0.5
    assert np.mean(np.abs(zs) > 2.0) <= 0.25
