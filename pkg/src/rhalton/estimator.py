"""Replicated estimation on scrambled Halton blocks.

One replicate is the sample mean of the integrand over an n-by-d block;
R independent replicates come from shifting the single seed by a stride
of at least d (so no column seed is shared between replicates), and the
spread of the replicate means prices the error of their average:

    mu_hat  = mean of the R replicate means
    var_hat = sum (mu_hat_r - mu_hat)^2 / (R (R - 1))

When the true mean is known, the same replicate means grade accuracy:
MSE_hat averages the squared errors about the truth, its own sampling
variance is the sample variance of those squared errors over R, and
efficiency compares plain Monte Carlo's variance-per-point sigma^2/n
against MSE_hat.  Efficiency bounds re-divide by MSE_hat two standard
errors up and down; when the lower denominator crosses zero the upper
bound is reported as infinite rather than clipped.

The Monte Carlo baseline runs the identical pipeline with pseudorandom
points from counter-keyed Philox streams, one key per replicate, so a
whole comparison study replays from bare integers.  Replicates are
independent pure functions of their seeds; RHALTON_MAX_WORKERS (default
1) caps the worker threads used to evaluate them, and the output bits
do not depend on the schedule.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .generator import BlockRequest, SeedSpec, rhalton
from .integrands import G_KINDS, IntegrandSpec, cached_moments, evaluate, true_mean

_SEED_BOUND = 2**64


def _worker_count() -> int:
    raw = os.environ.get("RHALTON_MAX_WORKERS", "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"RHALTON_MAX_WORKERS must be an integer, got {raw!r}")
    return max(1, workers)


def _map_ordered(fn, items):
    items = list(items)
    workers = min(_worker_count(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class ReplicationPlan:
    """R replicates of an n-point, d-column block from one base seed.

    Replicate r (1-based) uses the single seed base_seed + r * stride,
    wrapping modulo 2**64.  The stride defaults to max(d, 1000) and must
    be at least d, which keeps the column-seed ranges of different
    replicates disjoint.
    """

    reps: int
    n: int
    d: int
    base_seed: int
    stride: int | None = None

    def __post_init__(self):
        if self.reps < 2:
            raise ValueError(f"need at least 2 replicates for a variance, got {self.reps}")
        if self.n < 1 or self.d < 1:
            raise ValueError(f"block must be nonempty, got n={self.n}, d={self.d}")
        if not 0 <= self.base_seed < _SEED_BOUND:
            raise ValueError(f"base seed must be in [0, 2**64), got {self.base_seed}")
        if self.stride is None:
            object.__setattr__(self, "stride", max(self.d, 1000))
        if self.stride < self.d:
            raise ValueError(
                f"stride {self.stride} < d {self.d} would share column seeds "
                f"between replicates"
            )

    def replicate_seed(self, r: int) -> int:
        if not 1 <= r <= self.reps:
            raise ValueError(f"replicate index must be in [1, {self.reps}], got {r}")
        return (self.base_seed + r * self.stride) % _SEED_BOUND


@dataclass(frozen=True)
class ReplicatedEstimate:
    per_replicate: tuple[float, ...]
    mu: float
    variance: float
    se: float


def pool_values(values) -> ReplicatedEstimate:
    """Average replicate means and estimate the variance of that average."""
    vals = np.asarray(values, dtype=np.float64)
    if vals.ndim != 1 or len(vals) < 2:
        raise ValueError(f"need a flat list of >= 2 replicate means, got shape {vals.shape}")
    mu = float(vals.mean())
    r = len(vals)
    variance = float(((vals - mu) ** 2).sum() / (r * (r - 1)))
    return ReplicatedEstimate(
        per_replicate=tuple(float(v) for v in vals),
        mu=mu,
        variance=variance,
        se=math.sqrt(variance),
    )


def replicate_estimate(plan: ReplicationPlan, spec: IntegrandSpec) -> ReplicatedEstimate:
    if spec.d != plan.d:
        raise ValueError(f"plan has d={plan.d} but the integrand expects d={spec.d}")

    def one(seed: int) -> float:
        block = rhalton(BlockRequest(n=plan.n, d=plan.d, seeds=SeedSpec.from_single(seed)))
        return float(evaluate(spec, block).mean())

    seeds = [plan.replicate_seed(r) for r in range(1, plan.reps + 1)]
    return pool_values(_map_ordered(one, seeds))


def mc_baseline(plan: ReplicationPlan, spec: IntegrandSpec, rng_seed: int) -> ReplicatedEstimate:
    """Same pipeline, pseudorandom points: Philox keyed by (rng_seed, r)."""
    if spec.d != plan.d:
        raise ValueError(f"plan has d={plan.d} but the integrand expects d={spec.d}")
    if not 0 <= rng_seed < _SEED_BOUND:
        raise ValueError(f"rng seed must be in [0, 2**64), got {rng_seed}")

    def one(r: int) -> float:
        rng = np.random.Generator(np.random.Philox(key=[rng_seed, r]))
        return float(evaluate(spec, rng.random((plan.n, plan.d))).mean())

    return pool_values(_map_ordered(one, range(1, plan.reps + 1)))


def mse_estimate(values, true_mu: float) -> tuple[float, float]:
    """Mean squared error about a known truth, plus its sampling variance.

    Returns (mse_hat, mse_variance) where mse_variance is the sample
    variance of the squared errors divided by R, i.e. the variance of
    mse_hat itself.
    """
    vals = np.asarray(values, dtype=np.float64)
    if vals.ndim != 1 or len(vals) < 2:
        raise ValueError(f"need a flat list of >= 2 replicate means, got shape {vals.shape}")
    sq = (vals - true_mu) ** 2
    r = len(sq)
    return float(sq.mean()), float(sq.var(ddof=1) / r)


@dataclass(frozen=True)
class EfficiencyReport:
    mse_hat: float
    mse_variance: float
    efficiency: float
    eff_lower: float
    eff_upper: float
    upper_unbounded: bool = False


def efficiency_with_bounds(
    mse_hat: float, mse_variance: float, sigma2: float, n: int
) -> EfficiencyReport:
    """(sigma2/n) / MSE_hat with denominators moved 2 standard errors.

    mse_variance must already be the variance of mse_hat (as returned
    by mse_estimate), so one standard error is sqrt(mse_variance).  A
    zero MSE yields an infinite efficiency rather than an error, and a
    lower denominator at or below zero marks the upper bound infinite.
    """
    if mse_hat < 0 or mse_variance < 0:
        raise ValueError("mse_hat and mse_variance must be nonnegative")
    if sigma2 <= 0 or n < 1:
        raise ValueError(f"need sigma2 > 0 and n >= 1, got sigma2={sigma2}, n={n}")
    ideal = sigma2 / n
    half = 2.0 * math.sqrt(mse_variance)
    efficiency = ideal / mse_hat if mse_hat > 0 else math.inf
    eff_lower = ideal / (mse_hat + half) if mse_hat + half > 0 else math.inf
    unbounded = mse_hat - half <= 0
    eff_upper = math.inf if unbounded else ideal / (mse_hat - half)
    return EfficiencyReport(
        mse_hat=mse_hat,
        mse_variance=mse_variance,
        efficiency=efficiency,
        eff_lower=eff_lower,
        eff_upper=eff_upper,
        upper_unbounded=unbounded,
    )


@dataclass(frozen=True)
class ExperimentResult:
    estimate: ReplicatedEstimate
    true_mu: float
    mse_hat: float
    mse_variance: float
    report: EfficiencyReport | None


def efficiency_experiment(
    kind: str,
    d: int,
    n: int,
    reps: int,
    base_seed: int,
    stride: int | None = None,
    use_mc: bool = False,
    mc_seed: int | None = None,
) -> ExperimentResult:
    """Run one replicated study and grade it against the known mean.

    The efficiency report needs a reference variance, so it is filled
    only for the profile integrands; sumsq still gets an MSE from its
    closed-form mean.
    """
    spec = IntegrandSpec(kind, d)
    plan = ReplicationPlan(reps=reps, n=n, d=d, base_seed=base_seed, stride=stride)
    if use_mc:
        estimate = mc_baseline(plan, spec, base_seed if mc_seed is None else mc_seed)
    else:
        estimate = replicate_estimate(plan, spec)
    mu = true_mean(spec)
    mse_hat, mse_variance = mse_estimate(estimate.per_replicate, mu)
    report = None
    if kind in G_KINDS:
        sigma2 = cached_moments(kind).sigma2
        report = efficiency_with_bounds(mse_hat, mse_variance, sigma2, n)
    return ExperimentResult(
        estimate=estimate,
        true_mu=mu,
        mse_hat=mse_hat,
        mse_variance=mse_variance,
        report=report,
    )
