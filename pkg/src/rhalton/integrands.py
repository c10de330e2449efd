"""Test integrands on the unit cube, with reference moments.

Four of the five integrands share one shape: map the point through the
normal quantile coordinate-wise, average to a single standard normal
variate z = d**-0.5 * sum_j Phi^-1(x_j), and apply a 1-d profile g:

    g1  smooth sigmoid        Phi(z + 1)
    g2  jump                  1{z + 1 >= 0}   (closed: z = -1 gives 1)
    g3  kink                  max(z + 1, 0)
    g4  rare-event indicator  1{z < Phi^-1(0.001)}  (strict)

Their exact means and variances do not depend on d, which makes them
usable as truth for mean-squared-error and efficiency studies at any
dimension.  Reference moments come from a midpoint rule on the uniform
scale (the integrand suites' own quantile does the transport), computed
once at 10^7 nodes and persisted with the resolution recorded.

The fifth integrand, sumsq, is (sum_j x_j)**2 with the closed-form mean
d**2/4 + d/12; it exists for replication demos and has no profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .normal import norm_cdf, norm_quantile

KINDS = ("g1", "g2", "g3", "g4", "sumsq")
G_KINDS = ("g1", "g2", "g3", "g4")

DEFAULT_NODES = 10**7
_CHUNK = 1_000_000

# Threshold of the rare-event profile, fixed by the quantile itself.
RARE_EVENT_Z = norm_quantile(0.001)


@dataclass(frozen=True)
class IntegrandSpec:
    kind: str
    d: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown integrand kind {self.kind!r}; choose from {KINDS}")
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.d}")


def profile(kind: str, z):
    """The 1-d profile g applied to a standard normal variate."""
    z = np.asarray(z, dtype=np.float64)
    if kind == "g1":
        return norm_cdf(z + 1.0)
    if kind == "g2":
        return (z + 1.0 >= 0.0).astype(np.float64)
    if kind == "g3":
        return np.maximum(z + 1.0, 0.0)
    if kind == "g4":
        return (z < RARE_EVENT_Z).astype(np.float64)
    raise ValueError(f"no 1-d profile for integrand kind {kind!r}")


def evaluate(spec: IntegrandSpec, x):
    """Evaluate at one point (d,) or a batch (n, d); mirrors the input rank."""
    pts = np.asarray(x, dtype=np.float64)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if pts.ndim != 2 or pts.shape[1] != spec.d:
        raise ValueError(f"expected points of dimension {spec.d}, got shape {np.shape(x)}")
    if spec.kind == "sumsq":
        vals = pts.sum(axis=1) ** 2
        return float(vals[0]) if single else vals
    on_edge = (pts <= 0.0) | (pts >= 1.0)
    if on_edge.any():
        row, col = np.argwhere(on_edge)[0]
        raise ValueError(
            f"coordinate {col + 1} is {float(pts[row, col])!r}: the normal "
            f"quantile needs all coordinates strictly inside (0, 1)"
        )
    z = norm_quantile(pts).sum(axis=1) / math.sqrt(spec.d)
    vals = profile(spec.kind, z)
    return float(vals[0]) if single else vals


def sumsq_true_mean(d: int) -> float:
    """Exact mean of (sum_j x_j)^2 over the unit cube: d^2/4 + d/12."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return d * d / 4.0 + d / 12.0


@dataclass(frozen=True)
class ReferenceMoments:
    mu: float
    sigma2: float
    nodes: int


def reference_moments(kind: str, nodes: int = DEFAULT_NODES) -> ReferenceMoments:
    """Midpoint-rule mean and variance of a profile, at ``nodes`` points.

    Two passes in chunks: first the mean, then the centered second
    moment, so sigma2 never suffers an E[g^2] - mu^2 cancellation.
    """
    if kind not in G_KINDS:
        raise ValueError(
            f"reference moments exist only for {G_KINDS}; "
            f"sumsq has the closed form sumsq_true_mean(d)"
        )
    if nodes < 1:
        raise ValueError(f"node count must be >= 1, got {nodes}")

    def chunks():
        for start in range(0, nodes, _CHUNK):
            stop = min(start + _CHUNK, nodes)
            u = (np.arange(start, stop, dtype=np.float64) + 0.5) / nodes
            yield profile(kind, norm_quantile(u))

    total = 0.0
    for g in chunks():
        total += g.sum()
    mu = float(total / nodes)
    sq = 0.0
    for g in chunks():
        sq += ((g - mu) ** 2).sum()
    return ReferenceMoments(mu=mu, sigma2=float(sq / nodes), nodes=nodes)


def cached_moments(kind: str) -> ReferenceMoments:
    """Persisted reference moments (see scripts/build_reference_moments.py)."""
    from ._moments_table import NODES, TABLE

    if kind not in TABLE:
        raise ValueError(f"no persisted moments for kind {kind!r}")
    mu, sigma2 = TABLE[kind]
    return ReferenceMoments(mu=mu, sigma2=sigma2, nodes=NODES)


def true_mean(spec: IntegrandSpec) -> float:
    """Best available truth for the mean: closed form or persisted table."""
    if spec.kind == "sumsq":
        return sumsq_true_mean(spec.d)
    return cached_moments(spec.kind).mu
