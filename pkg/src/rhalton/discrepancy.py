"""Star discrepancy oracles for small point sets.

These are test instruments, not production surface: an exact
order-statistic formula in one dimension, and a grid supremum for
d <= 3 whose cost grows like n^(d+1).  The grid routine evaluates the
empirical count both inclusively and exclusively at every candidate
anchor because the supremum of |delta| may be attained only in the
closure of the anchor box family.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "MAX_BRUTEFORCE_DIM",
    "MAX_BRUTEFORCE_POINTS",
    "local_discrepancy",
    "star_discrepancy_1d",
    "star_discrepancy_bruteforce",
]

MAX_BRUTEFORCE_POINTS = 512
MAX_BRUTEFORCE_DIM = 3


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[:, None]
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("points must form a nonempty n x d array")
    if not ((pts >= 0.0) & (pts < 1.0)).all():
        raise ValueError("points must lie in [0, 1)^d")
    return pts


def local_discrepancy(points, anchor) -> float:
    """Signed gap at one anchor: point fraction in [0, anchor] minus its volume."""
    pts = _as_points(points)
    a = np.asarray(anchor, dtype=np.float64).reshape(-1)
    if a.shape[0] != pts.shape[1]:
        raise ValueError(
            f"anchor has {a.shape[0]} coordinates but points have {pts.shape[1]}"
        )
    if not ((a >= 0.0) & (a <= 1.0)).all():
        raise ValueError("anchor must lie in [0, 1]^d")
    n = pts.shape[0]
    inside = np.all(pts <= a, axis=1)
    return float(inside.sum()) / n - float(np.prod(a))


def star_discrepancy_1d(points) -> float:
    """Exact star discrepancy of a one-dimensional point set.

    With sorted points the supremum is attained at an order statistic:
    max over i of max(i/n - x_(i), x_(i) - (i-1)/n).
    """
    x = np.sort(np.asarray(points, dtype=np.float64).reshape(-1))
    n = x.size
    if n < 1:
        raise ValueError("need at least one point")
    if not ((x >= 0.0) & (x < 1.0)).all():
        raise ValueError("points must lie in [0, 1)")
    i = np.arange(1, n + 1)
    over = i / n - x
    under = x - (i - 1) / n
    return float(np.maximum(over, under).max())


def _grid_axes(pts: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    # Candidate anchor coordinates per axis: the point coordinates plus 1.
    # Index of each point coordinate within its axis grid is exact because
    # the grid contains that coordinate.
    grids = []
    index = []
    for j in range(pts.shape[1]):
        g = np.unique(np.concatenate([pts[:, j], [1.0]]))
        grids.append(g)
        index.append(np.searchsorted(g, pts[:, j], side="left"))
    return grids, index


def star_discrepancy_bruteforce(points) -> float:
    """Star discrepancy by grid supremum, for n <= 512 points in d <= 3.

    At each candidate anchor the empirical count is taken both with <=
    (the box itself) and with < (the limit from below), and the larger
    |gap| wins.
    """
    pts = _as_points(points)
    n, d = pts.shape
    if n > MAX_BRUTEFORCE_POINTS or d > MAX_BRUTEFORCE_DIM:
        raise ValueError(
            f"brute force handles n <= {MAX_BRUTEFORCE_POINTS} and d <= "
            f"{MAX_BRUTEFORCE_DIM} (got n={n}, d={d}); for one-dimensional "
            "sets use star_discrepancy_1d instead"
        )
    grids, index = _grid_axes(pts)

    if d == 1:
        g = grids[0]
        x = np.sort(pts[:, 0])
        closed = np.searchsorted(x, g, side="right")
        opened = np.searchsorted(x, g, side="left")
        return float(max((closed / n - g).max(), (g - opened / n).max()))

    if d == 2:
        m1, m2 = len(grids[0]), len(grids[1])
        hist = np.zeros((m1, m2), dtype=np.int64)
        np.add.at(hist, (index[0], index[1]), 1)
        closed = hist.cumsum(axis=0).cumsum(axis=1)
        opened = np.zeros_like(closed)
        opened[1:, 1:] = closed[:-1, :-1]
        vol = np.outer(grids[0], grids[1])
        return float(max((closed / n - vol).max(), (vol - opened / n).max()))

    # d == 3: sweep the first axis one grid value at a time so memory stays
    # at one m2 x m3 table instead of the full m1 x m2 x m3 cube.
    m2, m3 = len(grids[1]), len(grids[2])
    order = np.argsort(index[0], kind="stable")
    i0 = index[0][order]
    i1 = index[1][order]
    i2 = index[2][order]
    running = np.zeros((m2, m3), dtype=np.int64)
    prev = np.zeros((m2, m3), dtype=np.int64)
    vol23 = np.outer(grids[1], grids[2])
    best = -np.inf
    pos = 0
    for a in range(len(grids[0])):
        while pos < n and i0[pos] == a:
            running[i1[pos], i2[pos]] += 1
            pos += 1
        closed = running.cumsum(axis=0).cumsum(axis=1)
        opened = np.zeros_like(closed)
        opened[1:, 1:] = prev[:-1, :-1]
        vol = grids[0][a] * vol23
        best = max(best, (closed / n - vol).max(), (vol - opened / n).max())
        prev = closed
    return float(best)
