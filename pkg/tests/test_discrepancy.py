import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhalton.discrepancy import (
    MAX_BRUTEFORCE_DIM,
    MAX_BRUTEFORCE_POINTS,
    local_discrepancy,
    star_discrepancy_1d,
    star_discrepancy_bruteforce,
)
from rhalton.generator import BlockRequest, SeedSpec, rhalton
from rhalton.radical import radical_inverse


def test_local_discrepancy_point_values():
    assert local_discrepancy([0.5], [0.5]) == 0.5
    assert local_discrepancy([[0.25, 0.75]], [0.5, 0.5]) == -0.25
    rng = np.random.default_rng(5)
    pts = rng.uniform(size=(30, 3))
    assert local_discrepancy(pts, [1.0, 1.0, 1.0]) == 0.0


def test_one_dimensional_point_values():
    assert star_discrepancy_1d([0.5]) == 0.5
    assert star_discrepancy_1d([0.0, 0.5]) == 0.5
    vdc8 = radical_inverse(np.arange(8), 2)
    assert star_discrepancy_1d(vdc8) == 0.125
    # midpoint grid is the 1-d minimizer at exactly 1/(2n)
    assert star_discrepancy_1d((np.arange(8) + 0.5) / 8) == 0.0625


def test_bruteforce_reduces_to_exact_formula_in_1d():
    rng = np.random.default_rng(123)
    for _ in range(100):
        n = int(rng.integers(1, 200))
        x = rng.uniform(size=n)
        assert star_discrepancy_bruteforce(x) == star_discrepancy_1d(x)


def test_halton_pairs_beat_the_diagonal():
    idx = np.arange(16)
    halton = np.column_stack([radical_inverse(idx, 2), radical_inverse(idx, 3)])
    diagonal = np.column_stack([idx / 16, idx / 16])
    assert star_discrepancy_bruteforce(halton) < star_discrepancy_bruteforce(diagonal)


def test_all_points_at_origin():
    for d in (2, 3):
        pts = np.zeros((4, d))
        assert star_discrepancy_bruteforce(pts) == 1.0


def test_supremum_dominates_random_anchors():
    rng = np.random.default_rng(777)
    for d in (1, 2, 3):
        pts = rng.uniform(size=(40, d))
        sup = star_discrepancy_bruteforce(pts)
        for _ in range(50):
            a = rng.uniform(size=d)
            assert abs(local_discrepancy(pts, a)) <= sup + 1e-12


def test_scrambled_halton_beats_random_points():
    # 128 scrambled 2-d points vs the median discrepancy of 99 random sets
    rng = np.random.default_rng(2718)
    random_disc = np.median(
        [star_discrepancy_bruteforce(rng.uniform(size=(128, 2))) for _ in range(99)]
    )
    wins = 0
    for s in range(100):
        block = rhalton(
            BlockRequest(n=128, d=2, seeds=SeedSpec.from_single(40_000 + 11 * s))
        )
        wins += int(star_discrepancy_bruteforce(block) < random_disc)
    assert wins >= 95


def test_base2_sequence_tracks_log_over_n():
    # any n consecutive base-2 radical inverses have D* <= 2 log2(n) / n
    for n in (16, 64, 256, 1024):
        for start in (0, 37, 1000):
            x = radical_inverse(np.arange(start, start + n), 2)
            assert star_discrepancy_1d(x) <= 2 * np.log2(n) / n


def test_size_guard_points_to_the_exact_formula():
    with pytest.raises(ValueError, match="star_discrepancy_1d"):
        star_discrepancy_bruteforce(np.full((MAX_BRUTEFORCE_POINTS + 1, 2), 0.5))
    with pytest.raises(ValueError, match="d=4"):
        star_discrepancy_bruteforce(np.full((4, MAX_BRUTEFORCE_DIM + 1), 0.5))


def test_input_validation():
    with pytest.raises(ValueError, match="nonempty"):
        star_discrepancy_bruteforce(np.empty((0, 2)))
    with pytest.raises(ValueError, match=r"\[0, 1\)"):
        star_discrepancy_bruteforce([[0.5, 1.0]])
    with pytest.raises(ValueError, match="anchor"):
        local_discrepancy([[0.5, 0.5]], [0.5])
    with pytest.raises(ValueError, match="anchor"):
        local_discrepancy([[0.5, 0.5]], [0.5, 1.5])
    with pytest.raises(ValueError, match="point"):
        star_discrepancy_1d([])


@settings(deadline=None, max_examples=30)
@given(
    n=st.integers(1, 40),
    d=st.integers(1, 3),
    seed=st.integers(0, 2**32 - 1),
)
def test_bruteforce_bounds(n, d, seed):
    pts = np.random.default_rng(seed).uniform(size=(n, d))
    sup = star_discrepancy_bruteforce(pts)
    assert 0.0 < sup <= 1.0
    # closed count at each point's own anchor is a lower bound
    for row in pts[: min(n, 5)]:
        assert local_discrepancy(pts, row) <= sup + 1e-12
