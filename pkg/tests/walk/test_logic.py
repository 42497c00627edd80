#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import math

from hypothesis import given, strategies as st
import numpy as np
import pytest

from lotterydyn.common.exceptions import DomainError
from lotterydyn.walk.logic import (
    coupled_free_walk,
    coverage_time,
    empirical_visit_success,
    left_or_hold_fraction,
    visit_bound_horizon,
    simulate_walk,
    uniform_coverage_times,
)
from lotterydyn.walk.models import WalkConfig


class TestWalkConfig:
    @pytest.mark.parametrize(("p", "start"), [(0.5, 1), (-0.1, 1), (0.2, 0)])
    def test_invalid(self, p: float, start: int) -> None:
        with pytest.raises(DomainError):
            WalkConfig(p=p, start=start)

    def test_zero_bias_is_allowed(self) -> None:
        assert WalkConfig(p=0.0, start=1).p == 0.0


class TestVisitBound:
    def test_hand_computed_value(self) -> None:
        assert visit_bound_horizon(0.3, 5, 10, 0.1) == 150

    def test_log_term_dominates_for_small_delta(self) -> None:
        expected = math.ceil(4.0 * math.log(1e6) / 0.5**2)
        assert visit_bound_horizon(0.25, 1, 1, 1e-6) == expected

    @pytest.mark.parametrize(
        ("p", "k", "m", "delta"), [(0.5, 1, 1, 0.1), (0.2, 0, 1, 0.1), (0.2, 1, 0, 0.1), (0.2, 1, 1, 1.0)]
    )
    def test_domain(self, p: float, k: int, m: int, delta: float) -> None:
        with pytest.raises(DomainError):
            visit_bound_horizon(p, k, m, delta)

    def test_bound_holds_empirically(self, rng: np.random.Generator) -> None:
        horizon = visit_bound_horizon(0.3, 5, 10, 0.1)
        success = empirical_visit_success(WalkConfig(p=0.3, start=5), 10, horizon, 2000, rng)
        assert success >= 0.9

    def test_short_horizon_rarely_succeeds(self, rng: np.random.Generator) -> None:
        assert empirical_visit_success(WalkConfig(p=0.3, start=20), 1, 10, 200, rng) == 0.0


class TestCoupling:
    @given(
        p=st.floats(min_value=0.0, max_value=0.49),
        start=st.integers(min_value=1, max_value=20),
        horizon=st.integers(min_value=0, max_value=300),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_walled_dominates_free(self, p: float, start: int, horizon: int, seed: int) -> None:
        paths = coupled_free_walk(WalkConfig(p=p, start=start), horizon, np.random.default_rng(seed))
        walled = np.array(paths.walled.states)
        free = np.array(paths.free)

        assert len(walled) == len(free) == horizon + 1
        assert walled[0] == free[0] == start
        assert (walled >= free).all()
        assert (walled >= 1).all()
        moves = np.diff(walled)
        held = (moves == 0) & (walled[:-1] == 1)
        assert ((np.abs(moves) == 1) | held).all()
        assert paths.walled.visits_to_one == int(np.count_nonzero(walled[1:] == 1))

    def test_always_left_walk_sticks_to_wall(self, rng: np.random.Generator) -> None:
        path = simulate_walk(WalkConfig(p=0.0, start=3), 6, rng)
        assert path.states == (3, 2, 1, 1, 1, 1, 1)
        assert path.visits_to_one == 5


class TestCoverage:
    @pytest.mark.parametrize(
        ("trace", "expected"),
        [((1, 2, 3), None), ((0, 1, 2), 2), ((0, 0, 1, 0, 2, 1), 4), ((), None)],
    )
    def test_examples(self, trace: tuple[int, ...], expected: int | None) -> None:
        assert coverage_time(trace, 3) == expected

    @pytest.mark.parametrize("n", [2, 5, 17])
    def test_round_robin(self, n: int) -> None:
        assert coverage_time(list(range(n)) * 2, n) == n - 1

    def test_uniform_times(self, rng: np.random.Generator) -> None:
        times = uniform_coverage_times(10, 500, rng)

        assert times.shape == (500,)
        assert (times >= 9).all()
        # Mean coupon-collector time for n=10 is n H_n - 1, about 28.3 draws counted from zero.
        assert 24.0 < times.mean() < 33.0

    def test_uniform_times_domain(self, rng: np.random.Generator) -> None:
        with pytest.raises(DomainError):
            uniform_coverage_times(0, 10, rng)


class TestIntervalDrift:
    def test_fraction(self) -> None:
        assert left_or_hold_fraction(np.array([0.3, 0.3, 0.2, 0.3])) == pytest.approx(2 / 3)

    def test_short_series(self) -> None:
        assert left_or_hold_fraction(np.array([0.1])) == 1.0
        assert left_or_hold_fraction(np.array([0.1, 0.3]), start=1) == 1.0


# 🎟️🎲🔚
