#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import math

import numpy as np
import pytest

from lotterydyn.common.exceptions import DomainError
from lotterydyn.walk.bounds import (
    coupon_tail_bound,
    coverage_lower_bound,
    coverage_upper_bound,
    n_agent_step_estimate,
)
from lotterydyn.walk.logic import uniform_coverage_times


class TestCoverageBounds:
    def test_upper(self) -> None:
        assert coverage_upper_bound(10, 0.1, 0.1) == pytest.approx(10 * math.log(100))

    def test_lower(self) -> None:
        assert coverage_lower_bound(10, 0.1, 0.2, 0.5) == pytest.approx(10 * math.log(5))
        assert coverage_lower_bound(10, 0.1, 0.2, 0.01) == 0.0

    @pytest.mark.parametrize(("lower", "delta"), [(0.0, 0.1), (1.5, 0.1), (0.1, 0.0), (0.1, 1.0)])
    def test_upper_domain(self, lower: float, delta: float) -> None:
        with pytest.raises(DomainError):
            coverage_upper_bound(10, lower, delta)

    def test_lower_domain(self) -> None:
        with pytest.raises(DomainError):
            coverage_lower_bound(10, 0.3, 0.2, 0.5)

    def test_tail_bound_against_samples(self, rng: np.random.Generator) -> None:
        n = 20
        times = uniform_coverage_times(n, 4000, rng)
        tail = float(np.mean(times > n * math.log(n) + 2 * n))
        assert tail <= coupon_tail_bound(2.0) + 0.02


class TestStepEstimate:
    def test_grows_with_precision(self) -> None:
        coarse = n_agent_step_estimate(10, 1e-3, 0.1, 1e-3, 0.05, 0.2)
        fine = n_agent_step_estimate(10, 1e-9, 0.1, 1e-3, 0.05, 0.2)
        assert fine - coarse == pytest.approx(math.log(1e6) / (0.05 * 0.6))

    @pytest.mark.parametrize(
        "args",
        [
            (10, 1e-3, 0.1, 0.5, 0.05, 0.2),
            (10, 1e-3, 0.1, 1e-3, 0.3, 0.2),
            (10, 1e-3, 0.1, 1e-3, 0.05, 0.5),
            (10, 0.0, 0.1, 1e-3, 0.05, 0.2),
        ],
    )
    def test_domain(self, args: tuple[float, ...]) -> None:
        with pytest.raises(DomainError):
            n_agent_step_estimate(*args)


# 🎟️🎲🔚
