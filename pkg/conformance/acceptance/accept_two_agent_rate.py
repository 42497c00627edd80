#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import Converged, DynamicsParams
from lotterydyn.dynamics.policies import RoundRobin
from lotterydyn.potential.logic import two_agent_predicted_steps
from lotterydyn.verify.logic import CheckResult


class TestTwoAgentRate:
    def test_every_exponent_pair(self, full_check: Callable[[str], CheckResult]) -> None:
        result = full_check("dynamics/two_agent_rate")
        assert result.cases == 37 * 37

    def test_sequence_reduction(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/geometric_reduction")
        full_check("potential/geometric_mean_threshold")

    def test_extreme_corner(self) -> None:
        eps = gamma = 2.0**-40
        cfg = ContestConfig.uniform(2, floor_action=gamma * gamma)
        trajectory = run(
            cfg, ActionProfile(outputs=(gamma * gamma, 0.0)), RoundRobin(offset=1), DynamicsParams(eps=eps)
        )
        predicted = two_agent_predicted_steps(eps, gamma)

        assert isinstance(trajectory.outcome, Converged)
        assert predicted - 4 <= trajectory.outcome.steps <= predicted + 6


# 🎟️🎲🔚
