#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import math

import numpy as np
import pytest

from lotterydyn.common.exceptions import ContestConfigError, ProfileError
from lotterydyn.contest.models import ActionProfile, ContestConfig


class TestContestConfig:
    def test_uniform_builds_equal_costs(self) -> None:
        cfg = ContestConfig.uniform(4, floor_action=0.01, cost=2.0)

        assert cfg.costs == (2.0, 2.0, 2.0, 2.0)
        assert cfg.homogeneous()
        assert cfg.cost_array.dtype == np.float64

    def test_heterogeneous_costs(self) -> None:
        cfg = ContestConfig(n=2, costs=[1, 0.1], floor_action=1e-5)

        assert cfg.costs == (1.0, 0.1)
        assert not cfg.homogeneous()

    def test_floor_action_quarter_is_accepted(self) -> None:
        assert ContestConfig(n=2, costs=(1.0, 0.16), floor_action=0.25).floor_action == 0.25

    @pytest.mark.parametrize(
        ("n", "costs", "floor_action"),
        [
            (1, (1.0,), 0.1),
            (2, (1.0,), 0.1),
            (2, (1.0, 0.0), 0.1),
            (2, (1.0, -1.0), 0.1),
            (2, (1.0, math.inf), 0.1),
            (2, (1.0, 1.0), 0.0),
            (2, (1.0, 1.0), 0.3),
        ],
    )
    def test_invalid_configs_are_rejected(self, n: int, costs: tuple[float, ...], floor_action: float) -> None:
        with pytest.raises(ContestConfigError):
            ContestConfig(n=n, costs=costs, floor_action=floor_action)


class TestActionProfile:
    def test_totals(self) -> None:
        x = ActionProfile(outputs=(0.1, 0.2, 0.3))

        assert len(x) == 3
        assert x[1] == 0.2
        assert math.isclose(x.total, 0.6)
        assert math.isclose(x.others_total(1), 0.4)

    def test_from_array(self) -> None:
        x = ActionProfile.from_array(np.array([0.5, 0.0]))

        assert x.outputs == (0.5, 0.0)
        assert isinstance(x.outputs[0], float)

    @pytest.mark.parametrize("outputs", [(-0.1, 0.2), (math.nan, 0.0), (math.inf, 1.0)])
    def test_invalid_outputs(self, outputs: tuple[float, ...]) -> None:
        with pytest.raises(ProfileError):
            ActionProfile(outputs=outputs)

    def test_length_mismatch(self) -> None:
        with pytest.raises(ProfileError, match="3 agents"):
            ActionProfile(outputs=(0.1, 0.2)).check_against(ContestConfig.uniform(3, floor_action=0.1))

    def test_index_out_of_range(self) -> None:
        with pytest.raises(ProfileError):
            ActionProfile(outputs=(0.1, 0.2)).check_index(2)


# 🎟️🎲🔚
