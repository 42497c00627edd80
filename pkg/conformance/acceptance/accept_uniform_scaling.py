#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

from lotterydyn.verify.logic import CheckResult


class TestUniformScaling:
    def test_steps_track_n_log_n_and_log_inv_eps(self, full_check: Callable[[str], CheckResult]) -> None:
        result = full_check("experiments/uniform_scaling")
        assert result.cases == 2

    def test_sweeps_are_reproducible(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("experiments/deterministic_output")
        full_check("experiments/rows_reproduce")


# 🎟️🎲🔚
