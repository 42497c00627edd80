#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

from lotterydyn.verify.logic import CheckResult


class TestHeterogeneousCycles:
    def test_costs_one_and_a_tenth(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/period_six_cycle")

    def test_floor_action_quarter(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/period_four_cycle")

    def test_reverse_chain_candidates_cycle(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/cycle_search")


# 🎟️🎲🔚
