#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

from lotterydyn.verify.logic import CheckResult


class TestWalledWalk:
    def test_visit_bound_grid(self, full_check: Callable[[str], CheckResult]) -> None:
        result = full_check("walk/visit_bound")
        assert result.cases == 4 * 3 * 3 * 2

    def test_examples_and_coupling(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("walk/examples")
        full_check("walk/coupling")


class TestCoverage:
    def test_coupon_tail(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("walk/uniform_coverage")


# 🎟️🎲🔚
