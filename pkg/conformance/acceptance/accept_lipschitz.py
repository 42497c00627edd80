#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

import pytest

from lotterydyn.verify.logic import CheckResult


class TestLipschitzBridge:
    def test_hundred_thousand_samples(self, full_check: Callable[[str], CheckResult]) -> None:
        assert full_check("contest/lipschitz_bridge").cases == 100_000

    @pytest.mark.parametrize(
        "name",
        [
            "contest/reference_values",
            "contest/deviation_dominates",
            "contest/equilibrium_gap",
            "contest/rescale_commutes",
        ],
    )
    def test_contest_checks(self, full_check: Callable[[str], CheckResult], name: str) -> None:
        full_check(name)


# 🎟️🎲🔚
