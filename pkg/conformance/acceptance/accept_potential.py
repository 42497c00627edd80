#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

import pytest

from lotterydyn.verify.logic import CheckResult


class TestPotentialSuite:
    @pytest.mark.parametrize(
        "name",
        [
            "potential/equilibrium_minimum",
            "potential/potential_bounds",
            "potential/descent_along_runs",
            "potential/interval_examples",
        ],
    )
    def test_check(self, full_check: Callable[[str], CheckResult], name: str) -> None:
        full_check(name)

    def test_million_profiles(self, full_check: Callable[[str], CheckResult]) -> None:
        assert full_check("potential/potential_bounds").cases >= 1_000_000


class TestDerivatives:
    def test_gradient_and_hessian(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("potential/derivatives")


# 🎟️🎲🔚
