#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Callable

from lotterydyn.verify.logic import CheckResult


class TestWarmupLaws:
    def test_thousand_seeded_runs(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/warmup_laws")

    def test_interval_drift(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/interval_drift_walk")

    def test_policies_and_determinism(self, full_check: Callable[[str], CheckResult]) -> None:
        full_check("dynamics/policies_converge")
        full_check("dynamics/determinism")


# 🎟️🎲🔚
