#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import attrs
import numpy as np
import pytest

from lotterydyn.common.exceptions import LotteryDynError
from lotterydyn.verify.logic import (
    MAX_REPORTED_VIOLATIONS,
    MODULES,
    QUICK,
    Check,
    CheckOutcome,
    VerifyScale,
    check,
    registered_checks,
    run_check,
    run_verification,
)


def _passing(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    out.expect(True, "never reported")
    return out


def _failing(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for i in range(10):
        out.expect(False, f"violation {i}")
    return out


def _raising(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    raise ZeroDivisionError("boom")


def _skipping(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    return CheckOutcome(skipped="not at this scale")


def _draw(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    out.violations.append(repr(rng.random()))
    return out


class TestCheckOutcome:
    def test_expect_counts_cases(self) -> None:
        out = CheckOutcome()
        out.expect(True, "a")
        out.expect(False, "b")
        assert out.cases == 2
        assert out.violations == ["b"]

    def test_expect_all_reports_once(self) -> None:
        out = CheckOutcome()
        out.expect_all(np.array([True, False, False, True]), "bad rows")
        assert out.cases == 4
        assert out.violations == ["bad rows (2 of 4 cases)"]


class TestRegistry:
    def test_every_module_has_checks(self) -> None:
        checks = registered_checks()
        assert {c.module for c in checks} == set(MODULES)
        order = [MODULES.index(c.module) for c in checks]
        assert order == sorted(order)

    def test_filter(self) -> None:
        checks = registered_checks(["walk"])
        assert checks
        assert all(c.module == "walk" for c in checks)
        assert "examples" in {c.name for c in checks}

    def test_unknown_module(self) -> None:
        with pytest.raises(LotteryDynError, match="Unknown modules"):
            registered_checks(["physics"])

    def test_decorator_rejects_unknown_module(self) -> None:
        with pytest.raises(LotteryDynError):
            check("physics", "x", "nothing")


class TestRunCheck:
    def test_pass(self) -> None:
        result = run_check(Check("contest", "ok", "", _passing), QUICK)
        assert result.passed
        assert not result.skipped
        assert result.cases == 1

    def test_failures_are_truncated(self) -> None:
        result = run_check(Check("contest", "bad", "", _failing), QUICK)
        assert not result.passed
        assert result.cases == 10
        assert len(result.violations) == MAX_REPORTED_VIOLATIONS

    def test_exception_is_a_failure(self) -> None:
        result = run_check(Check("walk", "explodes", "", _raising), QUICK)
        assert not result.passed
        assert result.violations == ("raised ZeroDivisionError: boom",)

    def test_skip(self) -> None:
        result = run_check(Check("experiments", "later", "", _skipping), QUICK)
        assert result.skipped
        assert result.passed

    def test_streams_depend_on_seed_and_name(self) -> None:
        first = run_check(Check("walk", "draw", "", _draw), QUICK, seed=1).violations
        again = run_check(Check("walk", "draw", "", _draw), QUICK, seed=1).violations
        other_seed = run_check(Check("walk", "draw", "", _draw), QUICK, seed=2).violations
        other_name = run_check(Check("walk", "draw2", "", _draw), QUICK, seed=1).violations
        assert first == again
        assert first != other_seed
        assert first != other_name


class TestRegisteredChecksPass:
    @pytest.mark.parametrize(
        "name",
        [
            "contest/reference_values",
            "contest/equilibrium_gap",
            "contest/lipschitz_bridge",
            "dynamics/period_six_cycle",
            "dynamics/period_four_cycle",
            "dynamics/warmup_laws",
            "potential/interval_examples",
            "potential/geometric_mean_threshold",
            "walk/examples",
        ],
    )
    def test_quick_check(self, name: str) -> None:
        item = next(c for c in registered_checks() if f"{c.module}/{c.name}" == name)
        result = run_check(item, QUICK)
        assert result.passed, result.violations

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["contest/lipschitz_bridge", "dynamics/warmup_laws"])
    def test_at_a_larger_scale(self, name: str) -> None:
        larger = attrs.evolve(QUICK, name="larger", lipschitz_samples=25_000, seeded_runs=300)
        item = next(c for c in registered_checks() if f"{c.module}/{c.name}" == name)
        result = run_check(item, larger)
        assert result.passed, result.violations

    def test_uniform_scaling_skipped_at_quick_scale(self) -> None:
        suite = run_verification(["experiments"], scale=QUICK)
        skipped = [r.name for r in suite.results if r.skipped]
        assert skipped == ["uniform_scaling"]
        assert suite.success
        assert suite.skipped == 1


# 🎟️🎲🔚
