#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Registry and runner for the executable invariant checks behind `lotterydyn verify`.

A check is a function `(scale, rng) -> CheckOutcome`. It reports how many cases it
evaluated and describes each violation; a check with no violations passes. Checks
are grouped by the package whose behaviour they exercise.
"""

from collections.abc import Callable, Iterable
import time

import attrs
import numpy as np
import numpy.typing as npt
from provide.foundation import logger

from lotterydyn.common.exceptions import LotteryDynError
from lotterydyn.common.rng import derive_seed, make_rng
from lotterydyn.config.defaults import DEFAULT_BASE_SEED

MODULES = ("contest", "dynamics", "potential", "walk", "experiments")
MAX_REPORTED_VIOLATIONS = 5


@attrs.define(frozen=True)
class VerifyScale:
    """Sample sizes for one verification pass."""

    name: str
    random_profiles: int
    lipschitz_samples: int
    seeded_runs: int
    walk_trials: int
    coverage_replicates: int
    derivative_points: int
    exponent_stride: int
    scaling_sweeps: bool


QUICK = VerifyScale(
    name="quick",
    random_profiles=20_000,
    lipschitz_samples=2_000,
    seeded_runs=60,
    walk_trials=2_000,
    coverage_replicates=10_000,
    derivative_points=30,
    exponent_stride=6,
    scaling_sweeps=False,
)
FULL = VerifyScale(
    name="full",
    random_profiles=1_000_000,
    lipschitz_samples=100_000,
    seeded_runs=1_000,
    walk_trials=10_000,
    coverage_replicates=10_000,
    derivative_points=1_000,
    exponent_stride=1,
    scaling_sweeps=True,
)
SCALES = {s.name: s for s in (QUICK, FULL)}


@attrs.define
class CheckOutcome:
    cases: int = 0
    violations: list[str] = attrs.field(factory=list)
    skipped: str | None = None

    def expect(self, condition: bool, message: str) -> None:
        """Counts one case and records `message` when `condition` is false."""
        self.cases += 1
        if not condition:
            self.violations.append(message)

    def expect_all(self, ok: npt.NDArray[np.bool_], message: str) -> None:
        """Counts every entry of `ok` as a case; failures are reported once, with their count."""
        self.cases += int(ok.size)
        bad = int(ok.size - np.count_nonzero(ok))
        if bad:
            self.violations.append(f"{message} ({bad} of {ok.size} cases)")


CheckFn = Callable[[VerifyScale, np.random.Generator], CheckOutcome]


@attrs.define(frozen=True)
class Check:
    module: str
    name: str
    description: str
    fn: CheckFn


@attrs.define(frozen=True)
class CheckResult:
    module: str
    name: str
    passed: bool
    skipped: bool
    cases: int
    duration: float
    violations: tuple[str, ...] = ()


@attrs.define(frozen=True)
class SuiteResult:
    scale: str
    results: tuple[CheckResult, ...]
    duration: float

    @property
    def success(self) -> bool:
        return all(r.passed or r.skipped for r in self.results)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed and not r.skipped)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if not r.passed and not r.skipped)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.results if r.skipped)


REGISTRY: dict[str, Check] = {}


def check(module: str, name: str, description: str) -> Callable[[CheckFn], CheckFn]:
    """Registers a check under `module/name`."""
    if module not in MODULES:
        raise LotteryDynError(f"Unknown module '{module}'")

    def register(fn: CheckFn) -> CheckFn:
        REGISTRY[f"{module}/{name}"] = Check(module=module, name=name, description=description, fn=fn)
        return fn

    return register


def registered_checks(modules: Iterable[str] | None = None) -> list[Check]:
    # Importing the suites fills the registry.
    import lotterydyn.verify.suites  # noqa: F401

    wanted = set(modules) if modules else set(MODULES)
    unknown = wanted - set(MODULES)
    if unknown:
        raise LotteryDynError(f"Unknown modules {sorted(unknown)}, expected some of {list(MODULES)}")
    ordered = sorted(REGISTRY.values(), key=lambda c: (MODULES.index(c.module), c.name))
    return [c for c in ordered if c.module in wanted]


def run_check(item: Check, scale: VerifyScale, seed: int = DEFAULT_BASE_SEED) -> CheckResult:
    """Runs one check on its own random stream; an unexpected exception counts as a failure."""
    rng = make_rng(derive_seed(seed, MODULES.index(item.module), sum(map(ord, item.name))))
    started = time.perf_counter()
    try:
        outcome = item.fn(scale, rng)
    except Exception as e:
        logger.error(f"Check {item.module}/{item.name} raised: {e}", exc_info=True)
        outcome = CheckOutcome(cases=1, violations=[f"raised {type(e).__name__}: {e}"])
    duration = time.perf_counter() - started
    if outcome.skipped is not None:
        logger.debug("Check skipped", check=f"{item.module}/{item.name}", reason=outcome.skipped)
        return CheckResult(item.module, item.name, passed=True, skipped=True, cases=0, duration=duration)
    passed = not outcome.violations
    logger.debug(
        "Check finished",
        check=f"{item.module}/{item.name}",
        passed=passed,
        cases=outcome.cases,
        violations=len(outcome.violations),
        duration=round(duration, 3),
    )
    return CheckResult(
        module=item.module,
        name=item.name,
        passed=passed,
        skipped=False,
        cases=outcome.cases,
        duration=duration,
        violations=tuple(outcome.violations[:MAX_REPORTED_VIOLATIONS]),
    )


def run_verification(
    modules: Iterable[str] | None = None,
    scale: VerifyScale = QUICK,
    seed: int = DEFAULT_BASE_SEED,
    progress: Callable[[CheckResult], None] | None = None,
) -> SuiteResult:
    started = time.perf_counter()
    results = []
    for item in registered_checks(modules):
        result = run_check(item, scale, seed)
        results.append(result)
        if progress is not None:
            progress(result)
    suite = SuiteResult(scale=scale.name, results=tuple(results), duration=time.perf_counter() - started)
    logger.info("Verification finished", scale=scale.name, passed=suite.passed, failed=suite.failed)
    return suite


# 🎟️🎲🔚
