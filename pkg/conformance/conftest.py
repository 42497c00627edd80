#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Common conftest for tests under 'lotterydyn/conformance'.
Provides the full-scale check runner and marks every acceptance test as slow."""

from collections.abc import Callable, Iterator
from pathlib import Path

from _pytest.config import Config
from provide.testkit import reset_foundation_setup_for_testing
import pytest

from lotterydyn.verify.logic import FULL, CheckResult, registered_checks, run_check

ACCEPTANCE_DIR = Path(__file__).parent / "acceptance"


def pytest_collection_modifyitems(config: Config, items: list[pytest.Item]) -> None:
    for item in items:
        if ACCEPTANCE_DIR in Path(str(item.fspath)).parents:
            item.add_marker(pytest.mark.slow)
            item.add_marker(pytest.mark.acceptance)


@pytest.fixture(autouse=True)
def reset_foundation_for_tests() -> Iterator[None]:
    yield
    reset_foundation_setup_for_testing()


@pytest.fixture(scope="session")
def full_check() -> Callable[[str], CheckResult]:
    """Runs a registered check, named `module/name`, at full scale."""
    checks = {f"{c.module}/{c.name}": c for c in registered_checks()}

    def run(name: str) -> CheckResult:
        if name not in checks:
            pytest.fail(f"No registered check named '{name}'")
        result = run_check(checks[name], FULL)
        assert not result.skipped, f"{name} was skipped at full scale"
        assert result.passed, "\n".join(result.violations)
        return result

    return run


# 🎟️🎲🔚
