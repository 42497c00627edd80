#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Iterator
from pathlib import Path

from _pytest.config import Config
from _pytest.monkeypatch import MonkeyPatch
import numpy as np
from provide.testkit import (
    reset_foundation_setup_for_testing,
)
import pytest

from lotterydyn.contest.models import ActionProfile, ContestConfig


def pytest_configure(config: Config) -> None:
    """Register custom marks."""
    config.addinivalue_line("markers", "integration: marks tests that run whole sweeps or CLI pipelines")


@pytest.fixture(autouse=True)
def isolated_lotterydyn_env(monkeypatch: MonkeyPatch) -> None:
    """Keep user environment overrides out of the tests."""
    for var in ("LOTTERYDYN_LOG_LEVEL", "LOTTERYDYN_WORKERS", "LOTTERYDYN_SEED", "LOTTERYDYN_OUTPUT_DIR"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture(autouse=True)
def reset_foundation_for_tests() -> Iterator[None]:
    """Reset Foundation state between tests for proper isolation."""
    yield
    reset_foundation_setup_for_testing()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def pair() -> ContestConfig:
    """Two unit-cost agents with a small floor action."""
    return ContestConfig.uniform(2, floor_action=1e-10)


@pytest.fixture
def symmetric_quarter() -> ActionProfile:
    return ActionProfile(outputs=(0.25, 0.25))


@pytest.fixture
def project_dir(tmp_path: Path, monkeypatch: MonkeyPatch) -> Path:
    """Empty project root (has a pyproject.toml) used as the working directory."""
    (tmp_path / "pyproject.toml").write_text("[project]\nname = 'sandbox'\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    return tmp_path


# 🎟️🎲🔚
