#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Search for floor actions that make two heterogeneous agents cycle."""

from collections.abc import Sequence

import attrs
from provide.foundation import logger

from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.cycles import ChainInterval, candidate_floor_actions
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import CycleDetected, DynamicsParams, Outcome
from lotterydyn.dynamics.policies import RoundRobin

VALIDATION_EPS = 1e-12


@attrs.define(frozen=True)
class FloorActionCheck:
    floor_action: float
    outcome: Outcome

    @property
    def cycles(self) -> bool:
        return isinstance(self.outcome, CycleDetected)


@attrs.define(frozen=True)
class CycleSearchResult:
    c2: float
    intervals: tuple[ChainInterval, ...]
    checks: tuple[FloorActionCheck, ...]

    @property
    def confirmed(self) -> list[float]:
        return [c.floor_action for c in self.checks if c.cycles]

    @property
    def rejected(self) -> list[float]:
        return [c.floor_action for c in self.checks if not c.cycles]


def forward_check(c2: float, floor_action: float, max_steps: int) -> FloorActionCheck:
    """Alternating dynamics for costs (1, c2) from (0, a), agent 0 moving first."""
    cfg = ContestConfig(n=2, costs=(1.0, c2), floor_action=floor_action)
    params = DynamicsParams(eps=VALIDATION_EPS, max_steps=max_steps, record_full=False)
    trajectory = run(cfg, ActionProfile(outputs=(0.0, floor_action)), RoundRobin(), params)
    return FloorActionCheck(floor_action=floor_action, outcome=trajectory.outcome)


def search_cycles(
    c2: float, grid: Sequence[float], depth: int = 8, max_steps: int = 10_000
) -> CycleSearchResult:
    """Reverse-chain candidates on `grid`, each confirmed or rejected by a forward run."""
    candidates, intervals = candidate_floor_actions(c2, grid, depth)
    checks = tuple(forward_check(c2, a, max_steps) for a in candidates)
    result = CycleSearchResult(c2=c2, intervals=tuple(intervals), checks=checks)
    logger.info(
        "Cycle search finished",
        c2=c2,
        grid=len(grid),
        candidates=len(candidates),
        confirmed=len(result.confirmed),
    )
    return result


# 🎟️🎲🔚
