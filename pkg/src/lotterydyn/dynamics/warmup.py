#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Warm-up phase of homogeneous dynamics.

A unit-cost profile is warm when every output is at most 1/4, at least two
agents produce, and the total is below 1. Once warm, best responses keep it warm.
"""

from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from lotterydyn.common.exceptions import ContestConfigError
from lotterydyn.config.defaults import WARMUP_MAX_SINGLE
from lotterydyn.contest.models import ContestConfig

if TYPE_CHECKING:
    from lotterydyn.dynamics.models import Trajectory


def warm_condition(y: npt.NDArray[np.float64]) -> bool:
    """All three warm-up conditions on a unit-cost profile."""
    return bool(y.max() <= WARMUP_MAX_SINGLE and np.count_nonzero(y > 0) >= 2 and y.sum() < 1.0)


def warmup_end(cfg: ContestConfig, trajectory: "Trajectory") -> int | None:
    """First time the warm-up conditions hold, or None if the run never warms up."""
    if not cfg.homogeneous() or trajectory.warm is None:
        raise ContestConfigError("Warm-up is defined for homogeneous contests only", costs=cfg.costs)
    hits = np.flatnonzero(trajectory.warm)
    return int(hits[0]) if len(hits) else None


def warmup_persists(trajectory: "Trajectory") -> bool:
    """True when no step after the warm-up time leaves the warm region."""
    if trajectory.warm is None or trajectory.warmup_end is None:
        return True
    return bool(trajectory.warm[trajectory.warmup_end :].all())


def ratio_floor_start(trajectory: "Trajectory") -> int | None:
    """First step t from which s_{t+1} >= (sqrt(3)/2) s_t is guaranteed, or None before warm-up.

    The floor needs the previous mover to hold a best response, which an initial profile
    need not do, so a run that is warm at t = 0 only obeys it from t = 1.
    """
    if trajectory.warmup_end is None:
        return None
    return max(trajectory.warmup_end, 1)


# 🎟️🎲🔚
