#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Biased random walk with a wall, its coupled free walk, and agent-coverage statistics."""

from lotterydyn.walk.bounds import (
    coupon_tail_bound,
    coverage_lower_bound,
    coverage_upper_bound,
    n_agent_step_estimate,
)
from lotterydyn.walk.logic import (
    coupled_free_walk,
    coverage_time,
    empirical_visit_success,
    visit_bound_horizon,
    simulate_walk,
    uniform_coverage_times,
)
from lotterydyn.walk.models import CoupledPaths, WalkConfig, WalkPath

__all__ = [
    "CoupledPaths",
    "WalkConfig",
    "WalkPath",
    "coupled_free_walk",
    "coupon_tail_bound",
    "coverage_lower_bound",
    "coverage_time",
    "coverage_upper_bound",
    "empirical_visit_success",
    "visit_bound_horizon",
    "n_agent_step_estimate",
    "simulate_walk",
    "uniform_coverage_times",
]

# 🎟️🎲🔚
