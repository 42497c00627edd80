#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Sequential best-response dynamics, selection policies, cycle detection and warm-up tracking."""

from lotterydyn.dynamics.cycles import (
    CycleDetector,
    candidate_floor_actions,
    detect_cycle,
    reverse_chain_intervals,
)
from lotterydyn.dynamics.engine import run, step
from lotterydyn.dynamics.models import (
    Converged,
    CycleDetected,
    CycleReport,
    DynamicsParams,
    Exhausted,
    Outcome,
    Trajectory,
)
from lotterydyn.dynamics.policies import (
    Lexicographic,
    MyopicBest,
    MyopicWorst,
    RoundRobin,
    SelectionPolicy,
    Uniform,
    WeightedCustom,
    policy_from_name,
    select_mover,
)
from lotterydyn.dynamics.search import CycleSearchResult, forward_check, search_cycles
from lotterydyn.dynamics.warmup import ratio_floor_start, warm_condition, warmup_end, warmup_persists

__all__ = [
    "Converged",
    "CycleDetected",
    "CycleDetector",
    "CycleReport",
    "CycleSearchResult",
    "DynamicsParams",
    "Exhausted",
    "Lexicographic",
    "MyopicBest",
    "MyopicWorst",
    "Outcome",
    "RoundRobin",
    "SelectionPolicy",
    "Trajectory",
    "Uniform",
    "WeightedCustom",
    "candidate_floor_actions",
    "detect_cycle",
    "forward_check",
    "policy_from_name",
    "ratio_floor_start",
    "reverse_chain_intervals",
    "run",
    "search_cycles",
    "select_mover",
    "step",
    "warm_condition",
    "warmup_end",
    "warmup_persists",
]

# 🎟️🎲🔚
