#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Lottery contest definition: utilities, best responses and equilibria."""

from lotterydyn.contest.logic import (
    best_deviation_utility,
    best_response,
    epsilon_gap,
    equilibrium_profile,
    heterogeneous_equilibrium,
    is_epsilon_equilibrium,
    rescale_unit_cost,
    reverse_best_response,
    utility,
)
from lotterydyn.contest.models import ActionProfile, ContestConfig

__all__ = [
    "ActionProfile",
    "ContestConfig",
    "best_deviation_utility",
    "best_response",
    "epsilon_gap",
    "equilibrium_profile",
    "heterogeneous_equilibrium",
    "is_epsilon_equilibrium",
    "rescale_unit_cost",
    "reverse_best_response",
    "utility",
]

# 🎟️🎲🔚
