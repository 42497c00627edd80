#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Best-response potential, the two-agent sequence, gamma and the total-output intervals."""

from lotterydyn.potential.logic import (
    complement_distance_to_equilibrium,
    convexity_modulus,
    distance_to_equilibrium,
    expected_next_potential,
    gamma_n_agent,
    gamma_two_agent,
    geometric_mean_hitting_time,
    geometric_mean_sequence,
    interval_index,
    locate_interval,
    per_agent_next_potential,
    potential,
    potential_batch,
    potential_gradient,
    potential_hessian_eigs,
    potential_report,
    smoothness_modulus,
    two_agent_predicted_steps,
)
from lotterydyn.potential.models import HessianEigs, IntervalLocation, PotentialReport

__all__ = [
    "HessianEigs",
    "IntervalLocation",
    "PotentialReport",
    "complement_distance_to_equilibrium",
    "convexity_modulus",
    "distance_to_equilibrium",
    "expected_next_potential",
    "gamma_n_agent",
    "gamma_two_agent",
    "geometric_mean_hitting_time",
    "geometric_mean_sequence",
    "interval_index",
    "locate_interval",
    "per_agent_next_potential",
    "potential",
    "potential_batch",
    "potential_gradient",
    "potential_hessian_eigs",
    "potential_report",
    "smoothness_modulus",
    "two_agent_predicted_steps",
]

# 🎟️🎲🔚
