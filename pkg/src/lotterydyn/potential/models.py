#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from typing import NamedTuple

import attrs


@attrs.define(frozen=True)
class PotentialReport:
    """Potential at a profile and its exact one-step expectation under given weights."""

    value: float
    per_agent_next: tuple[float, ...]
    expected_next: float
    contraction_ok: bool
    sigma: float


class HessianEigs(NamedTuple):
    unit: float
    unit_multiplicity: int
    top: float
    top_multiplicity: int


class IntervalLocation(NamedTuple):
    index: int
    capped: bool


# 🎟️🎲🔚
