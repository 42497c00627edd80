#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from typing import Any

import attrs
import numpy as np
import numpy.typing as npt

from lotterydyn.common.exceptions import DomainError
from lotterydyn.config.defaults import DEFAULT_MAX_STEPS, RING_BUFFER_SIZE
from lotterydyn.contest.models import ActionProfile


@attrs.define(frozen=True)
class DynamicsParams:
    """Run controls: target eps, step cap, RNG seed and how much of the path to keep."""

    eps: float
    max_steps: int = DEFAULT_MAX_STEPS
    seed: int = 0
    record_full: bool = True
    ring_size: int = RING_BUFFER_SIZE

    def __attrs_post_init__(self) -> None:
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps}")
        if self.max_steps < 1:
            raise DomainError(f"max_steps must be at least 1, got {self.max_steps}")
        if self.ring_size < 1:
            raise DomainError(f"ring_size must be at least 1, got {self.ring_size}")


@attrs.define(frozen=True)
class Converged:
    steps: int
    tag = "converged"


@attrs.define(frozen=True)
class CycleDetected:
    start: int
    period: int
    tag = "cycle"

    @property
    def steps(self) -> int:
        return self.start + self.period


@attrs.define(frozen=True)
class Exhausted:
    """Run stopped without an eps-equilibrium.

    `stalled` is set when the selection policy found no agent to move.
    """

    steps: int
    stalled: bool = False
    tag = "exhausted"


Outcome = Converged | CycleDetected | Exhausted


@attrs.define(frozen=True)
class CycleReport:
    entry_time: int
    period: int
    cycle_states: tuple[ActionProfile, ...]


@attrs.define(frozen=True, eq=False)
class Trajectory:
    """A recorded run.

    `profiles` holds rows `profile_offset .. profile_offset + len(profiles) - 1`;
    with record_full that is every time step, otherwise only the most recent ones.
    Per-step series (`totals`, `gaps`, `warm`, `potentials`) always cover the whole run.
    `potentials` and `warm` are computed on the unit-cost scale and only for
    homogeneous contests.
    """

    profiles: npt.NDArray[np.float64]
    profile_offset: int
    movers: npt.NDArray[np.int64]
    totals: npt.NDArray[np.float64]
    gaps: npt.NDArray[np.float64]
    potentials: npt.NDArray[np.float64] | None
    warm: npt.NDArray[np.bool_] | None
    warmup_end: int | None
    outcome: Outcome
    final: ActionProfile
    cycle: CycleReport | None = None
    warnings: tuple[str, ...] = ()

    @property
    def steps(self) -> int:
        return len(self.movers)

    def profile(self, t: int) -> ActionProfile:
        row = t - self.profile_offset
        if not 0 <= row < len(self.profiles):
            raise IndexError(f"Profile at t={t} was not recorded (kept {self.profile_offset}..)")
        return ActionProfile.from_array(self.profiles[row])

    def summary(self) -> dict[str, Any]:
        """Plain-data digest for printing or persisting."""
        data: dict[str, Any] = {
            "outcome": self.outcome.tag,
            "steps": self.steps,
            "final_profile": list(self.final.outputs),
            "final_gap": float(self.gaps[-1]),
            "final_total": float(self.totals[-1]),
            "warmup_end": self.warmup_end,
            "movers": self.movers.tolist(),
            "totals": self.totals.tolist(),
            "gaps": [g if np.isfinite(g) else None for g in self.gaps.tolist()],
            "warnings": list(self.warnings),
        }
        if isinstance(self.outcome, Exhausted):
            data["stalled"] = self.outcome.stalled
        if self.cycle is not None:
            data["cycle"] = {
                "entry_time": self.cycle.entry_time,
                "period": self.cycle.period,
                "states": [list(s.outputs) for s in self.cycle.cycle_states],
            }
        return data


# 🎟️🎲🔚
