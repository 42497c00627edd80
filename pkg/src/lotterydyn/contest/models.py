#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Value types describing a lottery contest and a profile of outputs."""

from collections.abc import Iterable, Sequence
import math

import attrs
import numpy as np
import numpy.typing as npt

from lotterydyn.common.exceptions import ContestConfigError, ProfileError

MAX_FLOOR_ACTION = 0.25


def _as_float_tuple(values: Iterable[float]) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


@attrs.define(frozen=True)
class ContestConfig:
    """A lottery contest: n agents with linear costs c_i and floor action a.

    Agent i wins the unit prize with probability x_i / sum(x) and pays c_i * x_i.
    The floor action is what an agent plays when nobody else produces anything.
    """

    n: int
    costs: tuple[float, ...] = attrs.field(converter=_as_float_tuple)
    floor_action: float = attrs.field(converter=float)

    def __attrs_post_init__(self) -> None:
        if self.n < 2:
            raise ContestConfigError(f"A contest needs at least two agents, got n={self.n}")
        if len(self.costs) != self.n:
            raise ContestConfigError(f"Expected {self.n} costs, got {len(self.costs)}")
        if not all(math.isfinite(c) and c > 0 for c in self.costs):
            raise ContestConfigError(f"Costs must be finite and positive: {self.costs}")
        if not 0 < self.floor_action <= MAX_FLOOR_ACTION:
            raise ContestConfigError(f"Floor action must lie in (0, 1/4], got {self.floor_action}")

    @classmethod
    def uniform(cls, n: int, floor_action: float, cost: float = 1.0) -> "ContestConfig":
        """Homogeneous contest where every agent has cost `cost`."""
        return cls(n=n, costs=(cost,) * n, floor_action=floor_action)

    def homogeneous(self) -> bool:
        return all(c == self.costs[0] for c in self.costs)

    @property
    def cost_array(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.costs, dtype=np.float64)


def _as_outputs(values: Iterable[float]) -> tuple[float, ...]:
    outputs = _as_float_tuple(values)
    if not all(math.isfinite(v) for v in outputs):
        raise ProfileError(f"Outputs must be finite: {outputs}")
    if any(v < 0 for v in outputs):
        raise ProfileError(f"Outputs must be non-negative: {outputs}")
    return outputs


@attrs.define(frozen=True)
class ActionProfile:
    """The outputs x_1..x_n of all agents at one point in time."""

    outputs: tuple[float, ...] = attrs.field(converter=_as_outputs)

    @classmethod
    def from_array(cls, values: npt.NDArray[np.float64] | Sequence[float]) -> "ActionProfile":
        return cls(outputs=tuple(np.asarray(values, dtype=np.float64).tolist()))

    def __len__(self) -> int:
        return len(self.outputs)

    def __getitem__(self, index: int) -> float:
        return self.outputs[index]

    @property
    def total(self) -> float:
        return math.fsum(self.outputs)

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.outputs, dtype=np.float64)

    def others_total(self, i: int) -> float:
        """Sum of every output except agent i's."""
        return math.fsum(v for j, v in enumerate(self.outputs) if j != i)

    def check_against(self, cfg: ContestConfig) -> None:
        if len(self.outputs) != cfg.n:
            raise ProfileError(f"Profile has {len(self.outputs)} entries but the contest has {cfg.n} agents")

    def check_index(self, i: int) -> None:
        if not 0 <= i < len(self.outputs):
            raise ProfileError(f"Agent index {i} out of range for {len(self.outputs)} agents")


# 🎟️🎲🔚
