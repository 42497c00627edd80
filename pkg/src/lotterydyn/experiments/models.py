#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections.abc import Iterable
from typing import Any

import attrs

from lotterydyn.common.exceptions import ExperimentSpecError
from lotterydyn.config.defaults import (
    DEFAULT_BASE_SEED,
    DEFAULT_EPS,
    DEFAULT_GAMMA,
    DEFAULT_MAX_STEPS,
    DEFAULT_N,
    DEFAULT_REPLICATES,
    DEFAULT_WORKERS,
    POLICY_NAMES,
    RANDOMIZED_POLICIES,
)

OUTCOME_TAGS = ("converged", "cycle", "exhausted")


def _tuple_of(kind: type) -> Any:
    def convert(value: Any) -> tuple[Any, ...]:
        items: Iterable[Any] = value if isinstance(value, list | tuple) else [value]
        try:
            return tuple(kind(v) for v in items)
        except (TypeError, ValueError) as e:
            raise ExperimentSpecError(f"Expected {kind.__name__} values, got {value!r}") from e

    return convert


@attrs.define(frozen=True)
class ExperimentSpec:
    """A sweep over policies and (n, eps, gamma) grids.

    Each cell starts from (gamma, 0, ..., 0) with floor action gamma. Randomized
    policies run `replicates` times per cell; deterministic ones run once. With
    `relative_threshold` off, lex and worst move only agents that gain more than eps in
    utility, and may stall short of an eps-equilibrium.
    """

    policies: tuple[str, ...] = attrs.field(default=("unif",), converter=_tuple_of(str))
    n: tuple[int, ...] = attrs.field(default=(DEFAULT_N,), converter=_tuple_of(int))
    eps: tuple[float, ...] = attrs.field(default=(DEFAULT_EPS,), converter=_tuple_of(float))
    gamma: tuple[float, ...] = attrs.field(default=(DEFAULT_GAMMA,), converter=_tuple_of(float))
    replicates: int = DEFAULT_REPLICATES
    base_seed: int = DEFAULT_BASE_SEED
    max_steps: int = DEFAULT_MAX_STEPS
    record_timing: bool = False
    relative_threshold: bool = True
    workers: int = DEFAULT_WORKERS

    def __attrs_post_init__(self) -> None:
        for name in ("policies", "n", "eps", "gamma"):
            if not getattr(self, name):
                raise ExperimentSpecError(f"Grid '{name}' must not be empty")
        unknown = sorted(set(self.policies) - set(POLICY_NAMES))
        if unknown:
            raise ExperimentSpecError(f"Unknown policies {unknown}, expected a subset of {list(POLICY_NAMES)}")
        if any(v < 2 for v in self.n):
            raise ExperimentSpecError(f"Every n must be at least 2, got {list(self.n)}")
        if any(not 0 < v < 1 for v in self.eps):
            raise ExperimentSpecError(f"Every eps must lie in (0, 1), got {list(self.eps)}")
        if any(not 0 < v <= 0.25 for v in self.gamma):
            raise ExperimentSpecError(f"Every gamma must lie in (0, 1/4], got {list(self.gamma)}")
        if self.replicates < 1:
            raise ExperimentSpecError(f"replicates must be at least 1, got {self.replicates}")
        if self.max_steps < 1:
            raise ExperimentSpecError(f"max_steps must be at least 1, got {self.max_steps}")
        if self.workers < 1:
            raise ExperimentSpecError(f"workers must be at least 1, got {self.workers}")

    def replicates_for(self, policy: str) -> int:
        return self.replicates if policy in RANDOMIZED_POLICIES else 1


@attrs.define(frozen=True)
class ResultRow:
    """One run of one sweep cell.

    `steps` counts selection events, so redundant moves under random selection count too.
    """

    policy: str
    n: int
    eps: float
    gamma: float
    seed: int
    steps: int
    outcome: str
    warmup_end: int | None
    nanos: int

    def sort_key(self) -> tuple[str, int, float, float, int]:
        return (self.policy, self.n, self.eps, self.gamma, self.seed)


@attrs.define(frozen=True)
class PlotPoint:
    x: float
    mean_steps: float
    stderr: float
    count: int


@attrs.define(frozen=True)
class PlotSeries:
    """Mean steps per transformed x value for one policy, with its least-squares line."""

    policy: str
    tag: str
    points: tuple[PlotPoint, ...]
    slope: float
    intercept: float
    correlation: float | None


# 🎟️🎲🔚
