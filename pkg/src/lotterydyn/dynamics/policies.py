#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Selection policies: which agent best-responds at each step.

Every policy implements `choose(costs, floor_action, x, t, prev_mover, rng)`
on raw arrays and returns an agent index, or None to signal that it has no
agent left to move. Deterministic policies also expose `phase(t, n)`, the part
of the schedule that cycle detection must key on besides the profile.
"""

from collections.abc import Callable, Sequence
from typing import Protocol, runtime_checkable

import attrs
import numpy as np
import numpy.typing as npt

from lotterydyn.common.exceptions import PolicyError
from lotterydyn.config.defaults import WEIGHT_SUM_TOLERANCE
from lotterydyn.contest.logic import gap_vector, improvement_vector
from lotterydyn.contest.models import ActionProfile, ContestConfig

FloatArray = npt.NDArray[np.float64]
WeightFn = Callable[[int, ActionProfile, int | None], Sequence[float] | FloatArray]


@runtime_checkable
class SelectionPolicy(Protocol):
    name: str
    deterministic: bool

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None: ...

    def phase(self, t: int, n: int) -> int: ...

    def resolved(self, eps: float) -> "SelectionPolicy": ...


@attrs.define(frozen=True)
class Uniform:
    name = "unif"
    deterministic = False

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        return int(rng.integers(len(x)))

    def phase(self, t: int, n: int) -> int:
        return 0

    def resolved(self, eps: float) -> "Uniform":
        return self


@attrs.define(frozen=True)
class RoundRobin:
    """Agents take turns; agent (t + offset) mod n moves at time t."""

    offset: int = 0
    name = "round"
    deterministic = True

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        return (t + self.offset) % len(x)

    def phase(self, t: int, n: int) -> int:
        return (t + self.offset) % n

    def resolved(self, eps: float) -> "RoundRobin":
        return self


def _improvements(costs: FloatArray, floor_action: float, x: FloatArray, relative: bool) -> FloatArray:
    """Absolute utility gains, or the per-agent gaps 1 - u_i / d_i when `relative`."""
    if relative:
        return gap_vector(costs, floor_action, x)
    return improvement_vector(costs, floor_action, x)


@attrs.define(frozen=True)
class Lexicographic:
    """Lowest-indexed agent whose improvement exceeds `threshold`.

    With `relative` the improvement is the agent's multiplicative gap, so the
    policy runs out of movers exactly at an eps-equilibrium.
    """

    threshold: float | None = None
    relative: bool = False
    name = "lex"
    deterministic = True

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        gains = _improvements(costs, floor_action, x, self.relative)
        movers = np.flatnonzero(gains > _threshold(self.threshold))
        return int(movers[0]) if len(movers) else None

    def phase(self, t: int, n: int) -> int:
        return 0

    def resolved(self, eps: float) -> "Lexicographic":
        return self if self.threshold is not None else attrs.evolve(self, threshold=eps)


@attrs.define(frozen=True)
class MyopicWorst:
    """Agent with the smallest improvement strictly above `threshold`; `relative` as for Lexicographic."""

    threshold: float | None = None
    relative: bool = False
    name = "worst"
    deterministic = True

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        gains = _improvements(costs, floor_action, x, self.relative)
        eligible = gains > _threshold(self.threshold)
        if not eligible.any():
            return None
        return int(np.argmin(np.where(eligible, gains, np.inf)))

    def phase(self, t: int, n: int) -> int:
        return 0

    def resolved(self, eps: float) -> "MyopicWorst":
        return self if self.threshold is not None else attrs.evolve(self, threshold=eps)


@attrs.define(frozen=True)
class MyopicBest:
    """Agent with the largest improvement."""

    name = "best"
    deterministic = True

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        return int(np.argmax(improvement_vector(costs, floor_action, x)))

    def phase(self, t: int, n: int) -> int:
        return 0

    def resolved(self, eps: float) -> "MyopicBest":
        return self


@attrs.define(frozen=True)
class WeightedCustom:
    """Random selection from caller-supplied weights with bounds L <= w_i <= U.

    The previous mover is exempt from the lower bound.
    """

    weight_fn: WeightFn
    lower: float
    upper: float
    name = "weighted"
    deterministic = False

    def __attrs_post_init__(self) -> None:
        if not 0 < self.lower <= self.upper < 0.5:
            raise PolicyError(
                f"Weight bounds must satisfy 0 < L <= U < 1/2, got L={self.lower}, U={self.upper}"
            )

    def weights(self, x: FloatArray, t: int, prev_mover: int | None) -> FloatArray:
        w = np.asarray(self.weight_fn(t, ActionProfile.from_array(x), prev_mover), dtype=np.float64)
        if w.shape != x.shape:
            raise PolicyError(f"Weight vector has shape {w.shape}, expected {x.shape}", time=t)
        if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise PolicyError(f"Weights sum to {w.sum()!r}, not 1", time=t)
        if (w > self.upper + WEIGHT_SUM_TOLERANCE).any():
            raise PolicyError(f"Weight above U={self.upper}: {w.tolist()}", time=t)
        floor = np.full_like(w, self.lower - WEIGHT_SUM_TOLERANCE)
        if prev_mover is not None:
            floor[prev_mover] = 0.0
        if (w < floor).any():
            raise PolicyError(f"Weight below L={self.lower}: {w.tolist()}", time=t)
        return w

    def choose(
        self,
        costs: FloatArray,
        floor_action: float,
        x: FloatArray,
        t: int,
        prev_mover: int | None,
        rng: np.random.Generator,
    ) -> int | None:
        w = self.weights(x, t, prev_mover)
        return int(rng.choice(len(x), p=w / w.sum()))

    def phase(self, t: int, n: int) -> int:
        return 0

    def resolved(self, eps: float) -> "WeightedCustom":
        return self


def _threshold(value: float | None) -> float:
    if value is None:
        raise PolicyError("Policy threshold not resolved; call resolved(eps) first")
    return value


def select_mover(
    policy: SelectionPolicy,
    cfg: ContestConfig,
    x: ActionProfile,
    t: int,
    prev_mover: int | None,
    rng: np.random.Generator,
    eps: float | None = None,
) -> int | None:
    """Agent chosen by `policy` at time t, or None if the policy stops.

    `eps` fills in unset thresholds of the lex and worst policies.
    """
    x.check_against(cfg)
    active = policy.resolved(eps) if eps is not None else policy
    return active.choose(cfg.cost_array, cfg.floor_action, x.as_array(), t, prev_mover, rng)


POLICY_FACTORIES: dict[str, Callable[[], SelectionPolicy]] = {
    "unif": Uniform,
    "round": RoundRobin,
    "lex": Lexicographic,
    "worst": MyopicWorst,
    "best": MyopicBest,
}

THRESHOLD_POLICIES: dict[str, type[Lexicographic] | type[MyopicWorst]] = {
    "lex": Lexicographic,
    "worst": MyopicWorst,
}


def policy_from_name(name: str, relative: bool = False) -> SelectionPolicy:
    """Default instance of a named policy; `relative` switches lex and worst to gap thresholds."""
    try:
        factory = POLICY_FACTORIES[name]
    except KeyError as e:
        raise PolicyError(f"Unknown policy '{name}', expected one of {sorted(POLICY_FACTORIES)}") from e
    if relative and name in THRESHOLD_POLICIES:
        return THRESHOLD_POLICIES[name](relative=True)
    return factory()


def uniform_weights(n: int) -> WeightedCustom:
    """Uniform selection expressed as bounded weights (L = U = 1/n)."""
    return WeightedCustom(weight_fn=lambda t, x, prev: np.full(n, 1.0 / n), lower=1.0 / n, upper=1.0 / n)


# 🎟️🎲🔚
