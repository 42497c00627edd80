#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Cycle detection for deterministic dynamics, and the reverse-dynamics cycle search."""

from collections.abc import Iterable, Sequence
import math

import attrs
import numpy as np
import numpy.typing as npt
from provide.foundation import logger

from lotterydyn.common.exceptions import DomainError
from lotterydyn.config.defaults import CYCLE_SIGNIFICANT_DIGITS
from lotterydyn.contest.logic import reverse_best_response
from lotterydyn.contest.models import ActionProfile
from lotterydyn.dynamics.models import CycleReport

StateKey = tuple[int, tuple[float, ...]]


def rounded_state(
    x: Sequence[float] | npt.NDArray[np.float64], digits: int = CYCLE_SIGNIFICANT_DIGITS
) -> tuple[float, ...]:
    """Profile rounded to `digits` significant decimal digits."""
    spec = f".{digits - 1}e"
    return tuple(float(format(float(v), spec)) for v in x)


class CycleDetector:
    """Remembers the first step at which each (phase, rounded profile) key was seen.

    Only the key hash and its step are kept, so memory does not grow with the number of
    agents. A hit is a candidate: callers confirm it against the states themselves.
    """

    def __init__(self, digits: int = CYCLE_SIGNIFICANT_DIGITS) -> None:
        self.digits = digits
        self._seen: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._seen)

    def key(self, x: Sequence[float] | npt.NDArray[np.float64], phase: int = 0) -> StateKey:
        return (phase, rounded_state(x, self.digits))

    def observe(self, x: Sequence[float] | npt.NDArray[np.float64], t: int, phase: int = 0) -> int | None:
        """Step at which this state was first seen, or None (and remember it) if it is new."""
        digest = hash(self.key(x, phase))
        first = self._seen.get(digest)
        if first is None:
            self._seen[digest] = t
        return first

    def reanchor(self, x: Sequence[float] | npt.NDArray[np.float64], t: int, phase: int = 0) -> None:
        """Re-anchor a key whose earlier hit turned out to be a hash collision."""
        self._seen[hash(self.key(x, phase))] = t


def detect_cycle(
    profiles: Sequence[ActionProfile | Sequence[float]],
    phases: Sequence[int] | None = None,
    digits: int = CYCLE_SIGNIFICANT_DIGITS,
) -> CycleReport | None:
    """First revisited state of a recorded run, or None if no state repeats.

    `phases` carries schedule state for policies whose next mover depends on
    time (round robin); omit it for state-determined policies.
    """
    detector = CycleDetector(digits)
    rows = [p.outputs if isinstance(p, ActionProfile) else tuple(p) for p in profiles]
    for t, values in enumerate(rows):
        phase = phases[t] if phases is not None else 0
        first = detector.observe(values, t, phase)
        if first is None:
            continue
        first_phase = phases[first] if phases is not None else 0
        if detector.key(rows[first], first_phase) != detector.key(values, phase):
            detector.reanchor(values, t, phase)
            continue
        states = tuple(ActionProfile(outputs=s) for s in rows[first:t])
        return CycleReport(entry_time=first, period=t - first, cycle_states=states)
    return None


@attrs.define(frozen=True)
class ChainInterval:
    """Values of one coordinate that lead, move by move, into the overshoot set."""

    agent: int
    lower: float
    upper: float
    depth: int

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def reverse_chain_intervals(c2: float, depth: int) -> list[ChainInterval]:
    """Backward images of the overshoot set for two agents with costs (1, c2).

    Agent 1 (index 1) overshoots when its output reaches 1, since agent 0 then
    drops to zero and agent 1 falls back to the floor action. Inverting the best
    response alternates between the two agents: agent 0's outputs before the
    overshoot, agent 1's outputs before those, and so on. Each level keeps both
    roots of the inversion, clipped to the range the earlier mover can produce.
    The intervals of agent 1 are candidate floor actions that start a cycle from (0, a).
    """
    if not 0 < c2 < 0.25:
        raise DomainError(f"The overshoot set is empty unless 0 < c2 < 1/4, got {c2}")
    if depth < 1:
        raise DomainError(f"depth must be at least 1, got {depth}")

    costs = (1.0, c2)
    intervals = [ChainInterval(agent=1, lower=1.0, upper=1.0 / (4.0 * c2), depth=0)]
    frontier = [(1.0, 1.0 / (4.0 * c2))]
    agent = 1
    for level in range(1, depth + 1):
        cost = costs[agent]
        peak = 1.0 / (4.0 * cost)
        prev_agent = 1 - agent
        reach = 1.0 / (4.0 * costs[prev_agent])
        pieces = []
        for lo, hi in frontier:
            if lo > peak:
                continue
            hi = min(hi, peak)
            pieces.append((reverse_best_response(lo, cost), reverse_best_response(hi, cost)))
            pieces.append(
                (reverse_best_response(hi, cost, larger=True), reverse_best_response(lo, cost, larger=True))
            )
        frontier = _merged((max(lo, 0.0), min(hi, reach)) for lo, hi in pieces)
        frontier = [(lo, hi) for lo, hi in frontier if lo > 0]
        if not frontier:
            logger.debug("Reverse chain ended", c2=c2, level=level)
            break
        agent = prev_agent
        intervals.extend(ChainInterval(agent=agent, lower=lo, upper=hi, depth=level) for lo, hi in frontier)
    return intervals


def _merged(pieces: Iterable[tuple[float, float]]) -> list[tuple[float, float]]:
    merged: list[tuple[float, float]] = []
    for lo, hi in sorted(p for p in pieces if p[0] <= p[1]):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
        else:
            merged.append((lo, hi))
    return merged


def candidate_floor_actions(
    c2: float, grid: Sequence[float], depth: int = 8
) -> tuple[list[float], list[ChainInterval]]:
    """Grid points lying in one of agent 1's reverse-chain intervals, as valid floor actions."""
    intervals = [iv for iv in reverse_chain_intervals(c2, depth) if iv.agent == 1 and iv.depth > 0]
    hits = [a for a in grid if 0 < a <= 0.25 and any(iv.contains(a) for iv in intervals)]
    logger.debug("Reverse-chain candidates", c2=c2, intervals=len(intervals), candidates=len(hits))
    return hits, intervals


def log_grid(lower: float, upper: float, points: int) -> list[float]:
    """`points` log-spaced values between `lower` and `upper` inclusive."""
    if not 0 < lower <= upper:
        raise DomainError(f"Grid bounds must satisfy 0 < lower <= upper, got {lower}:{upper}")
    if points < 1:
        raise DomainError(f"points must be at least 1, got {points}")
    if points == 1 or math.isclose(lower, upper):
        return [lower]
    return np.geomspace(lower, upper, points).tolist()


# 🎟️🎲🔚
