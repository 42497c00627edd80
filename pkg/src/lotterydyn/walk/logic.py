#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Simulation of the walled walk and of agent-coverage times.

Walks are generated in bulk: the free walk is a cumulative sum of +-1 steps
and the walled walk is its reflection y_t = z_t + max(0, max_{s<=t} (1 - z_s)),
which is the same as applying y <- max(1, y + step) one step at a time.
"""

from collections.abc import Iterable
import math

import numpy as np
import numpy.typing as npt
from provide.foundation import logger

from lotterydyn.common.exceptions import DomainError
from lotterydyn.potential.logic import interval_index
from lotterydyn.walk.models import CoupledPaths, WalkConfig, WalkPath

IntArray = npt.NDArray[np.int64]

TRIAL_BATCH = 1000


def _free_paths(cfg: WalkConfig, horizon: int, trials: int, rng: np.random.Generator) -> IntArray:
    coins = rng.random((trials, horizon)) < cfg.p
    steps = np.where(coins, 1, -1).astype(np.int64)
    paths = np.empty((trials, horizon + 1), dtype=np.int64)
    paths[:, 0] = cfg.start
    paths[:, 1:] = cfg.start + np.cumsum(steps, axis=1)
    return paths


def _reflect(free: IntArray) -> IntArray:
    push = np.maximum.accumulate(np.maximum(0, 1 - free), axis=-1)
    walled: IntArray = free + push
    return walled


def _check_horizon(horizon: int) -> None:
    if horizon < 0:
        raise DomainError(f"horizon must be non-negative, got {horizon}")


def coupled_free_walk(cfg: WalkConfig, horizon: int, rng: np.random.Generator) -> CoupledPaths:
    """Walled walk and the free walk that shares its coin flips."""
    _check_horizon(horizon)
    free = _free_paths(cfg, horizon, 1, rng)
    walled = _reflect(free)[0]
    path = WalkPath(states=tuple(walled.tolist()), visits_to_one=int(np.count_nonzero(walled[1:] == 1)))
    return CoupledPaths(walled=path, free=tuple(free[0].tolist()))


def simulate_walk(cfg: WalkConfig, horizon: int, rng: np.random.Generator) -> WalkPath:
    return coupled_free_walk(cfg, horizon, rng).walled


def visit_bound_horizon(p: float, k: int, m: int, delta: float) -> int:
    """Steps after which the walk from k has visited 1 at least m times w.p. >= 1 - delta."""
    if not 0 <= p < 0.5:
        raise DomainError(f"p must satisfy 0 <= p < 1/2, got {p}")
    if k < 1 or m < 1:
        raise DomainError(f"k and m must be at least 1, got k={k}, m={m}")
    if not 0 < delta < 1:
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    drift = 1.0 - 2.0 * p
    value = (4.0 / drift) * max(m + k, math.log(1.0 / delta) / drift)
    # Absorb the last-bit error of 1 - 2p before rounding up.
    return math.ceil(value * (1.0 - 1e-12))


def empirical_visit_success(
    cfg: WalkConfig, m: int, horizon: int, trials: int, rng: np.random.Generator
) -> float:
    """Fraction of independent walks with at least m visits to 1 within `horizon` steps."""
    _check_horizon(horizon)
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    successes = 0
    for offset in range(0, trials, TRIAL_BATCH):
        batch = min(TRIAL_BATCH, trials - offset)
        walled = _reflect(_free_paths(cfg, horizon, batch, rng))
        visits = np.count_nonzero(walled[:, 1:] == 1, axis=1)
        successes += int(np.count_nonzero(visits >= m))
    return successes / trials


def coverage_time(trace: Iterable[int], n: int) -> int | None:
    """First t such that every agent appears among trace[0..t], or None."""
    seen: set[int] = set()
    for t, agent in enumerate(trace):
        seen.add(int(agent))
        if len(seen) == n:
            return t
    return None


def uniform_coverage_times(n: int, replicates: int, rng: np.random.Generator) -> IntArray:
    """Coverage times of uniform selection over n agents, one per replicate."""
    if n < 1 or replicates < 1:
        raise DomainError(f"Need n >= 1 and replicates >= 1, got n={n}, replicates={replicates}")
    horizon = max(n, math.ceil(n * math.log(n) + 10 * n))
    draws = rng.integers(0, n, size=(replicates, horizon))
    first = np.full((replicates, n), -1, dtype=np.int64)
    for agent in range(n):
        hit = draws == agent
        found = hit.any(axis=1)
        first[found, agent] = hit[found].argmax(axis=1)
    times: IntArray = first.max(axis=1)
    incomplete = np.flatnonzero((first < 0).any(axis=1))
    for row in incomplete:
        seen = set(draws[row].tolist())
        t = horizon - 1
        while len(seen) < n:
            t += 1
            seen.add(int(rng.integers(0, n)))
        times[row] = t
    logger.debug("Uniform coverage sampled", n=n, replicates=replicates, extended=len(incomplete))
    return times


def left_or_hold_fraction(totals: npt.NDArray[np.float64], start: int = 0) -> float:
    """Fraction of transitions from `start` on where the interval index of s_t decreases or holds at 1."""
    indices = [interval_index(float(s)) for s in totals[start:]]
    if len(indices) < 2:
        return 1.0
    good = sum(1 for a, b in zip(indices, indices[1:], strict=False) if b < a or a == b == 1)
    return good / (len(indices) - 1)


# 🎟️🎲🔚
