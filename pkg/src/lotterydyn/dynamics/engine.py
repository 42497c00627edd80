#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Sequential best-response dynamics."""

from collections import deque
import math

import numpy as np
import numpy.typing as npt
from provide.foundation import logger

from lotterydyn.common.rng import make_rng
from lotterydyn.contest.logic import best_response_to, gap_vector
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.cycles import CycleDetector
from lotterydyn.dynamics.models import (
    Converged,
    CycleDetected,
    CycleReport,
    DynamicsParams,
    Exhausted,
    Outcome,
    Trajectory,
)
from lotterydyn.dynamics.policies import SelectionPolicy, Uniform
from lotterydyn.dynamics.warmup import warm_condition
from lotterydyn.potential.logic import potential_of_array

UNIFORM_TWO_AGENTS = "uniform selection with n=2 has U=1/2; convergence guarantees do not apply"


def step(cfg: ContestConfig, x: ActionProfile, mover: int) -> ActionProfile:
    """Profile after `mover` switches to its best response."""
    x.check_against(cfg)
    x.check_index(mover)
    outputs = list(x.outputs)
    outputs[mover] = best_response_to(x.others_total(mover), cfg.costs[mover], cfg.floor_action)
    return ActionProfile(outputs=outputs)


def _apply_best_response(cfg: ContestConfig, x: npt.NDArray[np.float64], mover: int) -> None:
    others = math.fsum(x[:mover].tolist()) + math.fsum(x[mover + 1 :].tolist())
    x[mover] = best_response_to(others, cfg.costs[mover], cfg.floor_action)


def _replay_cycle(
    cfg: ContestConfig,
    policy: SelectionPolicy,
    detector: CycleDetector,
    x: npt.NDArray[np.float64],
    t: int,
    period: int,
    prev_mover: int | None,
    rng: np.random.Generator,
) -> tuple[ActionProfile, ...] | None:
    """States of the cycle through x, or None when `period` steps do not return to x.

    Only deterministic policies reach this, so `rng` is never drawn from.
    """
    n = cfg.n
    costs = cfg.cost_array
    y = x.copy()
    states: list[ActionProfile] = []
    for k in range(period):
        states.append(ActionProfile.from_array(y))
        mover = policy.choose(costs, cfg.floor_action, y, t + k, prev_mover, rng)
        if mover is None:
            return None
        _apply_best_response(cfg, y, mover)
        prev_mover = mover
    if detector.key(y, policy.phase(t + period, n)) != detector.key(x, policy.phase(t, n)):
        return None
    return tuple(states)


def run(cfg: ContestConfig, x0: ActionProfile, policy: SelectionPolicy, params: DynamicsParams) -> Trajectory:
    """Iterate best responses from x0 until an eps-equilibrium, a cycle, a stall or max_steps."""
    x0.check_against(cfg)
    n = cfg.n
    costs = cfg.cost_array
    a = cfg.floor_action
    homogeneous = cfg.homogeneous()
    scale = cfg.costs[0]
    active = policy.resolved(params.eps)
    rng = make_rng(params.seed)
    detector = CycleDetector() if active.deterministic else None

    warnings: list[str] = []
    if isinstance(active, Uniform) and n == 2:
        logger.warning("Uniform selection with two agents", n=n)
        warnings.append(UNIFORM_TWO_AGENTS)

    x = x0.as_array().copy()
    history: list[npt.NDArray[np.float64]] | deque[npt.NDArray[np.float64]]
    history = [] if params.record_full else deque(maxlen=params.ring_size)
    movers: list[int] = []
    totals: list[float] = []
    gaps: list[float] = []
    potentials: list[float] = []
    warm: list[bool] = []
    warmup_end: int | None = None
    cycle: CycleReport | None = None
    prev_mover: int | None = None
    outcome: Outcome

    logger.debug("Starting best-response run", policy=active.name, n=n, eps=params.eps, seed=params.seed)

    t = 0
    while True:
        history.append(x.copy())
        totals.append(float(x.sum()))
        gap = float(gap_vector(costs, a, x).max())
        gaps.append(gap)
        if homogeneous:
            y = scale * x
            potentials.append(potential_of_array(y))
            is_warm = warm_condition(y)
            warm.append(is_warm)
            if is_warm and warmup_end is None:
                warmup_end = t

        if gap <= params.eps:
            outcome = Converged(steps=t)
            break
        if detector is not None:
            phase = active.phase(t, n)
            first = detector.observe(x, t, phase)
            if first is not None:
                states = _replay_cycle(cfg, active, detector, x, t, t - first, prev_mover, rng)
                if states is None:
                    detector.reanchor(x, t, phase)
                else:
                    cycle = CycleReport(entry_time=first, period=t - first, cycle_states=states)
                    logger.debug("Cycle detected", policy=active.name, entry=first, period=cycle.period)
                    outcome = CycleDetected(start=first, period=cycle.period)
                    break
        if t >= params.max_steps:
            outcome = Exhausted(steps=t)
            break

        mover = active.choose(costs, a, x, t, prev_mover, rng)
        if mover is None:
            logger.warning("Selection policy stalled before reaching eps", policy=active.name, t=t, gap=gap)
            outcome = Exhausted(steps=t, stalled=True)
            break
        _apply_best_response(cfg, x, mover)
        movers.append(mover)
        prev_mover = mover
        t += 1

    logger.debug("Finished best-response run", policy=active.name, outcome=outcome.tag, steps=t)

    return Trajectory(
        profiles=np.array(history, dtype=np.float64),
        profile_offset=t + 1 - len(history),
        movers=np.array(movers, dtype=np.int64),
        totals=np.array(totals, dtype=np.float64),
        gaps=np.array(gaps, dtype=np.float64),
        potentials=np.array(potentials, dtype=np.float64) if homogeneous else None,
        warm=np.array(warm, dtype=np.bool_) if homogeneous else None,
        warmup_end=warmup_end,
        outcome=outcome,
        final=ActionProfile.from_array(x),
        cycle=cycle,
        warnings=tuple(warnings),
    )


# 🎟️🎲🔚
