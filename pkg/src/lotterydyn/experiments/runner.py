#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Sweep execution: one task per (cell, replicate), run serially or on a process pool."""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
import itertools
import time

import attrs
from provide.foundation import logger
from provide.foundation.errors import error_boundary

from lotterydyn.common.rng import derive_seed
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import DynamicsParams, Trajectory
from lotterydyn.dynamics.policies import policy_from_name
from lotterydyn.experiments.models import ExperimentSpec, ResultRow

ProgressFn = Callable[[ResultRow], None]


@attrs.define(frozen=True)
class SweepTask:
    cell: int
    replicate: int
    policy: str
    n: int
    eps: float
    gamma: float
    seed: int
    max_steps: int
    record_timing: bool
    relative_threshold: bool = True


def plan_tasks(spec: ExperimentSpec) -> list[SweepTask]:
    """All tasks of a sweep in a fixed order, each with its derived seed."""
    tasks = []
    cells = itertools.product(spec.policies, spec.n, spec.eps, spec.gamma)
    for cell, (policy, n, eps, gamma) in enumerate(cells):
        for replicate in range(spec.replicates_for(policy)):
            tasks.append(
                SweepTask(
                    cell=cell,
                    replicate=replicate,
                    policy=policy,
                    n=n,
                    eps=eps,
                    gamma=gamma,
                    seed=derive_seed(spec.base_seed, cell, replicate),
                    max_steps=spec.max_steps,
                    record_timing=spec.record_timing,
                    relative_threshold=spec.relative_threshold,
                )
            )
    return tasks


def simulate_row(
    policy: str, n: int, eps: float, gamma: float, seed: int, max_steps: int, relative: bool = True
) -> Trajectory:
    """The run behind a result row: n unit-cost agents starting from (gamma, 0, ..., 0).

    With `relative`, lex and worst compare per-agent gaps with eps, so their runs stop at an
    eps-equilibrium. Otherwise they compare absolute utility gains and can stall.
    """
    cfg = ContestConfig.uniform(n, floor_action=gamma)
    x0 = ActionProfile(outputs=[gamma] + [0.0] * (n - 1))
    params = DynamicsParams(eps=eps, max_steps=max_steps, seed=seed, record_full=False)
    return run(cfg, x0, policy_from_name(policy, relative=relative), params)


def rerun_row(row: ResultRow, max_steps: int, relative: bool = True) -> Trajectory:
    return simulate_row(row.policy, row.n, row.eps, row.gamma, row.seed, max_steps, relative)


def execute_task(task: SweepTask) -> ResultRow:
    """Runs one task; a failure becomes an exhausted row with zero steps."""
    fallback = ResultRow(
        policy=task.policy,
        n=task.n,
        eps=task.eps,
        gamma=task.gamma,
        seed=task.seed,
        steps=0,
        outcome="exhausted",
        warmup_end=None,
        nanos=0,
    )
    with error_boundary(Exception, fallback=fallback, log_errors=True, reraise=False):
        started = time.perf_counter_ns()
        trajectory = simulate_row(
            task.policy, task.n, task.eps, task.gamma, task.seed, task.max_steps, task.relative_threshold
        )
        elapsed = time.perf_counter_ns() - started
        return attrs.evolve(
            fallback,
            steps=trajectory.outcome.steps,
            outcome=trajectory.outcome.tag,
            warmup_end=trajectory.warmup_end,
            nanos=elapsed if task.record_timing else 0,
        )
    return fallback


def run_experiment(spec: ExperimentSpec, progress: ProgressFn | None = None) -> list[ResultRow]:
    """Every (cell, replicate) of the sweep, sorted by (policy, n, eps, gamma, seed)."""
    tasks = plan_tasks(spec)
    logger.info("Running experiment", tasks=len(tasks), workers=spec.workers, base_seed=spec.base_seed)
    rows: list[ResultRow] = []
    if spec.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            chunk = max(1, len(tasks) // (spec.workers * 8))
            for row in pool.map(execute_task, tasks, chunksize=chunk):
                rows.append(row)
                if progress is not None:
                    progress(row)
    else:
        for task in tasks:
            row = execute_task(task)
            rows.append(row)
            if progress is not None:
                progress(row)
    rows.sort(key=ResultRow.sort_key)
    failed = sum(1 for r in rows if r.outcome == "exhausted")
    logger.info("Experiment finished", rows=len(rows), exhausted=failed)
    return rows


# 🎟️🎲🔚
