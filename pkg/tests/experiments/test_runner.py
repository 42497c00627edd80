#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import attrs
import pytest

from lotterydyn.common.rng import derive_seed
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import DynamicsParams
from lotterydyn.dynamics.policies import policy_from_name
from lotterydyn.experiments.models import ExperimentSpec, ResultRow
from lotterydyn.experiments.output import emit_csv
from lotterydyn.experiments.runner import SweepTask, execute_task, plan_tasks, rerun_row, run_experiment

SMALL = ExperimentSpec(
    policies=["unif", "round", "lex", "worst", "best"],
    n=[3, 4],
    eps=[1e-4],
    gamma=[1e-3],
    replicates=3,
    base_seed=17,
    max_steps=50_000,
)


class TestPlanTasks:
    def test_counts_and_seeds(self) -> None:
        tasks = plan_tasks(SMALL)

        # unif runs 3 replicates per cell, the four deterministic policies once.
        assert len(tasks) == 2 * 3 + 4 * 2
        first = tasks[0]
        assert (first.policy, first.n, first.replicate) == ("unif", 3, 0)
        assert first.seed == derive_seed(17, 0, 0)
        assert tasks[1].seed == derive_seed(17, 0, 1)
        assert len({t.seed for t in tasks}) == len(tasks)

    def test_seed_depends_on_base(self) -> None:
        other = plan_tasks(attrs.evolve(SMALL, base_seed=18))
        assert [t.seed for t in other] != [t.seed for t in plan_tasks(SMALL)]


class TestRunExperiment:
    def test_rows_are_sorted_and_converge(self) -> None:
        rows = run_experiment(SMALL)

        assert len(rows) == len(plan_tasks(SMALL))
        assert rows == sorted(rows, key=ResultRow.sort_key)
        assert all(r.outcome == "converged" for r in rows)
        assert all(r.nanos == 0 for r in rows)

    def test_same_seed_same_bytes(self) -> None:
        assert emit_csv(run_experiment(SMALL)) == emit_csv(run_experiment(SMALL))

    def test_process_pool_matches_serial(self) -> None:
        pooled = attrs.evolve(SMALL, workers=2)
        assert emit_csv(run_experiment(pooled)) == emit_csv(run_experiment(SMALL))

    def test_progress_callback(self) -> None:
        seen: list[ResultRow] = []
        run_experiment(attrs.evolve(SMALL, policies=["round"]), progress=seen.append)
        assert len(seen) == 2

    def test_timing(self) -> None:
        rows = run_experiment(attrs.evolve(SMALL, policies=["lex"], record_timing=True))
        assert all(r.nanos > 0 for r in rows)

    def test_rows_can_be_rerun(self) -> None:
        for row in run_experiment(attrs.evolve(SMALL, policies=["unif"])):
            trajectory = rerun_row(row, SMALL.max_steps)
            assert trajectory.outcome.steps == row.steps
            assert trajectory.gaps[-1] <= row.eps


class TestExecuteTask:
    def test_failure_becomes_exhausted_row(self) -> None:
        task = SweepTask(
            cell=0,
            replicate=0,
            policy="unif",
            n=3,
            eps=1e-4,
            gamma=0.5,
            seed=1,
            max_steps=10,
            record_timing=False,
        )
        row = execute_task(task)
        assert (row.outcome, row.steps, row.warmup_end) == ("exhausted", 0, None)

    @pytest.mark.parametrize("policy", ["lex", "worst"])
    def test_threshold_mode_reaches_the_policy(self, policy: str) -> None:
        absolute = attrs.evolve(SMALL, policies=[policy], relative_threshold=False)
        task = plan_tasks(absolute)[0]
        assert not task.relative_threshold

        cfg = ContestConfig.uniform(task.n, floor_action=task.gamma)
        x0 = ActionProfile(outputs=[task.gamma] + [0.0] * (task.n - 1))
        params = DynamicsParams(eps=task.eps, max_steps=task.max_steps, seed=task.seed, record_full=False)
        expected = run(cfg, x0, policy_from_name(policy), params)

        row = execute_task(task)
        assert (row.steps, row.outcome) == (expected.outcome.steps, expected.outcome.tag)
        assert rerun_row(row, SMALL.max_steps, relative=False).outcome == expected.outcome

    @pytest.mark.parametrize("policy", ["round", "best"])
    def test_deterministic_rows(self, policy: str) -> None:
        task = plan_tasks(attrs.evolve(SMALL, policies=[policy]))[0]
        assert execute_task(task) == execute_task(task)


# 🎟️🎲🔚
