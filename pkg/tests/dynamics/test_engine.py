#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from lotterydyn.common.exceptions import DomainError, ProfileError
from lotterydyn.config.defaults import RATIO_FLOOR, RING_BUFFER_SIZE
from lotterydyn.contest.logic import epsilon_gap
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import UNIFORM_TWO_AGENTS, run, step
from lotterydyn.dynamics.models import Converged, CycleDetected, DynamicsParams, Exhausted
from lotterydyn.dynamics.policies import Lexicographic, RoundRobin, Uniform, policy_from_name
from lotterydyn.dynamics.warmup import ratio_floor_start, warmup_persists
from lotterydyn.potential.logic import geometric_mean_sequence, two_agent_predicted_steps

PERIOD_SIX_STATES = [
    (0.0, 0.00001),
    (0.00315, 0.00001),
    (0.00315, 0.17439),
    (0.24321, 0.17439),
    (0.24321, 1.31631),
    (0.0, 1.31631),
]


class TestStep:
    def test_single_move(self, pair: ContestConfig, symmetric_quarter: ActionProfile) -> None:
        moved = step(pair, ActionProfile(outputs=(0.0, 0.25)), 0)
        assert moved.outputs == (0.25, 0.25)
        assert step(pair, symmetric_quarter, 1) == symmetric_quarter

    def test_bad_mover(self, pair: ContestConfig, symmetric_quarter: ActionProfile) -> None:
        with pytest.raises(ProfileError):
            step(pair, symmetric_quarter, 2)


class TestParams:
    @pytest.mark.parametrize(
        "kwargs", [{"eps": 0.0}, {"eps": 1e-3, "max_steps": 0}, {"eps": 1e-3, "ring_size": 0}]
    )
    def test_invalid(self, kwargs: dict[str, float]) -> None:
        with pytest.raises(DomainError):
            DynamicsParams(**kwargs)


class TestKnownCycles:
    def test_costs_one_and_a_tenth(self) -> None:
        cfg = ContestConfig(n=2, costs=(1.0, 0.1), floor_action=1e-5)
        trajectory = run(cfg, ActionProfile(outputs=(0.0, 1e-5)), RoundRobin(), DynamicsParams(eps=1e-10))

        assert trajectory.outcome == CycleDetected(start=0, period=6)
        assert trajectory.cycle is not None
        rounded = [tuple(round(v, 5) for v in s.outputs) for s in trajectory.cycle.cycle_states]
        assert rounded == PERIOD_SIX_STATES

    def test_cycle_states_survive_a_ring_buffer(self) -> None:
        cfg = ContestConfig(n=2, costs=(1.0, 0.1), floor_action=1e-5)
        params = DynamicsParams(eps=1e-10, record_full=False, ring_size=2)
        trajectory = run(cfg, ActionProfile(outputs=(0.0, 1e-5)), RoundRobin(), params)

        assert trajectory.outcome == CycleDetected(start=0, period=6)
        assert len(trajectory.profiles) == 2
        assert trajectory.cycle is not None
        rounded = [tuple(round(v, 5) for v in s.outputs) for s in trajectory.cycle.cycle_states]
        assert rounded == PERIOD_SIX_STATES

    def test_floor_action_quarter(self) -> None:
        cfg = ContestConfig(n=2, costs=(1.0, 4.0 / 25.0), floor_action=0.25)
        trajectory = run(cfg, ActionProfile(outputs=(0.0, 0.25)), RoundRobin(), DynamicsParams(eps=1e-10))

        assert trajectory.outcome == CycleDetected(start=0, period=4)
        assert trajectory.outcome.steps == 4
        states = [s.outputs for s in trajectory.cycle.cycle_states]
        expected = [(0.0, 0.25), (0.25, 0.25), (0.25, 1.0), (0.0, 1.0)]
        for got, want in zip(states, expected, strict=True):
            assert got == pytest.approx(want, abs=1e-12)


class TestTwoAgentAlternation:
    def test_follows_geometric_mean_sequence(self) -> None:
        gamma = 1e-4
        cfg = ContestConfig.uniform(2, floor_action=gamma * gamma)
        x0 = ActionProfile(outputs=(gamma * gamma, 0.0))
        trajectory = run(cfg, x0, RoundRobin(offset=1), DynamicsParams(eps=1e-12, max_steps=200))

        z = geometric_mean_sequence(gamma, trajectory.steps)
        assert isinstance(trajectory.outcome, Converged)
        for t in range(1, trajectory.steps + 1):
            mover = int(trajectory.movers[t - 1])
            assert math.sqrt(trajectory.profiles[t][mover]) == pytest.approx(z[t], abs=1e-12)

    @pytest.mark.parametrize(("e_eps", "e_gamma"), [(4, 4), (10, 30), (40, 4), (40, 40)])
    def test_step_count_matches_prediction(self, e_eps: int, e_gamma: int) -> None:
        eps, gamma = 2.0**-e_eps, 2.0**-e_gamma
        cfg = ContestConfig.uniform(2, floor_action=gamma * gamma)
        trajectory = run(
            cfg,
            ActionProfile(outputs=(gamma * gamma, 0.0)),
            RoundRobin(offset=1),
            DynamicsParams(eps=eps, max_steps=500),
        )

        predicted = two_agent_predicted_steps(eps, gamma)
        assert isinstance(trajectory.outcome, Converged)
        assert predicted - 4 <= trajectory.outcome.steps <= predicted + 6


class TestRunOutcomes:
    def test_already_at_equilibrium(self, pair: ContestConfig, symmetric_quarter: ActionProfile) -> None:
        trajectory = run(pair, symmetric_quarter, RoundRobin(), DynamicsParams(eps=1e-9))

        assert trajectory.outcome == Converged(steps=0)
        assert trajectory.steps == 0
        assert trajectory.final == symmetric_quarter

    def test_step_cap(self) -> None:
        cfg = ContestConfig.uniform(4, floor_action=1e-10)
        x0 = ActionProfile(outputs=(1e-10, 0.0, 0.0, 0.0))
        trajectory = run(cfg, x0, Uniform(), DynamicsParams(eps=1e-12, max_steps=5, seed=3))

        assert trajectory.outcome == Exhausted(steps=5)
        assert len(trajectory.totals) == 6

    def test_policy_stall_is_reported(self) -> None:
        cfg = ContestConfig.uniform(3, floor_action=1e-3)
        x0 = ActionProfile(outputs=(0.5, 0.0, 0.0))
        trajectory = run(cfg, x0, Lexicographic(threshold=1.0), DynamicsParams(eps=1e-6))

        assert trajectory.outcome == Exhausted(steps=0, stalled=True)
        assert trajectory.summary()["stalled"] is True

    def test_uniform_with_two_agents_warns(self, pair: ContestConfig) -> None:
        trajectory = run(pair, ActionProfile(outputs=(0.1, 0.0)), Uniform(), DynamicsParams(eps=1e-6, seed=1))
        assert UNIFORM_TWO_AGENTS in trajectory.warnings

    @pytest.mark.parametrize("name", ["unif", "round", "lex", "worst", "best"])
    def test_every_policy_reaches_eps(self, name: str) -> None:
        cfg = ContestConfig.uniform(5, floor_action=1e-6)
        x0 = ActionProfile(outputs=(1e-6, 0.0, 0.0, 0.0, 0.0))
        policy = policy_from_name(name, relative=True)
        trajectory = run(cfg, x0, policy, DynamicsParams(eps=1e-8, max_steps=100_000, seed=7))

        assert isinstance(trajectory.outcome, Converged)
        assert epsilon_gap(cfg, trajectory.final) <= 1e-8


class TestRecording:
    def test_ring_buffer_keeps_recent_profiles(self) -> None:
        cfg = ContestConfig.uniform(6, floor_action=1e-10)
        x0 = ActionProfile(outputs=(1e-10,) + (0.0,) * 5)
        params = DynamicsParams(eps=1e-12, max_steps=500, seed=11, record_full=False)
        trajectory = run(cfg, x0, Uniform(), params)

        last = trajectory.steps
        assert len(trajectory.profiles) == min(last + 1, RING_BUFFER_SIZE)
        assert trajectory.profile(last) == trajectory.final
        assert len(trajectory.gaps) == last + 1
        if last + 1 > RING_BUFFER_SIZE:
            with pytest.raises(IndexError):
                trajectory.profile(0)

    def test_same_seed_same_run(self) -> None:
        cfg = ContestConfig.uniform(5, floor_action=1e-8)
        x0 = ActionProfile(outputs=(1e-8, 0.0, 0.0, 0.0, 0.0))
        first = run(cfg, x0, Uniform(), DynamicsParams(eps=1e-8, seed=99))
        second = run(cfg, x0, Uniform(), DynamicsParams(eps=1e-8, seed=99))

        assert np.array_equal(first.movers, second.movers)
        assert first.outcome == second.outcome

    def test_heterogeneous_runs_have_no_potential(self) -> None:
        cfg = ContestConfig(n=3, costs=(1.0, 1.5, 2.0), floor_action=1e-3)
        trajectory = run(cfg, ActionProfile(outputs=(1e-3, 0.0, 0.0)), RoundRobin(), DynamicsParams(eps=1e-6))

        assert trajectory.potentials is None
        assert trajectory.warm is None
        assert trajectory.warmup_end is None


class TestPostWarmupLaws:
    @settings(max_examples=30)
    @given(
        n=st.integers(min_value=3, max_value=8),
        log_a=st.floats(min_value=-8.0, max_value=math.log10(0.25)),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_uniform_runs(self, n: int, log_a: float, seed: int) -> None:
        a = 10.0**log_a
        cfg = ContestConfig.uniform(n, floor_action=a)
        x0 = ActionProfile(outputs=(a,) + (0.0,) * (n - 1))
        trajectory = run(cfg, x0, Uniform(), DynamicsParams(eps=1e-8, max_steps=20_000, seed=seed))

        assert warmup_persists(trajectory)
        start = trajectory.warmup_end
        if start is not None:
            totals = trajectory.totals[start:]
            assert (totals[1:] >= (RATIO_FLOOR - 1e-12) * totals[:-1]).all()
            assert (np.diff(trajectory.potentials[start:]) <= 1e-12).all()

    def test_ratio_floor_waits_for_a_best_response(self) -> None:
        cfg = ContestConfig.uniform(5, floor_action=1e-6)
        x0 = ActionProfile(outputs=(0.116854, 0.0, 0.001974, 0.0, 0.0))
        trajectory = run(cfg, x0, RoundRobin(), DynamicsParams(eps=1e-8, max_steps=5_000))

        assert trajectory.warmup_end == 0
        # Agent 0 drops from 0.116854 to sqrt(0.001974) - 0.001974, far below the floor.
        assert trajectory.totals[1] < RATIO_FLOOR * trajectory.totals[0]
        assert trajectory.totals[1] / trajectory.totals[0] == pytest.approx(0.3739, abs=1e-4)

        start = ratio_floor_start(trajectory)
        assert start == 1
        totals = trajectory.totals[start:]
        assert (totals[1:] >= (RATIO_FLOOR - 1e-12) * totals[:-1]).all()

    def test_ratio_floor_start_follows_warm_up(self) -> None:
        cfg = ContestConfig.uniform(4, floor_action=1e-6)
        x0 = ActionProfile(outputs=(1e-6, 0.0, 0.0, 0.0))
        trajectory = run(cfg, x0, RoundRobin(), DynamicsParams(eps=1e-8))

        assert trajectory.warmup_end is not None
        assert trajectory.warmup_end >= 1
        assert ratio_floor_start(trajectory) == trajectory.warmup_end


# 🎟️🎲🔚
