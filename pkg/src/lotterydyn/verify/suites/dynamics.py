#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks for the best-response dynamics: known cycles, rates, warm-up laws and drift."""

import math

import numpy as np
import numpy.typing as npt

from lotterydyn.config.defaults import INVARIANT_TOLERANCE, RATIO_FLOOR
from lotterydyn.contest.logic import improvement_vector
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.cycles import log_grid, reverse_chain_intervals
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import Converged, CycleDetected, DynamicsParams, Exhausted, Trajectory
from lotterydyn.dynamics.policies import (
    RoundRobin,
    SelectionPolicy,
    Uniform,
    WeightedCustom,
    policy_from_name,
    uniform_weights,
)
from lotterydyn.dynamics.search import search_cycles
from lotterydyn.dynamics.warmup import ratio_floor_start, warmup_persists
from lotterydyn.potential.logic import (
    gamma_n_agent,
    geometric_mean_sequence,
    interval_index,
    two_agent_predicted_steps,
)
from lotterydyn.verify.logic import CheckOutcome, VerifyScale, check
from lotterydyn.walk.logic import left_or_hold_fraction

PERIOD_SIX_STATES = (
    (0.0, 0.00001),
    (0.00315, 0.00001),
    (0.00315, 0.17439),
    (0.24321, 0.17439),
    (0.24321, 1.31631),
    (0.0, 1.31631),
)
PERIOD_FOUR_STATES = ((0.0, 0.25), (0.25, 0.25), (0.25, 1.0), (0.0, 1.0))
RATE_WINDOW = (-4.0, 6.0)
SKEWED_WEIGHTS = (0.3, 0.2, 0.2, 0.15, 0.15)


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(2**63))


def random_start(rng: np.random.Generator, n: int, a: float, kind: int) -> ActionProfile:
    """Starting profiles of three shapes: (a, 0, ..., 0), small outputs, or outputs up to 3/2."""
    if kind == 0:
        return ActionProfile(outputs=(a,) + (0.0,) * (n - 1))
    top = 0.3 if kind == 1 else 1.5
    values = rng.uniform(0.0, top, n)
    values[rng.random(n) < 0.3] = 0.0
    return ActionProfile.from_array(values)


def _seeded_run(
    rng: np.random.Generator, index: int, policy: SelectionPolicy, record_full: bool = False
) -> tuple[ActionProfile, float, Trajectory]:
    n = int(rng.integers(3, 9))
    a = float(10 ** rng.uniform(-8.0, math.log10(0.25)))
    x0 = random_start(rng, n, a, index % 3)
    cfg = ContestConfig.uniform(n, floor_action=a)
    params = DynamicsParams(eps=1e-8, max_steps=20_000, seed=_seed(rng), record_full=record_full)
    return x0, a, run(cfg, x0, policy, params)


@check("dynamics", "period_six_cycle", "Costs (1, 0.1) cycle with period 6 through the tabulated states")
def period_six_cycle(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    cfg = ContestConfig(n=2, costs=(1.0, 0.1), floor_action=1e-5)
    trajectory = run(cfg, ActionProfile(outputs=(0.0, 1e-5)), RoundRobin(), DynamicsParams(eps=1e-10))
    out.expect(trajectory.outcome == CycleDetected(start=0, period=6), f"outcome {trajectory.outcome}")
    if trajectory.cycle is not None:
        pairs = zip(trajectory.cycle.cycle_states, PERIOD_SIX_STATES, strict=False)
        for t, (state, expected) in enumerate(pairs):
            rounded = tuple(round(v, 5) for v in state.outputs)
            out.expect(rounded == expected, f"t={t}: {rounded} != {expected}")
    return out


@check("dynamics", "period_four_cycle", "Costs (1, 4/25) with a = 1/4 cycle with period 4")
def period_four_cycle(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    cfg = ContestConfig(n=2, costs=(1.0, 4.0 / 25.0), floor_action=0.25)
    trajectory = run(cfg, ActionProfile(outputs=(0.0, 0.25)), RoundRobin(), DynamicsParams(eps=1e-10))
    out.expect(trajectory.outcome == CycleDetected(start=0, period=4), f"outcome {trajectory.outcome}")
    if trajectory.cycle is not None:
        pairs = zip(trajectory.cycle.cycle_states, PERIOD_FOUR_STATES, strict=False)
        for t, (state, expected) in enumerate(pairs):
            drift = max(abs(a - b) for a, b in zip(state.outputs, expected, strict=True))
            out.expect(drift <= 1e-12, f"t={t}: {state.outputs} != {expected}")
    return out


@check(
    "dynamics", "two_agent_rate", "Alternating two-agent runs converge in lglg(1/eps) + lglg(1/gamma) + O(1)"
)
def two_agent_rate(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    exponents = list(range(4, 41, scale.exponent_stride))
    if exponents[-1] != 40:
        exponents.append(40)
    for e_eps in exponents:
        for e_gamma in exponents:
            eps, gamma = 2.0**-e_eps, 2.0**-e_gamma
            cfg = ContestConfig.uniform(2, floor_action=gamma * gamma)
            x0 = ActionProfile(outputs=(gamma * gamma, 0.0))
            trajectory = run(
                cfg, x0, RoundRobin(offset=1), DynamicsParams(eps=eps, max_steps=500, record_full=False)
            )
            predicted = two_agent_predicted_steps(eps, gamma)
            steps = trajectory.outcome.steps
            ok = isinstance(trajectory.outcome, Converged) and (
                predicted + RATE_WINDOW[0] <= steps <= predicted + RATE_WINDOW[1]
            )
            out.expect(ok, f"eps=2^-{e_eps}, gamma=2^-{e_gamma}: {steps} steps, predicted {predicted:.2f}")
    return out


@check("dynamics", "geometric_reduction", "Square roots of alternating outputs follow z -> sqrt(z (1 - z))")
def geometric_reduction(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for gamma in (0.3, 0.1, 1e-2, 1e-4, 1e-8, 1e-12):
        cfg = ContestConfig.uniform(2, floor_action=gamma * gamma)
        x0 = ActionProfile(outputs=(gamma * gamma, 0.0))
        trajectory = run(cfg, x0, RoundRobin(offset=1), DynamicsParams(eps=1e-12, max_steps=200))
        z = geometric_mean_sequence(gamma, trajectory.steps)
        for t in range(1, trajectory.steps + 1):
            mover = int(trajectory.movers[t - 1])
            root = math.sqrt(float(trajectory.profiles[t][mover]))
            out.expect(abs(root - z[t]) <= 1e-12, f"gamma={gamma}, t={t}: sqrt(x)={root}, z={z[t]}")
    return out


def _post_warmup_violations(trajectory: Trajectory) -> tuple[bool, bool]:
    start = ratio_floor_start(trajectory)
    if start is None:
        return True, True
    totals = trajectory.totals[start:]
    ratios_ok = bool((totals[1:] >= (RATIO_FLOOR - INVARIANT_TOLERANCE) * totals[:-1]).all())
    indices = np.array([interval_index(float(s)) for s in totals])
    drift_ok = bool((indices[1:] <= indices[:-1] + 1).all())
    return ratios_ok, drift_ok


@check(
    "dynamics",
    "warmup_laws",
    "Warm-up is absorbing, starts above gamma, and totals shrink by at most sqrt(3)/2",
)
def warmup_laws(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    policies: tuple[SelectionPolicy, ...] = (Uniform(), RoundRobin(), policy_from_name("best"))
    for index in range(scale.seeded_runs):
        policy = policies[index % len(policies)]
        x0, a, trajectory = _seeded_run(rng, index, policy)
        label = f"run {index} ({policy.name}, x0={[round(v, 6) for v in x0.outputs]}, a={a:.3g})"
        out.expect(warmup_persists(trajectory), f"{label}: left the warm region after T_warm")
        if trajectory.warmup_end is None:
            continue
        floor = gamma_n_agent(x0, a)
        total = float(trajectory.totals[trajectory.warmup_end])
        out.expect(total >= floor * (1.0 - INVARIANT_TOLERANCE), f"{label}: s_Twarm={total} < gamma={floor}")
        ratios_ok, drift_ok = _post_warmup_violations(trajectory)
        out.expect(ratios_ok, f"{label}: total output fell by more than sqrt(3)/2 in one step")
        out.expect(drift_ok, f"{label}: interval index rose by more than one")
    return out


def _fixed_weights(weights: tuple[float, ...]) -> WeightedCustom:
    w = np.asarray(weights)
    return WeightedCustom(weight_fn=lambda t, x, prev: w, lower=float(w.min()), upper=float(w.max()))


@check("dynamics", "interval_drift_walk", "Post-warm-up intervals move left or hold at 1 w.p. >= 1 - U")
def interval_drift_walk(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    cases = (
        (5, uniform_weights(5)),
        (8, uniform_weights(8)),
        (len(SKEWED_WEIGHTS), _fixed_weights(SKEWED_WEIGHTS)),
    )
    runs = max(10, scale.seeded_runs // len(cases))
    for n, policy in cases:
        good = 0.0
        transitions = 0
        for index in range(runs):
            a = float(10 ** rng.uniform(-10.0, -2.0))
            x0 = random_start(rng, n, a, index % 3)
            cfg = ContestConfig.uniform(n, floor_action=a)
            params = DynamicsParams(eps=1e-10, max_steps=20_000, seed=_seed(rng), record_full=False)
            trajectory = run(cfg, x0, policy, params)
            if trajectory.warmup_end is None:
                continue
            count = len(trajectory.totals) - trajectory.warmup_end - 1
            if count <= 0:
                continue
            good += left_or_hold_fraction(trajectory.totals, trajectory.warmup_end) * count
            transitions += count
        fraction = good / transitions if transitions else 1.0
        out.expect(
            fraction >= 1.0 - policy.upper,
            f"U={policy.upper}: left-or-hold fraction {fraction:.4f} over {transitions} transitions",
        )
    return out


def _same_run(first: Trajectory, second: Trajectory) -> bool:
    arrays: list[tuple[npt.NDArray[np.generic] | None, npt.NDArray[np.generic] | None]] = [
        (first.profiles, second.profiles),
        (first.movers, second.movers),
        (first.totals, second.totals),
        (first.gaps, second.gaps),
        (first.potentials, second.potentials),
    ]
    same_arrays = all(a is b if a is None or b is None else np.array_equal(a, b) for a, b in arrays)
    return same_arrays and first.outcome == second.outcome and first.warmup_end == second.warmup_end


@check("dynamics", "determinism", "Identical inputs and seed give bit-identical trajectories")
def determinism(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for index in range(max(5, scale.seeded_runs // 10)):
        n = int(rng.integers(2, 12))
        cfg = ContestConfig.uniform(n, floor_action=1e-6)
        x0 = random_start(rng, n, 1e-6, index % 3)
        params = DynamicsParams(eps=1e-9, max_steps=5_000, seed=_seed(rng))
        policy: SelectionPolicy = uniform_weights(n) if index % 2 and n > 2 else Uniform()
        out.expect(
            _same_run(run(cfg, x0, policy, params), run(cfg, x0, policy, params)), f"run {index} differs"
        )
    return out


@check(
    "dynamics",
    "policies_converge",
    "Every selection policy reaches an eps-equilibrium or stalls below its threshold",
)
def policies_converge(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    eps = 1e-8
    variants = [(name, True) for name in ("unif", "round", "lex", "worst", "best")]
    variants += [("lex", False), ("worst", False)]
    for name, relative in variants:
        label = f"{name}{'' if relative else ' (absolute)'}"
        for n in (3, 5, 8):
            cfg = ContestConfig.uniform(n, floor_action=1e-6)
            x0 = ActionProfile(outputs=(1e-6,) + (0.0,) * (n - 1))
            params = DynamicsParams(eps=eps, max_steps=100_000, seed=_seed(rng), record_full=False)
            trajectory = run(cfg, x0, policy_from_name(name, relative=relative), params)
            outcome = trajectory.outcome
            if isinstance(outcome, Converged):
                gap = float(trajectory.gaps[-1])
                out.expect(gap <= eps, f"{label}, n={n}: converged with gap {gap}")
            elif isinstance(outcome, Exhausted) and outcome.stalled and not relative:
                gains = improvement_vector(cfg.cost_array, cfg.floor_action, trajectory.final.as_array())
                out.expect(
                    float(gains.max()) <= eps, f"{label}, n={n}: stalled with an improvement {gains.max()}"
                )
            else:
                out.expect(False, f"{label}, n={n}: ended with {outcome}")
    return out


@check("dynamics", "cycle_search", "Reverse-chain floor actions for c2=0.01 cycle under forward simulation")
def cycle_search(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    c2 = 0.01
    intervals = reverse_chain_intervals(c2, depth=8)
    first = next((iv for iv in intervals if iv.agent == 0 and iv.depth == 1), None)
    out.expect(
        first is not None and math.isclose(first.lower, 0.010205, rel_tol=1e-3) and first.upper == 0.25,
        f"first agent-0 interval {first}",
    )
    result = search_cycles(c2, log_grid(1e-12, 1e-1, 60), depth=8, max_steps=10_000)
    out.expect(bool(result.confirmed), "no floor action on the grid produced a cycle")
    edges = [iv for iv in result.intervals if iv.agent == 1 and iv.depth > 0]
    for a in result.rejected:
        # Only grid points sitting on an interval edge may miss the overshoot by rounding.
        near_edge = any(
            min(abs(a - iv.lower) / iv.lower, abs(a - iv.upper) / iv.upper) <= 1e-9
            for iv in edges
            if iv.contains(a)
        )
        out.expect(near_edge, f"a={a} lies inside a reverse-chain interval but did not cycle")
    return out


# 🎟️🎲🔚
