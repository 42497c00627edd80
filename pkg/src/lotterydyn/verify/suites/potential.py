#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks for the potential: its bounds, derivatives, descent and the two-agent sequence."""

import math

import numpy as np

from lotterydyn.config.defaults import INVARIANT_TOLERANCE
from lotterydyn.contest.logic import equilibrium_profile
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import step
from lotterydyn.dynamics.policies import RoundRobin, SelectionPolicy, Uniform, policy_from_name
from lotterydyn.potential.logic import (
    complement_distance_to_equilibrium,
    convexity_modulus,
    distance_to_equilibrium,
    geometric_mean_hitting_time,
    gradient_of_array,
    locate_interval,
    numeric_gradient,
    numeric_hessian,
    per_agent_next_potential,
    potential,
    potential_batch,
    potential_hessian_eigs,
    potential_naive,
    potential_of_array,
    potential_report,
    smoothness_modulus,
    two_agent_predicted_steps,
)
from lotterydyn.verify.logic import CheckOutcome, VerifyScale, check
from lotterydyn.verify.suites.dynamics import _seeded_run

DERIVATIVE_TOL = 1e-6
BATCH = 10_000


def random_profiles(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """Non-negative (count, n) profiles with totals uniform on [0, 1); a third have zeroed entries."""
    shares = rng.dirichlet(np.ones(n), size=count)
    totals = rng.uniform(0.0, 1.0, size=(count, 1))
    profiles = shares * totals
    sparse = rng.random(count) < 1.0 / 3.0
    profiles[sparse] *= rng.random((int(sparse.sum()), n)) < 0.5
    return profiles


@check("potential", "equilibrium_minimum", "f vanishes at x* and the fast and naive forms agree")
def equilibrium_minimum(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for n in range(2, 51):
        star = equilibrium_profile(ContestConfig.uniform(n, floor_action=0.25))
        value = potential(star)
        out.expect(abs(value) <= 1e-12, f"f(x*)={value} for n={n}")
    for _ in range(max(100, scale.random_profiles // 100)):
        n = int(rng.integers(2, 21))
        x = ActionProfile.from_array(random_profiles(rng, n, 1)[0])
        fast, naive = potential(x), potential_naive(x)
        out.expect(abs(fast - naive) <= 1e-12, f"pairwise rewrite drifts by {abs(fast - naive)} at n={n}")
    return out


@check("potential", "potential_bounds", "Range, low-mass floor, convexity and smoothness bounds of f")
def potential_bounds(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    sizes = range(2, 21)
    per_n = max(1, scale.random_profiles // len(sizes))
    for n in sizes:
        for offset in range(0, per_n, BATCH):
            x = random_profiles(rng, n, min(BATCH, per_n - offset))
            f = potential_batch(x)
            sigma = x.sum(axis=1)
            threshold = 3.0 * (n - 1) / (4.0 * n)
            low = sigma <= threshold

            out.expect_all((f >= -INVARIANT_TOLERANCE) & (f <= 0.5), f"n={n}: f outside [0, 1/2]")
            floor = ((n - 1) / n) ** 3 / 40.0
            out.expect_all(f[low] >= floor - INVARIANT_TOLERANCE, f"n={n}: f below the low-mass floor")
            convex = 0.5 * convexity_modulus(n) * distance_to_equilibrium(x[~low])
            out.expect_all(f[~low] >= convex - INVARIANT_TOLERANCE, f"n={n}: f below the convexity bound")
            moduli = np.array([smoothness_modulus(n, float(s)) for s in sigma])
            smooth = 0.5 * moduli * complement_distance_to_equilibrium(x)
            out.expect_all(f <= smooth + INVARIANT_TOLERANCE, f"n={n}: f above the smoothness bound")
    return out


@check("potential", "derivatives", "Analytic gradient and Hessian eigenvalues match central differences")
def derivatives(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for n in (2, 3, 5, 10):
        low = 3.0 * (n - 1) / (4.0 * n)
        for _ in range(scale.derivative_points):
            x = rng.dirichlet(np.ones(n)) * rng.uniform(low, 1.0)
            grad = gradient_of_array(x)
            fd_grad = numeric_gradient(potential_of_array, x)
            error = float(np.abs(grad - fd_grad).max())
            out.expect(error <= DERIVATIVE_TOL, f"n={n}: gradient off by {error}")

            sigma = float(x.sum())
            eigs = potential_hessian_eigs(n, sigma)
            expected = np.sort([eigs.unit] * eigs.unit_multiplicity + [eigs.top] * eigs.top_multiplicity)
            measured = np.linalg.eigvalsh(numeric_hessian(gradient_of_array, x))
            error = float(np.abs(np.sort(measured) - expected).max())
            out.expect(
                error <= DERIVATIVE_TOL, f"n={n}, sigma={sigma:.4f}: Hessian eigenvalues off by {error}"
            )
    return out


@check(
    "potential",
    "geometric_mean_threshold",
    "z reaches 1/2 - eps within three steps below lglg(1/gamma) + lglg(1/eps)",
)
def geometric_mean_threshold(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    exponents = range(2, 65)
    for e_gamma in exponents:
        for e_eps in exponents:
            gamma, eps = 2.0**-e_gamma, 2.0**-e_eps
            hit = geometric_mean_hitting_time(gamma, eps)
            predicted = two_agent_predicted_steps(eps, gamma)
            out.expect(
                predicted - 3.0 <= hit <= predicted,
                f"gamma=2^-{e_gamma}, eps=2^-{e_eps}: hit at {hit}, predicted {predicted:.3f}",
            )
    return out


@check(
    "potential", "descent_along_runs", "f never rises after warm-up and contracts in expectation once s >= 1/4"
)
def descent_along_runs(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    policies: tuple[SelectionPolicy, ...] = (Uniform(), RoundRobin(), policy_from_name("best"))
    for index in range(max(10, scale.seeded_runs // 4)):
        policy = policies[index % len(policies)]
        _, _, trajectory = _seeded_run(rng, index, policy, record_full=True)
        start = trajectory.warmup_end
        if start is None or trajectory.potentials is None:
            continue
        n = trajectory.profiles.shape[1]
        f = trajectory.potentials[start:]
        out.expect_all(np.diff(f) <= INVARIANT_TOLERANCE, f"run {index} ({policy.name}): f increased")

        weights = np.full(n, 1.0 / n)
        stride = max(1, (len(f) - 1) // 20)
        for t in range(start, len(trajectory.totals), stride):
            x = trajectory.profile(t)
            if x.total < 0.25:
                continue
            report = potential_report(x, weights)
            out.expect(
                report.contraction_ok,
                f"run {index}, t={t}: E f_next={report.expected_next} vs f={report.value}",
            )
            mover = t % n
            closed = per_agent_next_potential(x, mover)
            direct = potential(step(ContestConfig.uniform(n, floor_action=0.25), x, mover))
            out.expect(
                abs(closed - direct) <= 1e-12, f"run {index}, t={t}: closed form off by {abs(closed - direct)}"
            )
    return out


@check("potential", "interval_examples", "Total-output intervals and the double-precision cap")
def interval_examples(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for s, index in ((0.3, 1), (0.25, 1), (0.2, 2), (0.125, 2), (1.0 / 32.0, 3), (0.1, 3), (2.0**-9, 4)):
        located = locate_interval(s)
        out.expect(located.index == index and not located.capped, f"s={s}: {located}, expected {index}")
    capped = locate_interval(5e-324)
    out.expect(capped.capped, f"s=5e-324 was not reported as capped: {capped}")
    for level in range(2, 11):
        lower = 0.5 ** (2 ** (level - 1) + 1)
        out.expect(locate_interval(lower).index == level, f"lower endpoint of interval {level} misplaced")
        out.expect(
            locate_interval(math.nextafter(lower, 0.0)).index == level + 1,
            f"value just below interval {level} misplaced",
        )
    return out


# 🎟️🎲🔚
