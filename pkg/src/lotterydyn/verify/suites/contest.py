#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks for utilities, best responses and approximate equilibria."""

import math

import numpy as np

from lotterydyn.config.defaults import DEFAULT_GAMMA
from lotterydyn.contest.logic import (
    best_deviation_utility,
    best_response,
    best_response_to,
    epsilon_gap,
    equilibrium_profile,
    heterogeneous_equilibrium,
    improvement_vector,
    rescale_unit_cost,
    utility,
)
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.engine import step
from lotterydyn.verify.logic import CheckOutcome, VerifyScale, check

GRID_POINTS = 2001
TOL = 1e-12


@check("contest", "reference_values", "Hand-computed utilities, best responses and gaps")
def reference_values(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    pair = ContestConfig.uniform(2, floor_action=DEFAULT_GAMMA)
    sym = ActionProfile(outputs=(0.25, 0.25))
    out.expect(math.isclose(utility(pair, sym, 0), 0.25, abs_tol=TOL), "u_1(1/4, 1/4) != 1/4")
    out.expect(math.isclose(best_response(pair, sym, 0), 0.25, abs_tol=TOL), "BR to 1/4 != 1/4")
    out.expect(best_response_to(0.0, 1.0, 0.01) == 0.01, "BR to zero output is not the floor action")
    out.expect(best_response_to(2.0, 1.0, 0.01) == 0.0, "BR to output above 1/c is not zero")

    for cost in (0.01, 0.1, 1.0, 4.0):
        just_below = math.nextafter(1.0 / cost, 0.0)
        value = best_response_to(just_below, cost, 0.01)
        out.expect(abs(value) <= TOL, f"BR is discontinuous at S = 1/c for c={cost}: {value}")

    skewed = ActionProfile(outputs=(0.09, 0.21))
    gap = epsilon_gap(pair, skewed)
    out.expect(
        math.isclose(gap, 1.0 - 0.21 / (1.0 - math.sqrt(0.21)) ** 2, abs_tol=TOL), f"gap(0.09, 0.21)={gap}"
    )
    out.expect(abs(gap - 0.28445) < 1e-5, f"gap(0.09, 0.21)={gap}, expected about 0.28445")

    zero = ActionProfile(outputs=(0.0, 0.0))
    expected_zero_gap = 1.0 - 1.0 / (2.0 * (1.0 - DEFAULT_GAMMA))
    out.expect(
        math.isclose(epsilon_gap(pair, zero), expected_zero_gap, abs_tol=TOL), "gap at the zero profile"
    )

    triple = equilibrium_profile(ContestConfig.uniform(3, floor_action=DEFAULT_GAMMA))
    out.expect(all(math.isclose(v, 2.0 / 9.0, abs_tol=TOL) for v in triple.outputs), "n=3 equilibrium != 2/9")

    scaled_cfg, scaled = rescale_unit_cost(
        ContestConfig.uniform(2, floor_action=0.01, cost=2.0), ActionProfile(outputs=(0.125, 0.125))
    )
    out.expect(scaled.outputs == (0.25, 0.25), f"rescaled profile {scaled.outputs}")
    out.expect(math.isclose(scaled_cfg.floor_action, 0.02), f"rescaled floor action {scaled_cfg.floor_action}")
    return out


@check("contest", "deviation_dominates", "The best response beats every action on a dense grid")
def deviation_dominates(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    samples = max(50, scale.random_profiles // 200)
    for _ in range(samples):
        n = int(rng.integers(2, 8))
        costs = tuple(rng.uniform(0.1, 3.0, n).tolist())
        cfg = ContestConfig(n=n, costs=costs, floor_action=DEFAULT_GAMMA)
        x = ActionProfile.from_array(rng.uniform(0.0, 1.0, n) * rng.uniform(0.05, 1.5))
        i = int(rng.integers(n))
        others = x.others_total(i)
        if others <= 0:
            continue
        best = best_deviation_utility(cfg, x, i)
        grid = np.linspace(0.0, 1.0 / cfg.costs[i], GRID_POINTS)
        payoffs = np.where(grid + others > 0, grid / (grid + others), 1.0 / n) - cfg.costs[i] * grid
        out.expect(
            float(payoffs.max()) <= best + TOL,
            f"grid action beats the best response: n={n}, i={i}, {payoffs.max()} > {best}",
        )
        moved = list(x.outputs)
        moved[i] = best_response(cfg, x, i)
        realised = utility(cfg, ActionProfile(outputs=moved), i)
        out.expect(abs(realised - best) <= TOL, f"deviation utility {best} != utility at BR {realised}")
    return out


@check("contest", "equilibrium_gap", "Closed-form equilibria have zero gap")
def equilibrium_gap(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for n in range(2, 51):
        cfg = ContestConfig.uniform(n, floor_action=DEFAULT_GAMMA)
        star = equilibrium_profile(cfg)
        gap = epsilon_gap(cfg, star)
        out.expect(gap <= TOL, f"homogeneous equilibrium gap {gap} for n={n}")
        other = heterogeneous_equilibrium(cfg)
        drift = max(abs(a - b) for a, b in zip(star.outputs, other.outputs, strict=True))
        out.expect(drift <= TOL, f"equilibrium formulas disagree by {drift} for n={n}")

    for _ in range(max(20, scale.random_profiles // 1000)):
        n = int(rng.integers(2, 11))
        # Costs in [1, 1 + 1/n] keep every agent active and d_i >= 1/n^4.
        costs = tuple(rng.uniform(1.0, 1.0 + 1.0 / n, n).tolist())
        cfg = ContestConfig(n=n, costs=costs, floor_action=DEFAULT_GAMMA)
        gap = epsilon_gap(cfg, heterogeneous_equilibrium(cfg))
        out.expect(gap <= 1e-9, f"heterogeneous equilibrium gap {gap} for costs {costs}")
    return out


@check("contest", "rescale_commutes", "Rescaling to unit cost commutes with a best-response step")
def rescale_commutes(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for _ in range(max(50, scale.random_profiles // 200)):
        n = int(rng.integers(2, 8))
        cost = float(rng.uniform(0.5, 4.0))
        cfg = ContestConfig.uniform(n, floor_action=1e-3, cost=cost)
        x = ActionProfile.from_array(rng.uniform(0.0, 1.0 / cost, n))
        mover = int(rng.integers(n))
        unit_cfg, y = rescale_unit_cost(cfg, x)
        _, stepped_then_scaled = rescale_unit_cost(cfg, step(cfg, x, mover))
        scaled_then_stepped = step(unit_cfg, y, mover)
        drift = max(
            abs(a - b) for a, b in zip(stepped_then_scaled.outputs, scaled_then_stepped.outputs, strict=True)
        )
        out.expect(drift <= TOL, f"rescale and step disagree by {drift} (c={cost}, n={n})")
    return out


@check("contest", "lipschitz_bridge", "Near x*, no agent gains more than 3 sqrt(n) eps by deviating")
def lipschitz_bridge(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    accepted = 0
    while accepted < scale.lipschitz_samples:
        n = int(rng.integers(2, 21))
        radius = float(rng.uniform(0.0, 1.0)) / (n * math.sqrt(n))
        if radius == 0.0:
            continue
        direction = rng.normal(size=n)
        direction /= np.linalg.norm(direction)
        z = (n - 1) / n**2 + radius * direction
        if (z < 0).any():
            continue
        accepted += 1
        # Additive gain; the relative gap divides by d_i near 1/n^2 and is unbounded here.
        gain = float(improvement_vector(np.ones(n), DEFAULT_GAMMA, z).max())
        bound = 3.0 * math.sqrt(n) * radius
        out.expect(gain <= bound, f"deviation gain {gain} exceeds 3 sqrt(n) eps = {bound} at n={n}")
    return out


# 🎟️🎲🔚
