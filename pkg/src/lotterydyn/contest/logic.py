#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Utilities, best responses and approximate-equilibrium checks for lottery contests.

Agents are indexed from 0. The scalar functions take a ContestConfig and an
ActionProfile; the `*_vector` helpers work on raw numpy arrays and evaluate
every agent at once, which is what the dynamics loop uses.
"""

import math

import numpy as np
import numpy.typing as npt

from lotterydyn.common.exceptions import ContestConfigError, DomainError
from lotterydyn.config.defaults import INVARIANT_TOLERANCE
from lotterydyn.contest.models import ActionProfile, ContestConfig

FloatArray = npt.NDArray[np.float64]


def _checked(cfg: ContestConfig, x: ActionProfile, i: int) -> None:
    x.check_against(cfg)
    x.check_index(i)


def utility(cfg: ContestConfig, x: ActionProfile, i: int) -> float:
    """Winning probability minus cost: x_i / sum(x) - c_i x_i, with 1/n when nobody produces."""
    _checked(cfg, x, i)
    total = x.total
    share = x[i] / total if total > 0 else 1.0 / cfg.n
    return share - cfg.costs[i] * x[i]


def best_response_to(others: float, cost: float, floor_action: float) -> float:
    """Best response of an agent with cost `cost` facing a total output `others`."""
    if not math.isfinite(others) or others < 0:
        raise DomainError(f"Opponents' total output must be finite and non-negative, got {others}")
    if others == 0:
        return floor_action
    if cost * others > 1:
        return 0.0
    return max(0.0, math.sqrt(others / cost) - others)


def best_response(cfg: ContestConfig, x: ActionProfile, i: int) -> float:
    _checked(cfg, x, i)
    return best_response_to(x.others_total(i), cfg.costs[i], cfg.floor_action)


def deviation_utility_to(others: float, cost: float, floor_action: float) -> float:
    if others == 0:
        return max(0.0, 1.0 - cost * floor_action)
    if cost * others >= 1:
        return 0.0
    return (1.0 - math.sqrt(cost * others)) ** 2


def best_deviation_utility(cfg: ContestConfig, x: ActionProfile, i: int) -> float:
    """Utility agent i would get by switching to its best response."""
    _checked(cfg, x, i)
    return deviation_utility_to(x.others_total(i), cfg.costs[i], cfg.floor_action)


def others_vector(x: FloatArray) -> FloatArray:
    """Per-agent total of the other agents' outputs, without cancellation against x_i."""
    before = np.concatenate(([0.0], np.cumsum(x)[:-1]))
    after = np.concatenate((np.cumsum(x[::-1])[::-1][1:], [0.0]))
    result: FloatArray = before + after
    return result


def utility_vector(costs: FloatArray, x: FloatArray) -> FloatArray:
    total = float(x.sum())
    share = x / total if total > 0 else np.full_like(x, 1.0 / len(x))
    result: FloatArray = share - costs * x
    return result


def deviation_utility_vector(costs: FloatArray, floor_action: float, others: FloatArray) -> FloatArray:
    root = np.sqrt(np.minimum(costs * others, 1.0))
    deviation = (1.0 - root) ** 2
    result: FloatArray = np.where(others == 0, np.maximum(0.0, 1.0 - costs * floor_action), deviation)
    return result


def gap_vector(costs: FloatArray, floor_action: float, x: FloatArray) -> FloatArray:
    """Per-agent multiplicative shortfall 1 - u_i / d_i, clamped at 0."""
    current = utility_vector(costs, x)
    best = deviation_utility_vector(costs, floor_action, others_vector(x))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio_gap = np.maximum(0.0, 1.0 - current / best)
    degenerate = np.where(current >= 0, 0.0, np.inf)
    result: FloatArray = np.where(best > 0, ratio_gap, degenerate)
    return result


def improvement_vector(costs: FloatArray, floor_action: float, x: FloatArray) -> FloatArray:
    """Absolute utility gain each agent would get by best-responding."""
    best = deviation_utility_vector(costs, floor_action, others_vector(x))
    result: FloatArray = best - utility_vector(costs, x)
    return result


def epsilon_gap(cfg: ContestConfig, x: ActionProfile) -> float:
    """Smallest eps for which x is an eps-approximate equilibrium."""
    x.check_against(cfg)
    return float(gap_vector(cfg.cost_array, cfg.floor_action, x.as_array()).max())


def is_epsilon_equilibrium(cfg: ContestConfig, x: ActionProfile, eps: float) -> bool:
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps}")
    return epsilon_gap(cfg, x) <= eps


def equilibrium_profile(cfg: ContestConfig) -> ActionProfile:
    """Symmetric equilibrium (n-1)/(n^2 c) of a homogeneous contest."""
    if not cfg.homogeneous():
        raise ContestConfigError("equilibrium_profile requires a homogeneous contest", costs=cfg.costs)
    value = (cfg.n - 1) / (cfg.n**2 * cfg.costs[0])
    return ActionProfile(outputs=(value,) * cfg.n)


def heterogeneous_equilibrium(cfg: ContestConfig) -> ActionProfile:
    """Unique equilibrium for arbitrary costs.

    The active agents are the cheapest m for the largest m with
    c_(m) < sum_{j<=m} c_(j) / (m - 1); each plays s(1 - c_i s) with
    s = (m - 1) / sum_{j<=m} c_(j). Everyone else plays 0.
    """
    order = sorted(range(cfg.n), key=lambda i: cfg.costs[i])
    sorted_costs = [cfg.costs[i] for i in order]
    active = 2
    for m in range(3, cfg.n + 1):
        if sorted_costs[m - 1] * (m - 1) < math.fsum(sorted_costs[:m]):
            active = m
        else:
            break
    total = (active - 1) / math.fsum(sorted_costs[:active])
    outputs = [0.0] * cfg.n
    for rank, i in enumerate(order[:active]):
        outputs[i] = total * (1.0 - sorted_costs[rank] * total)
    return ActionProfile(outputs=outputs)


def rescale_unit_cost(cfg: ContestConfig, x: ActionProfile) -> tuple[ContestConfig, ActionProfile]:
    """Change of variable y = c x turning a homogeneous contest into one with unit cost."""
    if not cfg.homogeneous():
        raise ContestConfigError("rescale_unit_cost requires a homogeneous contest", costs=cfg.costs)
    x.check_against(cfg)
    c = cfg.costs[0]
    scaled_floor = c * cfg.floor_action
    if scaled_floor > 0.25:
        raise ContestConfigError(
            f"Rescaled floor action {scaled_floor} exceeds 1/4; pick a smaller floor action for cost {c}"
        )
    unit = ContestConfig.uniform(cfg.n, floor_action=scaled_floor)
    return unit, ActionProfile(outputs=[c * v for v in x.outputs])


def reverse_best_response(x_next: float, cost: float, larger: bool = False) -> float:
    """Opponent total S with sqrt(S / c) - S == x_next, the smaller root unless `larger`.

    Defined for 0 <= x_next <= 1/(4c), the range of the best response.
    """
    if cost <= 0:
        raise DomainError(f"Cost must be positive, got {cost}")
    disc = 1.0 - 4.0 * cost * x_next
    if x_next < 0 or disc < -INVARIANT_TOLERANCE:
        raise DomainError(
            f"{x_next} is not a best response for cost {cost}; it must lie in [0, {1 / (4 * cost)}]"
        )
    root = math.sqrt(max(disc, 0.0))
    if larger:
        return (1.0 + root) ** 2 / (4.0 * cost)
    # 1 - sqrt(1 - d) rewritten as d / (1 + sqrt(1 - d)) to keep tiny outputs accurate
    return (4.0 * cost * x_next / (1.0 + root)) ** 2 / (4.0 * cost)


# 🎟️🎲🔚
