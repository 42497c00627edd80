#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""The best-response potential of a unit-cost contest and related quantities.

    f(x) = sigma^3 / 3 - sum_{i<j} x_i x_j + (1/6)(1 - 1/n)^3,    sigma = sum_i x_i

f vanishes exactly at the symmetric equilibrium and does not increase along
best-response moves. Profiles passed here are on the unit-cost scale.
"""

from collections.abc import Callable, Sequence
import math

import numpy as np
import numpy.typing as npt
from provide.foundation import logger

from lotterydyn.common.exceptions import DomainError
from lotterydyn.config.defaults import FINITE_DIFFERENCE_STEP, INVARIANT_TOLERANCE, KAPPA, WEIGHT_SUM_TOLERANCE
from lotterydyn.contest.models import ActionProfile
from lotterydyn.potential.models import HessianEigs, IntervalLocation, PotentialReport

FloatArray = npt.NDArray[np.float64]


def _offset(n: int) -> float:
    return (1.0 - 1.0 / n) ** 3 / 6.0


def potential_of_array(x: FloatArray) -> float:
    sigma = float(x.sum())
    pairwise = (sigma * sigma - float(x @ x)) / 2.0
    return sigma**3 / 3.0 - pairwise + _offset(len(x))


def potential_batch(profiles: FloatArray) -> FloatArray:
    """Potential of every row of an (m, n) array."""
    sigma = profiles.sum(axis=1)
    pairwise = (sigma * sigma - np.einsum("ij,ij->i", profiles, profiles)) / 2.0
    result: FloatArray = sigma**3 / 3.0 - pairwise + _offset(profiles.shape[1])
    return result


def potential(x: ActionProfile) -> float:
    return potential_of_array(x.as_array())


def potential_naive(x: ActionProfile) -> float:
    """Quadratic-time evaluation over explicit pairs."""
    values = x.outputs
    pairwise = math.fsum(values[i] * values[j] for i in range(len(values)) for j in range(i + 1, len(values)))
    return math.fsum(values) ** 3 / 3.0 - pairwise + _offset(len(values))


def gradient_of_array(arr: FloatArray) -> FloatArray:
    """df/dx_i = sigma^2 - sum_{j != i} x_j."""
    sigma = float(arr.sum())
    result: FloatArray = sigma * sigma - (sigma - arr)
    return result


def potential_gradient(x: ActionProfile) -> FloatArray:
    return gradient_of_array(x.as_array())


def potential_hessian(n: int, sigma: float) -> FloatArray:
    """2 sigma on the diagonal, 2 sigma - 1 elsewhere."""
    hessian = np.full((n, n), 2.0 * sigma - 1.0)
    np.fill_diagonal(hessian, 2.0 * sigma)
    return hessian


def potential_hessian_eigs(n: int, sigma: float) -> HessianEigs:
    if n < 2 or sigma < 0:
        raise DomainError(f"Need n >= 2 and sigma >= 0, got n={n}, sigma={sigma}")
    return HessianEigs(unit=1.0, unit_multiplicity=n - 1, top=2.0 * n * sigma - (n - 1), top_multiplicity=1)


def convexity_modulus(n: int) -> float:
    """Smallest Hessian eigenvalue of f on the region sigma >= 3(n-1)/(4n): min(1, (n-1)/2)."""
    if n < 2:
        raise DomainError(f"Need n >= 2, got {n}")
    return min(1.0, (n - 1) / 2.0)


def smoothness_modulus(n: int, sigma: float) -> float:
    """Largest curvature of f in the coordinates y_i = sigma - x_i between x* and a profile of total sigma.

    Equals 1 for n >= 3 and sigma <= 1; for two agents it grows to 4 sigma - 1 once sigma > 1/2.
    """
    if n < 2 or sigma < 0:
        raise DomainError(f"Need n >= 2 and sigma >= 0, got n={n}, sigma={sigma}")
    return max(1.0, 2.0 * n * sigma / (n - 1) ** 2 - 1.0 / (n - 1))


def distance_to_equilibrium(profiles: FloatArray) -> FloatArray:
    """Squared distances ||x - x*||^2 of each row of an (m, n) array."""
    n = profiles.shape[1]
    diff = profiles - (n - 1) / n**2
    result: FloatArray = np.einsum("ij,ij->i", diff, diff)
    return result


def complement_distance_to_equilibrium(profiles: FloatArray) -> FloatArray:
    """Squared distances ||y - y*||^2 with y_i = sigma - x_i, row by row."""
    n = profiles.shape[1]
    y = profiles.sum(axis=1, keepdims=True) - profiles
    diff = y - ((n - 1) / n) ** 2
    result: FloatArray = np.einsum("ij,ij->i", diff, diff)
    return result


def numeric_gradient(
    fn: Callable[[FloatArray], float], x: FloatArray, h: float = FINITE_DIFFERENCE_STEP
) -> FloatArray:
    """Central differences of a scalar function."""
    grad = np.empty_like(x)
    for i in range(len(x)):
        e = np.zeros_like(x)
        e[i] = h
        grad[i] = (fn(x + e) - fn(x - e)) / (2.0 * h)
    return grad


def numeric_hessian(
    grad_fn: Callable[[FloatArray], FloatArray], x: FloatArray, h: float = FINITE_DIFFERENCE_STEP
) -> FloatArray:
    """Central differences of a gradient, symmetrised."""
    n = len(x)
    hessian = np.empty((n, n))
    for i in range(n):
        e = np.zeros_like(x)
        e[i] = h
        hessian[:, i] = (grad_fn(x + e) - grad_fn(x - e)) / (2.0 * h)
    result: FloatArray = (hessian + hessian.T) / 2.0
    return result


def per_agent_next_potential(x: ActionProfile, i: int) -> float:
    """f after agent i best-responds, in closed form.

    With S = s - x_i in (0, 1) the mover plays sqrt(S) - S, giving
    s S - (2/3) S^{3/2} - sum_{j<k} x_j x_k + (1/6)(1 - 1/n)^3.
    """
    x.check_index(i)
    others = x.others_total(i)
    if not 0 < others < 1:
        raise DomainError(f"Closed form needs 0 < s - x_i < 1, got {others} for agent {i}")
    arr = x.as_array()
    sigma = float(arr.sum())
    pairwise = (sigma * sigma - float(arr @ arr)) / 2.0
    return sigma * others - (2.0 / 3.0) * others**1.5 - pairwise + _offset(len(arr))


def _checked_weights(weights: Sequence[float] | FloatArray, n: int) -> FloatArray:
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (n,):
        raise DomainError(f"Expected {n} weights, got shape {w.shape}")
    if (w < 0).any() or not np.isfinite(w).all():
        raise DomainError(f"Weights must be finite and non-negative: {w.tolist()}")
    if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise DomainError(f"Weights must sum to 1, got {w.sum()!r}")
    return w


def expected_next_potential(x: ActionProfile, weights: Sequence[float] | FloatArray) -> float:
    """Exact expectation of f one step ahead when agent i moves with probability weights[i]."""
    w = _checked_weights(weights, len(x))
    return math.fsum(float(w[i]) * per_agent_next_potential(x, i) for i in range(len(x)))


def potential_report(
    x: ActionProfile, weights: Sequence[float] | FloatArray, kappa: float = KAPPA
) -> PotentialReport:
    """Potential, its per-agent successors and the contraction check.

    The contraction f_next <= (1 - kappa L) f is only claimed when sigma >= 1/4;
    below that `contraction_ok` only requires f_next <= f.
    """
    w = _checked_weights(weights, len(x))
    value = potential(x)
    nexts = tuple(per_agent_next_potential(x, i) for i in range(len(x)))
    expected = math.fsum(float(w[i]) * f for i, f in enumerate(nexts))
    sigma = x.total
    factor = 1.0 - kappa * float(w.min()) if sigma >= 0.25 else 1.0
    return PotentialReport(
        value=value,
        per_agent_next=nexts,
        expected_next=expected,
        contraction_ok=expected <= factor * value + INVARIANT_TOLERANCE,
        sigma=sigma,
    )


def gamma_two_agent(x0: ActionProfile, a: float) -> float:
    """Initial-state floor of the two-agent sequence.

    sqrt(x) for x in (0, 1/4), sqrt(x) - x on [1/4, 1) and sqrt(a) otherwise, where x is
    agent 0's starting output. The middle case is the size of agent 1's first response.
    """
    if len(x0) != 2:
        raise DomainError(f"gamma_two_agent needs two agents, got {len(x0)}")
    first = x0[0]
    if 0 < first < 0.25:
        return math.sqrt(first)
    if 0.25 <= first < 1:
        return math.sqrt(first) - first
    return math.sqrt(a)


def gamma_n_agent(x0: ActionProfile, a: float) -> float:
    """min(A u B u {a}) with A the outputs in (0, 1) and B = {sqrt((1 - sqrt(y)) / 2) : y in A}."""
    inside = [v for v in x0.outputs if 0 < v < 1]
    mapped = [math.sqrt((1.0 - math.sqrt(v)) / 2.0) for v in inside]
    return min([*inside, *mapped, a])


def _check_half_open(name: str, value: float) -> None:
    if not 0 < value < 0.5:
        raise DomainError(f"{name} must lie in (0, 1/2), got {value}")


def geometric_mean_sequence(gamma: float, steps: int) -> list[float]:
    """z_0 = gamma, z_{t+1} = sqrt(z_t (1 - z_t))."""
    _check_half_open("gamma", gamma)
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    z = [gamma]
    for _ in range(steps):
        z.append(math.sqrt(z[-1] * (1.0 - z[-1])))
    return z


def geometric_mean_hitting_time(gamma: float, eps: float, max_steps: int = 10_000) -> int:
    """First t with z_t >= 1/2 - eps.

    Iterates z while it is below 1/4, then tracks d_t = 1/2 - z_t through
    d_{t+1} = d_t^2 / (1/2 + sqrt(1/4 - d_t^2)), which stays accurate for eps
    far below double resolution near 1/2.
    """
    _check_half_open("gamma", gamma)
    _check_half_open("eps", eps)
    z = gamma
    d = 0.5 - z
    for t in range(max_steps + 1):
        if d <= eps:
            return t
        if z < 0.25:
            z = math.sqrt(z * (1.0 - z))
            d = 0.5 - z
        else:
            d = d * d / (0.5 + math.sqrt(0.25 - d * d))
    raise DomainError(f"Sequence did not reach 1/2 - {eps} within {max_steps} steps")


def two_agent_predicted_steps(eps: float, gamma: float) -> float:
    """lg lg(1/gamma) + lg lg(1/eps)."""
    _check_half_open("eps", eps)
    _check_half_open("gamma", gamma)
    return math.log2(math.log2(1.0 / gamma)) + math.log2(math.log2(1.0 / eps))


def locate_interval(s: float) -> IntervalLocation:
    """Index of the interval holding a total output s in (0, 1).

    Interval 1 is [1/4, 1); interval l >= 2 is [2^-(2^(l-1)+1), 2^-(2^(l-2)+1)).
    When the lower endpoint of the matching interval underflows to zero the
    index is returned with `capped` set.
    """
    if not 0 < s < 1:
        raise DomainError(f"Interval index is defined on (0, 1), got {s}")
    if s >= 0.25:
        return IntervalLocation(1, False)
    level = 2
    while True:
        lower = 0.5 ** (2 ** (level - 1) + 1)
        if lower == 0.0:
            logger.warning("Interval index capped at the double-precision floor", s=s, index=level)
            return IntervalLocation(level, True)
        if s >= lower:
            return IntervalLocation(level, False)
        level += 1


def interval_index(s: float) -> int:
    return locate_interval(s).index


# 🎟️🎲🔚
