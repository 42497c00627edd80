#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Closed-form reference values for selection coverage and step counts.

These are the order-of-magnitude expressions without hidden constants; they are
reference columns for plots, not guarantees.
"""

import math

from lotterydyn.common.exceptions import DomainError


def _check_probability(name: str, value: float) -> None:
    if not 0 < value < 1:
        raise DomainError(f"{name} must lie in (0, 1), got {value}")


def coupon_tail_bound(c: float) -> float:
    """P[uniform coverage time > n ln n + c n] < e^{-c}."""
    return math.exp(-c)


def coverage_upper_bound(n: int, lower: float, delta: float) -> float:
    """(1/L) ln(n / delta): every agent has moved by then w.p. >= 1 - delta."""
    _check_probability("delta", delta)
    if not 0 < lower <= 1:
        raise DomainError(f"L must lie in (0, 1], got {lower}")
    return math.log(n / delta) / lower


def coverage_lower_bound(n: int, lower: float, upper: float, delta: float) -> float:
    """max((1/L)(1 - 1/(nU)), n) ln(n delta), clamped at zero."""
    _check_probability("delta", delta)
    if not 0 < lower <= upper:
        raise DomainError(f"Need 0 < L <= U, got L={lower}, U={upper}")
    value = max((1.0 - 1.0 / (n * upper)) / lower, float(n)) * math.log(n * delta)
    return max(0.0, value)


def n_agent_step_estimate(n: int, eps: float, delta: float, gamma: float, lower: float, upper: float) -> float:
    """Step count of randomized selection with bounds L <= w <= U < 1/2, constants dropped."""
    _check_probability("delta", delta)
    _check_probability("eps", eps)
    if not 0 < gamma < 0.5:
        raise DomainError(f"gamma must lie in (0, 1/2), got {gamma}")
    if not 0 < lower <= upper < 0.5:
        raise DomainError(f"Need 0 < L <= U < 1/2, got L={lower}, U={upper}")
    drift = 1.0 - 2.0 * upper
    return (
        math.log2(math.log2(1.0 / gamma)) / drift
        + math.log(n / (eps * delta)) / (lower * drift)
        + math.log(1.0 / delta) / drift**2
    )


# 🎟️🎲🔚
