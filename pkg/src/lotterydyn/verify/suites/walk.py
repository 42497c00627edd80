#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks for the walled walk and the agent-coverage bounds."""

import itertools
import math

import numpy as np

from lotterydyn.verify.logic import CheckOutcome, VerifyScale, check
from lotterydyn.walk.bounds import coupon_tail_bound, coverage_upper_bound
from lotterydyn.walk.logic import (
    coupled_free_walk,
    coverage_time,
    empirical_visit_success,
    visit_bound_horizon,
    uniform_coverage_times,
)
from lotterydyn.walk.models import WalkConfig

SAMPLING_SLACK = 0.01


@check("walk", "examples", "Hand-computed visit bound and coverage times")
def examples(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    bound = visit_bound_horizon(0.3, 5, 10, 0.1)
    out.expect(bound == 150, f"visit bound for p=0.3, k=5, m=10, delta=0.1 is {bound}, expected 150")
    out.expect(coverage_time((1, 2, 3), 3) is None, "agents 1..3 do not cover {0, 1, 2}")
    out.expect(coverage_time((0, 1, 2), 3) == 2, "coverage of (0, 1, 2)")
    out.expect(coverage_time((0, 0, 1, 0, 2, 1), 3) == 4, "coverage with repeats")
    for n in (2, 5, 17, 100):
        trace = list(range(n)) * 3
        out.expect(coverage_time(trace, n) == n - 1, f"round-robin coverage for n={n}")
    return out


@check("walk", "visit_bound", "Walks from k visit 1 at least m times within the bound w.p. >= 1 - delta")
def visit_bound(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for p, k, m, delta in itertools.product((0.1, 0.2, 0.3, 0.4), (1, 5, 20), (1, 10, 50), (0.05, 0.1)):
        horizon = visit_bound_horizon(p, k, m, delta)
        success = empirical_visit_success(WalkConfig(p=p, start=k), m, horizon, scale.walk_trials, rng)
        out.expect(
            success >= 1.0 - delta,
            f"p={p}, k={k}, m={m}, delta={delta}: success {success:.4f} within {horizon} steps",
        )
    return out


@check("walk", "coupling", "The walled walk dominates the free walk that shares its coins")
def coupling(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for _ in range(max(20, scale.walk_trials // 50)):
        cfg = WalkConfig(p=float(rng.uniform(0.0, 0.49)), start=int(rng.integers(1, 30)))
        paths = coupled_free_walk(cfg, int(rng.integers(1, 500)), rng)
        walled = np.array(paths.walled.states)
        free = np.array(paths.free)
        out.expect_all(walled >= free, f"walled path below free path (p={cfg.p:.3f}, k={cfg.start})")
        out.expect_all(walled >= 1, f"walled path left {{1, 2, ...}} (p={cfg.p:.3f}, k={cfg.start})")
        moves = np.diff(walled)
        held = (moves == 0) & (walled[:-1] == 1)
        out.expect_all((np.abs(moves) == 1) | held, f"walled path jumped (p={cfg.p:.3f}, k={cfg.start})")
        visits = int(np.count_nonzero(walled[1:] == 1))
        out.expect(visits == paths.walled.visits_to_one, "visit count does not match the path")
    return out


@check("walk", "uniform_coverage", "Uniform selection covers every agent on the coupon-collector schedule")
def uniform_coverage(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    for n in (5, 20, 50):
        times = uniform_coverage_times(n, scale.coverage_replicates, rng)
        c = 3.0
        late = float(np.mean(times > n * math.log(n) + c * n))
        allowed = coupon_tail_bound(c) + SAMPLING_SLACK
        out.expect(late <= allowed, f"n={n}: {late:.4f} of runs exceed n ln n + 3n, bound {allowed:.4f}")
        for delta in (0.05, 0.2):
            horizon = coverage_upper_bound(n, 1.0 / n, delta)
            late = float(np.mean(times > horizon))
            out.expect(
                late <= delta + SAMPLING_SLACK, f"n={n}, delta={delta}: {late:.4f} exceed (1/L) ln(n/delta)"
            )
    return out


# 🎟️🎲🔚
