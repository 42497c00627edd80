#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Checks for experiment sweeps: reproducible output and the uniform-selection scaling laws."""

import numpy as np

from lotterydyn.config.defaults import DEFAULT_MAX_STEPS, POLICY_NAMES
from lotterydyn.experiments.models import ExperimentSpec
from lotterydyn.experiments.output import emit_csv, emit_plot_data, parse_csv
from lotterydyn.experiments.runner import rerun_row, run_experiment
from lotterydyn.verify.logic import CheckOutcome, VerifyScale, check

MIN_CORRELATION = 0.98
SCALING_REPLICATES = 100


def _small_spec(seed: int, workers: int = 1) -> ExperimentSpec:
    return ExperimentSpec(
        policies=POLICY_NAMES,
        n=(3, 5),
        eps=(1e-4, 1e-6),
        gamma=(1e-3,),
        replicates=3,
        base_seed=seed,
        max_steps=50_000,
        workers=workers,
    )


@check("experiments", "deterministic_output", "Equal seeds give byte-identical CSV, whatever the worker count")
def deterministic_output(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    seed = int(rng.integers(2**31))
    first = emit_csv(run_experiment(_small_spec(seed)))
    second = emit_csv(run_experiment(_small_spec(seed)))
    out.expect(first == second, f"two runs with base seed {seed} wrote different CSV")
    out.expect(emit_csv(parse_csv(first)) == first, "CSV does not survive a parse")
    if scale.scaling_sweeps:
        pooled = emit_csv(run_experiment(_small_spec(seed, workers=2)))
        out.expect(pooled == first, f"two workers changed the CSV for base seed {seed}")
    return out


@check("experiments", "rows_reproduce", "Re-running a converged row from its seed ends in an eps-equilibrium")
def rows_reproduce(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    spec = _small_spec(int(rng.integers(2**31)))
    for row in run_experiment(spec):
        out.expect(row.outcome == "converged", f"{row.policy} n={row.n} eps={row.eps} ended {row.outcome}")
        if row.outcome != "converged":
            continue
        trajectory = rerun_row(row, spec.max_steps)
        out.expect(trajectory.outcome.steps == row.steps, f"{row.policy} seed={row.seed}: step count changed")
        final_gap = float(trajectory.gaps[-1])
        out.expect(final_gap <= row.eps, f"{row.policy} seed={row.seed}: final gap {final_gap} > {row.eps}")
    return out


def _correlation(spec: ExperimentSpec, tag: str) -> float | None:
    series = emit_plot_data(run_experiment(spec), tag)
    return series[0].correlation if series else None


@check("experiments", "uniform_scaling", "Uniform selection needs steps proportional to n ln n and log(1/eps)")
def uniform_scaling(scale: VerifyScale, rng: np.random.Generator) -> CheckOutcome:
    out = CheckOutcome()
    if not scale.scaling_sweeps:
        out.skipped = "scaling sweeps run at full scale only"
        return out
    seed = int(rng.integers(2**31))
    by_n = ExperimentSpec(
        policies=("unif",),
        n=(5, 10, 20, 40, 80),
        eps=(1e-10,),
        replicates=SCALING_REPLICATES,
        base_seed=seed,
        max_steps=DEFAULT_MAX_STEPS,
    )
    correlation = _correlation(by_n, "nlogn")
    out.expect(
        correlation is not None and correlation >= MIN_CORRELATION,
        f"mean steps vs n ln n: correlation {correlation}",
    )
    by_eps = ExperimentSpec(
        policies=("unif",),
        n=(10,),
        eps=tuple(10.0**-k for k in range(2, 13)),
        replicates=SCALING_REPLICATES,
        base_seed=seed,
        max_steps=DEFAULT_MAX_STEPS,
    )
    correlation = _correlation(by_eps, "log_inv_eps")
    out.expect(
        correlation is not None and correlation >= MIN_CORRELATION,
        f"mean steps vs log(1/eps): correlation {correlation}",
    )
    return out


# 🎟️🎲🔚
