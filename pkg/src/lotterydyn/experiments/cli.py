#!/usr/bin/env python3
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from collections import defaultdict
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import click
import numpy as np
from provide.foundation import logger
from rich import print as rich_print
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from lotterydyn.common.config import runtime_from_context
from lotterydyn.common.exceptions import ExperimentSpecError, LotteryDynError, OutputError
from lotterydyn.config.defaults import OUTPUT_FORMATS, PLOT_TRANSFORMS
from lotterydyn.experiments.models import ExperimentSpec, ResultRow
from lotterydyn.experiments.output import default_axes, emit_plot_csv, emit_plot_data, write_csv
from lotterydyn.experiments.runner import plan_tasks, run_experiment
from lotterydyn.experiments.spec import load_experiment_spec
from lotterydyn.experiments.svg import write_svg


def _summary_table(rows: Sequence[ResultRow]) -> Table:
    cells: dict[tuple[str, int, float, float], list[ResultRow]] = defaultdict(list)
    for row in rows:
        cells[(row.policy, row.n, row.eps, row.gamma)].append(row)

    table = Table(title="Experiment summary")
    for name in ("Policy", "n", "eps", "gamma"):
        table.add_column(name, style="magenta")
    table.add_column("Runs", justify="right")
    table.add_column("Converged", justify="right", style="green")
    table.add_column("Cycle", justify="right", style="red")
    table.add_column("Mean steps", justify="right", style="cyan")
    for (policy, n, eps, gamma), group in sorted(cells.items()):
        converged = [r.steps for r in group if r.outcome == "converged"]
        cycles = sum(1 for r in group if r.outcome == "cycle")
        mean = f"{np.mean(converged):.1f}" if converged else "-"
        table.add_row(
            policy, str(n), f"{eps:g}", f"{gamma:g}", str(len(group)), str(len(converged)), str(cycles), mean
        )
    return table


def _write_outputs(
    rows: Sequence[ResultRow],
    out_dir: Path,
    output_format: str,
    axes: Sequence[str],
    relative_to_gamma: float | None,
) -> list[Path]:
    written = []
    if output_format in ("csv", "both"):
        written.append(write_csv(rows, out_dir / "results.csv"))
    for tag in axes:
        series = emit_plot_data(rows, tag, relative_to_gamma=relative_to_gamma)
        if output_format in ("csv", "both"):
            path = out_dir / f"plot-{tag}.csv"
            try:
                path.write_bytes(emit_plot_csv(series))
            except OSError as e:
                raise OutputError(f"Error writing plot data to {path}: {e}") from e
            written.append(path)
        if output_format in ("svg", "both"):
            written.append(write_svg(series, tag, out_dir / f"plot-{tag}.svg", title=f"steps vs {tag}"))
    return written


@click.command("experiment")
@click.option(
    "--config",
    "spec_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Experiment spec file (.toml, .yaml or .yml). Defaults to the built-in grid.",
)
@click.option("--seed", type=int, default=None, help="Base seed, overriding the spec file.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="csv", show_default=True)
@click.option(
    "--x-axis",
    "axes",
    type=click.Choice(PLOT_TRANSFORMS),
    multiple=True,
    help="Plot transform; repeat for several. Defaults to the axes the grid varies over.",
)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes.")
@click.option("--timing/--no-timing", default=False, help="Record wall-clock nanoseconds per run.")
@click.option(
    "--relative-to-gamma",
    type=float,
    default=None,
    help="Subtract each policy's mean steps at this gamma from its plot points.",
)
@click.pass_context
def experiment_command(
    ctx: click.Context,
    spec_path: Path | None,
    seed: int | None,
    out_dir: Path | None,
    output_format: str,
    axes: tuple[str, ...],
    workers: int | None,
    timing: bool,
    relative_to_gamma: float | None,
) -> None:
    """Runs an experiment sweep and writes CSV and/or SVG output."""
    runtime = runtime_from_context(ctx)
    defaults: dict[str, Any] = {"base_seed": runtime.default_seed, "workers": runtime.workers}
    overrides: dict[str, Any] = {}
    if seed is not None:
        overrides["base_seed"] = seed
    if workers is not None:
        overrides["workers"] = workers
    if timing:
        overrides["record_timing"] = True

    try:
        spec: ExperimentSpec = load_experiment_spec(spec_path, defaults=defaults, overrides=overrides)
    except ExperimentSpecError as e:
        raise click.UsageError(str(e)) from e
    if relative_to_gamma is not None and relative_to_gamma not in spec.gamma:
        raise click.BadParameter(
            f"{relative_to_gamma} is not in the gamma grid {list(spec.gamma)}",
            param_hint="--relative-to-gamma",
        )

    total = len(plan_tasks(spec))
    console = Console(stderr=True)
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
        TimeElapsedColumn(),
        console=console,
    ) as progress:
        task = progress.add_task("Running sweep...", total=total)
        rows = run_experiment(spec, progress=lambda row: progress.advance(task))

    rich_print(_summary_table(rows))

    target = out_dir or Path(runtime.output_dir)
    try:
        written = _write_outputs(rows, target, output_format, axes or default_axes(rows), relative_to_gamma)
    except OutputError as e:
        logger.error(f"Failed to write experiment output: {e}")
        raise click.ClickException(str(e)) from e
    except LotteryDynError as e:
        raise click.UsageError(str(e)) from e
    for path in written:
        rich_print(f"[green]Wrote[/green] {path}")


# 🎟️🎲🔚
