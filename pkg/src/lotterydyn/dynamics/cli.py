#!/usr/bin/env python3
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from pathlib import Path

import click
from provide.foundation import logger
from rich import print as rich_print
from rich.table import Table

from lotterydyn.common.config import runtime_from_context
from lotterydyn.common.exceptions import LotteryDynError
from lotterydyn.common.params import FLOAT_LIST, FLOAT_RANGE
from lotterydyn.common.rich_utils import format_float, format_profile, key_value_table, profile_table
from lotterydyn.common.serialization import dump_document
from lotterydyn.config.defaults import DEFAULT_EPS, DEFAULT_GAMMA, DEFAULT_MAX_STEPS, POLICY_NAMES
from lotterydyn.contest.models import ActionProfile, ContestConfig
from lotterydyn.dynamics.cycles import log_grid
from lotterydyn.dynamics.engine import run
from lotterydyn.dynamics.models import CycleDetected, DynamicsParams, Trajectory
from lotterydyn.dynamics.policies import RoundRobin, SelectionPolicy, policy_from_name
from lotterydyn.dynamics.search import search_cycles


def _agent_count(n: int | None, costs: tuple[float, ...] | None, x0: tuple[float, ...] | None) -> int:
    sizes = {len(v) for v in (costs, x0) if v}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise click.BadParameter(f"--n, --costs and --x0 disagree on the number of agents: {sorted(sizes)}")
    return sizes.pop() if sizes else 2


def _build_policy(name: str, offset: int, relative: bool) -> SelectionPolicy:
    if name == "round":
        return RoundRobin(offset=offset)
    if offset:
        raise click.BadParameter("--offset only applies to --policy round")
    return policy_from_name(name, relative=relative)


def _print_trajectory(cfg: ContestConfig, policy: SelectionPolicy, trajectory: Trajectory, show: int) -> None:
    outcome = trajectory.outcome
    rows = [
        ("policy", policy.name),
        ("agents", cfg.n),
        ("costs", format_profile(cfg.costs)),
        ("floor action", format_float(cfg.floor_action)),
        ("outcome", outcome.tag),
        ("steps", trajectory.steps),
        ("final profile", format_profile(trajectory.final.outputs)),
        ("final total", format_float(float(trajectory.totals[-1]))),
        ("final gap", format_float(float(trajectory.gaps[-1]))),
        ("warm-up end", "-" if trajectory.warmup_end is None else trajectory.warmup_end),
    ]
    rich_print(key_value_table("Best-response run", rows))
    for warning in trajectory.warnings:
        rich_print(f"[yellow]Warning: {warning}[/yellow]")

    if trajectory.cycle is not None:
        cycle = trajectory.cycle
        rich_print(f"[bold red]Cycle detected:[/bold red] entry t={cycle.entry_time}, period {cycle.period}")
        states = [s.outputs for s in cycle.cycle_states]
        rich_print(profile_table("Cycle states", states, first_t=cycle.entry_time))
        return

    if show > 0:
        kept = min(show, len(trajectory.profiles))
        first_t = trajectory.profile_offset + len(trajectory.profiles) - kept
        tail = [list(row) for row in trajectory.profiles[-kept:]]
        rich_print(profile_table("Last profiles", tail, first_t=first_t))


@click.command("simulate")
@click.option("--n", "n", type=click.IntRange(min=2), default=None, help="Number of agents (default 2).")
@click.option(
    "--costs",
    type=FLOAT_LIST,
    default=None,
    help="Comma-separated per-agent costs (default all 1).",
)
@click.option(
    "--a",
    "floor_action",
    type=float,
    default=DEFAULT_GAMMA,
    show_default=True,
    help="Floor action.",
)
@click.option(
    "--x0",
    type=FLOAT_LIST,
    default=None,
    help="Comma-separated initial profile (default a, 0, ...).",
)
@click.option("--policy", type=click.Choice(POLICY_NAMES), default="round", show_default=True)
@click.option("--offset", type=click.IntRange(min=0), default=0, help="Round-robin offset.")
@click.option(
    "--relative-threshold",
    "relative",
    is_flag=True,
    help="Let lex and worst compare per-agent gaps with eps instead of absolute utility gains.",
)
@click.option("--eps", type=float, default=DEFAULT_EPS, show_default=True, help="Target approximation.")
@click.option("--max-steps", type=click.IntRange(min=1), default=DEFAULT_MAX_STEPS, show_default=True)
@click.option("--seed", type=int, default=None, help="Seed for randomized selection.")
@click.option(
    "--save",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the run summary to a .json or .msgpack file.",
)
@click.option(
    "--show",
    type=click.IntRange(min=0),
    default=8,
    show_default=True,
    help="Trailing profiles to print.",
)
@click.pass_context
def simulate_command(
    ctx: click.Context,
    n: int | None,
    costs: tuple[float, ...] | None,
    floor_action: float,
    x0: tuple[float, ...] | None,
    policy: str,
    offset: int,
    relative: bool,
    eps: float,
    max_steps: int,
    seed: int | None,
    save: Path | None,
    show: int,
) -> None:
    """Runs best-response dynamics once and prints a summary."""
    runtime = runtime_from_context(ctx)
    agents = _agent_count(n, costs, x0)
    try:
        cfg = ContestConfig(n=agents, costs=costs or (1.0,) * agents, floor_action=floor_action)
        start = ActionProfile(outputs=x0 or (floor_action,) + (0.0,) * (agents - 1))
        params = DynamicsParams(
            eps=eps,
            max_steps=max_steps,
            seed=runtime.default_seed if seed is None else seed,
            record_full=save is not None,
        )
        selection = _build_policy(policy, offset, relative)
    except LotteryDynError as e:
        raise click.UsageError(str(e)) from e

    trajectory = run(cfg, start, selection, params)
    _print_trajectory(cfg, selection, trajectory, show)

    if save is not None:
        summary = trajectory.summary()
        summary.update(
            policy=selection.name,
            costs=list(cfg.costs),
            floor_action=cfg.floor_action,
            x0=list(start.outputs),
            eps=eps,
            seed=params.seed,
        )
        try:
            dump_document(summary, save)
        except LotteryDynError as e:
            logger.error(f"Failed to save run summary: {e}")
            raise click.ClickException(str(e)) from e
        rich_print(f"[green]Run summary written to[/green] {save}")


@click.command("cycle")
@click.option("--c2", type=float, required=True, help="Cost of agent 1; agent 0 has cost 1.")
@click.option(
    "--a-grid",
    type=FLOAT_RANGE,
    default="1e-12:1e-1",
    show_default=True,
    help="Floor action range lo:hi.",
)
@click.option(
    "--points",
    type=click.IntRange(min=1),
    default=200,
    show_default=True,
    help="Log-spaced grid points.",
)
@click.option(
    "--depth", type=click.IntRange(min=1), default=8, show_default=True, help="Reverse-chain levels."
)
@click.option("--max-steps", type=click.IntRange(min=1), default=10_000, show_default=True)
@click.option(
    "--show",
    type=click.IntRange(min=0),
    default=10,
    show_default=True,
    help="Confirmed values to list.",
)
def cycle_command(
    c2: float, a_grid: tuple[float, float], points: int, depth: int, max_steps: int, show: int
) -> None:
    """Finds floor actions that make two agents with costs (1, c2) cycle."""
    try:
        grid = log_grid(a_grid[0], a_grid[1], points)
        result = search_cycles(c2, grid, depth=depth, max_steps=max_steps)
    except LotteryDynError as e:
        raise click.UsageError(str(e)) from e

    table = Table(title=f"Reverse-chain intervals for c2={c2}")
    table.add_column("Level", style="magenta", justify="right")
    table.add_column("Agent", style="magenta", justify="right")
    table.add_column("Lower", style="cyan", justify="right")
    table.add_column("Upper", style="cyan", justify="right")
    for iv in result.intervals:
        table.add_row(str(iv.depth), str(iv.agent), f"{iv.lower:.4g}", f"{iv.upper:.4g}")
    rich_print(table)

    confirmed = result.confirmed
    rich_print(
        f"[bold]{len(confirmed)}[/bold] of {len(result.checks)} candidate floor actions "
        f"({len(grid)} grid points) start a cycle from (0, a)"
    )
    if confirmed:
        rich_print(f"[green]Cycling floor actions:[/green] [{min(confirmed):.4g}, {max(confirmed):.4g}]")
        checks = [c for c in result.checks if c.cycles][:show]
        listing = Table(title="Confirmed cycles")
        listing.add_column("a", style="cyan", justify="right")
        listing.add_column("Entry", justify="right")
        listing.add_column("Period", justify="right")
        for check in checks:
            if isinstance(check.outcome, CycleDetected):
                start, period = check.outcome.start, check.outcome.period
                listing.add_row(f"{check.floor_action:.6g}", str(start), str(period))
        rich_print(listing)
    if result.rejected:
        rejected = len(result.rejected)
        rich_print(f"[yellow]{rejected} candidates did not cycle under forward simulation[/yellow]")


# 🎟️🎲🔚
