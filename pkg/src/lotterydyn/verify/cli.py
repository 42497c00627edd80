#!/usr/bin/env python3
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import sys

import click
from provide.foundation import logger
from rich import print as rich_print
from rich.console import Console
from rich.table import Table

from lotterydyn.common.config import runtime_from_context
from lotterydyn.common.exceptions import LotteryDynError
from lotterydyn.verify.logic import (
    MODULES,
    SCALES,
    CheckResult,
    SuiteResult,
    registered_checks,
    run_verification,
)


def _status(result: CheckResult) -> str:
    if result.skipped:
        return "[yellow]skip[/yellow]"
    return "[green]pass[/green]" if result.passed else "[bold red]FAIL[/bold red]"


def _results_table(suite: SuiteResult) -> Table:
    table = Table(title=f"Invariant checks ({suite.scale} scale)")
    table.add_column("Module", style="magenta")
    table.add_column("Check", style="cyan")
    table.add_column("Status")
    table.add_column("Cases", justify="right")
    table.add_column("Seconds", justify="right")
    for r in suite.results:
        table.add_row(r.module, r.name, _status(r), str(r.cases), f"{r.duration:.2f}")
    return table


def _print_failures(suite: SuiteResult) -> None:
    for r in suite.results:
        if r.passed or r.skipped:
            continue
        rich_print(f"\n[bold red]{r.module}/{r.name}[/bold red]")
        for violation in r.violations:
            rich_print(f"  - {violation}")


@click.command("verify")
@click.option("--scale", type=click.Choice(sorted(SCALES)), default="quick", show_default=True)
@click.option(
    "--module",
    "modules",
    type=click.Choice(MODULES),
    multiple=True,
    help="Restrict to these modules (repeatable). Default: all.",
)
@click.option("--seed", type=int, default=None, help="Base seed for the check streams.")
@click.option("--list", "list_only", is_flag=True, help="List the registered checks and exit.")
@click.pass_context
def verify_command(
    ctx: click.Context, scale: str, modules: tuple[str, ...], seed: int | None, list_only: bool
) -> None:
    """Runs the executable invariant checks and exits non-zero if any fails."""
    runtime = runtime_from_context(ctx)
    try:
        checks = registered_checks(modules or None)
    except LotteryDynError as e:
        raise click.UsageError(str(e)) from e

    if list_only:
        table = Table(title="Registered checks")
        table.add_column("Module", style="magenta")
        table.add_column("Check", style="cyan")
        table.add_column("Description")
        for item in checks:
            table.add_row(item.module, item.name, item.description)
        rich_print(table)
        return

    console = Console(stderr=True)
    with console.status("Running checks...") as status:
        suite = run_verification(
            modules or None,
            scale=SCALES[scale],
            seed=runtime.default_seed if seed is None else seed,
            progress=lambda r: status.update(f"Finished {r.module}/{r.name}"),
        )

    rich_print(_results_table(suite))
    _print_failures(suite)
    rich_print(
        f"\n[bold]{suite.passed}[/bold] passed, [bold]{suite.failed}[/bold] failed, "
        f"[bold]{suite.skipped}[/bold] skipped in {suite.duration:.1f}s"
    )
    if not suite.success:
        logger.error("Invariant checks failed", failed=suite.failed, scale=suite.scale)
        sys.exit(1)


# 🎟️🎲🔚
