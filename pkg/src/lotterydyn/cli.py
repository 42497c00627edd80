#!/usr/bin/env python3
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import pathlib

from attrs import asdict, evolve
import click
from provide.foundation import LoggingConfig, TelemetryConfig, get_hub, logger
from rich import print as rich_print_direct
from rich.tree import Tree

from lotterydyn.common.config import LotteryDynConfig, load_lotterydyn_config, resolve_runtime_config
from lotterydyn.common.exceptions import LotteryDynConfigError
from lotterydyn.common.lazy_group import LazyGroup
from lotterydyn.common.rich_utils import build_rich_tree_from_dict
from lotterydyn.config.defaults import LOG_LEVELS

# Foundation logs to stderr; stdout carries tables and result paths.
hub = get_hub()

LAZY_COMMANDS = {
    "simulate": ("lotterydyn.dynamics.cli", "simulate_command"),
    "cycle": ("lotterydyn.dynamics.cli", "cycle_command"),
    "experiment": ("lotterydyn.experiments.cli", "experiment_command"),
    "verify": ("lotterydyn.verify.cli", "verify_command"),
}


def find_project_root(start: pathlib.Path) -> pathlib.Path:
    """Nearest ancestor holding a pyproject.toml, or `start` itself."""
    for candidate in (start, *start.parents):
        if (candidate / "pyproject.toml").exists():
            return candidate
    logger.debug("No pyproject.toml found in tree, using current directory as project root")
    return start


@click.group(
    name="lotterydyn",
    invoke_without_command=True,
    cls=LazyGroup,
    lazy_commands=LAZY_COMMANDS,
)
@click.pass_context
@click.version_option(package_name="lotterydyn")
@click.option("--verbose/--no-verbose", default=False, help="Enable verbose output.")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Set the logging level.",
)
@click.option(
    "--config-file",
    type=click.Path(exists=True, dir_okay=False, readable=True),
    default=None,
    help="Path to a specific lotterydyn configuration file.",
)
def main_cli(ctx: click.Context, verbose: bool, log_level: str | None, config_file: str | None) -> None:
    ctx.obj = ctx.obj or {}

    project_root_path = find_project_root(pathlib.Path.cwd())
    try:
        loaded_config = load_lotterydyn_config(project_root_path, explicit_config_file=config_file)
        runtime = evolve(resolve_runtime_config(project_root_path, loaded_config), config_file=config_file)
    except LotteryDynConfigError as e:
        if config_file:
            raise click.UsageError(str(e)) from e
        # A broken discovered file should not block commands that need no config.
        logger.warning(f"Configuration not loaded: {e}")
        loaded_config = {}
        runtime = LotteryDynConfig(project_root=project_root_path)

    final_log_level = "DEBUG" if verbose else (log_level or runtime.log_level)
    if verbose or log_level or "log_level" in loaded_config.get("runtime", {}):
        updated_config = TelemetryConfig(
            service_name="lotterydyn-cli",
            logging=LoggingConfig(default_level=final_log_level.upper()),
        )
        hub.initialize_foundation(config=updated_config)
        logger.debug(f"Log level set to {final_log_level.upper()}")

    ctx.obj["LOTTERYDYN_CONFIG"] = loaded_config
    ctx.obj["RUNTIME"] = runtime
    ctx.obj["PROJECT_ROOT"] = project_root_path
    ctx.obj["VERBOSE"] = verbose

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@click.group("config")
def config_cli() -> None:
    """Commands for lotterydyn configuration management."""


@config_cli.command("show")
@click.pass_context
def show_config_command(ctx: click.Context) -> None:
    """Displays the loaded configuration file and the resolved runtime settings."""
    loaded_config = ctx.obj.get("LOTTERYDYN_CONFIG", {})
    runtime: LotteryDynConfig | None = ctx.obj.get("RUNTIME")

    config_tree = Tree("🎟️ [bold green]Loaded lotterydyn Configuration[/bold green]")
    if loaded_config:
        build_rich_tree_from_dict(config_tree.add("[bold]file[/bold]"), loaded_config, "file")
    else:
        config_tree.add("[yellow]No configuration file loaded[/yellow]")
    if runtime is not None:
        settings = {k: v for k, v in asdict(runtime).items() if k not in ("project_root", "config_file")}
        build_rich_tree_from_dict(config_tree.add("[bold]resolved runtime[/bold]"), settings, "runtime")
    rich_print_direct(config_tree)


main_cli.add_command(config_cli)


def entry_point() -> None:
    """CLI entry point: configures Foundation logging from the environment, then runs the group."""
    runtime = LotteryDynConfig.from_env()
    base_telemetry = TelemetryConfig.from_env()
    telemetry_config = evolve(
        base_telemetry,
        service_name="lotterydyn-cli",
        logging=evolve(
            base_telemetry.logging,
            default_level=runtime.log_level,
        ),
    )
    hub.initialize_foundation(config=telemetry_config)
    main_cli(obj={})


if __name__ == "__main__":
    entry_point()

# 🎟️🎲🔚
