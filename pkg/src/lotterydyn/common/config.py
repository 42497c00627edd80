#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Configuration loading and management for lotterydyn."""

import os
import pathlib
import tomllib
from typing import Any

from attrs import define, evolve
import click
from provide.foundation import logger
from provide.foundation.config import RuntimeConfig, field

from lotterydyn.common.exceptions import LotteryDynConfigError
from lotterydyn.config.defaults import (
    CONFIG_FILENAME,
    DEFAULT_BASE_SEED,
    DEFAULT_CONFIG_SUBDIR,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_WORKERS,
    ENV_LOTTERYDYN_LOG_LEVEL,
    ENV_LOTTERYDYN_OUTPUT_DIR,
    ENV_LOTTERYDYN_SEED,
    ENV_LOTTERYDYN_WORKERS,
)


@define
class LotteryDynConfig(RuntimeConfig):
    """Runtime configuration for lotterydyn commands."""

    project_root: pathlib.Path | None = field(default=None, description="Project root directory")  # noqa: RUF009
    config_file: str | None = field(default=None, description="Explicit configuration file path")

    log_level: str = field(default="WARNING", description="Logging level", env_var=ENV_LOTTERYDYN_LOG_LEVEL)
    workers: int = field(
        default=DEFAULT_WORKERS,
        description="Worker processes for experiment sweeps",
        env_var=ENV_LOTTERYDYN_WORKERS,
    )
    default_seed: int = field(
        default=DEFAULT_BASE_SEED, description="Base seed when none is given", env_var=ENV_LOTTERYDYN_SEED
    )
    output_dir: str = field(
        default=DEFAULT_OUTPUT_DIR,
        description="Directory for experiment output",
        env_var=ENV_LOTTERYDYN_OUTPUT_DIR,
    )

    @classmethod
    def from_project_root(
        cls, project_root: pathlib.Path, explicit_config_file: str | None = None
    ) -> "LotteryDynConfig":
        """Build the runtime config from the [runtime] table of the project config file."""
        try:
            config_data = load_lotterydyn_config(project_root, explicit_config_file)
            return evolve(resolve_runtime_config(project_root, config_data), config_file=explicit_config_file)
        except LotteryDynConfigError as e:
            logger.debug("Falling back to default runtime configuration", error=str(e))
            return cls(project_root=project_root, config_file=explicit_config_file)


def _load_config_from_file(file_path: pathlib.Path) -> dict[str, Any] | None:
    if not file_path.is_file():
        return None

    try:
        logger.debug(f"Parsing lotterydyn TOML configuration file: {file_path}")
        with file_path.open("rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise LotteryDynConfigError(f"Failed to parse TOML configuration file {file_path}: {e}") from e
    except OSError as e:
        raise LotteryDynConfigError(f"Unable to read configuration file {file_path}: {e}") from e


def load_lotterydyn_config(
    project_root: pathlib.Path, explicit_config_file: str | None = None
) -> dict[str, Any]:
    """
    Loads the project configuration with the precedence: explicit file,
    <project_root>/lotterydyn/lotterydyn.toml, <project_root>/lotterydyn.toml.
    """
    if explicit_config_file:
        exp_path = pathlib.Path(explicit_config_file).resolve()
        if not exp_path.is_file():
            raise LotteryDynConfigError(f"Explicitly specified configuration file not found: {exp_path}")
        return _load_config_from_file(exp_path) or {}

    for candidate in (project_root / DEFAULT_CONFIG_SUBDIR / CONFIG_FILENAME, project_root / CONFIG_FILENAME):
        config = _load_config_from_file(candidate)
        if config is not None:
            return config

    logger.debug("No lotterydyn configuration file found, using defaults", project_root=str(project_root))
    return {}


ENV_FIELDS = {
    "log_level": ENV_LOTTERYDYN_LOG_LEVEL,
    "workers": ENV_LOTTERYDYN_WORKERS,
    "default_seed": ENV_LOTTERYDYN_SEED,
    "output_dir": ENV_LOTTERYDYN_OUTPUT_DIR,
}


def resolve_runtime_config(project_root: pathlib.Path, config_data: dict[str, Any]) -> LotteryDynConfig:
    """Runtime settings with precedence: environment, then the [runtime] table, then defaults."""
    runtime = dict(config_data.get("runtime", {}))
    unknown = sorted(set(runtime) - set(ENV_FIELDS))
    if unknown:
        raise LotteryDynConfigError(f"Unknown keys in [runtime]: {unknown}; allowed: {sorted(ENV_FIELDS)}")
    from_env = LotteryDynConfig.from_env()
    for name, env_var in ENV_FIELDS.items():
        if env_var in os.environ:
            runtime[name] = getattr(from_env, name)
    return evolve(LotteryDynConfig.from_dict(runtime), project_root=project_root)


def runtime_from_context(ctx: click.Context) -> LotteryDynConfig:
    """Runtime config stored by the root command, or one built from the environment."""
    runtime = (ctx.obj or {}).get("RUNTIME")
    if isinstance(runtime, LotteryDynConfig):
        return runtime
    return LotteryDynConfig.from_env()


# 🎟️🎲🔚
