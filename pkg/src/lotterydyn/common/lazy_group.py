#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


import importlib
from typing import Any

import click


class LazyGroup(click.Group):
    """
    A Click Group whose subcommands are imported on first use.

    `lazy_commands` maps a command name to (module path, attribute name).
    Keeps `lotterydyn --help` free of numpy-heavy imports.
    """

    def __init__(
        self,
        *args: Any,
        lazy_commands: dict[str, tuple[str, str]] | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(*args, **kwargs)
        self.lazy_commands = lazy_commands or {}

    def list_commands(self, ctx: click.Context) -> list[str]:
        return sorted(set(super().list_commands(ctx)) | set(self.lazy_commands))

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        if cmd_name not in self.lazy_commands:
            return super().get_command(ctx, cmd_name)
        module_path, attr_name = self.lazy_commands[cmd_name]
        try:
            module = importlib.import_module(module_path)
            cmd: click.Command = getattr(module, attr_name)
        except (ImportError, AttributeError) as e:
            raise click.UsageError(f"Error loading command '{cmd_name}': {e}") from e
        return cmd


# 🎟️🎲🔚
