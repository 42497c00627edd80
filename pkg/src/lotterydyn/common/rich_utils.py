#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Utilities for rendering CLI output with the Rich library."""

from collections.abc import Sequence
from typing import Any

from rich.table import Table
from rich.tree import Tree


def build_rich_tree_from_dict(tree_node: Tree, data: dict[str, Any], parent_name: str = "Config Root") -> None:
    """
    Recursively builds a Rich Tree from a generic dictionary.
    """
    if not data:
        tree_node.add(f"[dim italic]{parent_name} (empty)[/dim italic]")
        return

    for key, value in sorted(data.items()):
        if isinstance(value, dict):
            branch = tree_node.add(f"[bold blue]{key}[/bold blue]")
            build_rich_tree_from_dict(branch, value, parent_name=key)
        elif isinstance(value, list):
            branch = tree_node.add(f"[bold blue]{key}[/bold blue] ([italic]list[/italic])")
            for i, item in enumerate(value):
                if isinstance(item, dict):
                    build_rich_tree_from_dict(branch.add(f"Item {i}"), item, parent_name=f"Item {i}")
                else:
                    branch.add(f"[green]{item!r}[/green]")
        else:
            tree_node.add(f"[bold blue]{key}[/bold blue]: [green]{value!r}[/green]")


def format_float(value: float, digits: int = 5) -> str:
    return f"{value:.{digits}f}" if 1e-4 <= abs(value) < 1e6 or value == 0 else f"{value:.{digits}e}"


def format_profile(outputs: Sequence[float], digits: int = 5) -> str:
    return "(" + ", ".join(format_float(v, digits) for v in outputs) + ")"


def key_value_table(title: str, rows: Sequence[tuple[str, Any]]) -> Table:
    table = Table(title=title, show_header=False)
    table.add_column("Field", style="magenta")
    table.add_column("Value", style="cyan")
    for key, value in rows:
        table.add_row(key, str(value))
    return table


def profile_table(title: str, profiles: Sequence[Sequence[float]], first_t: int = 0, digits: int = 5) -> Table:
    """One row per profile, one column per agent."""
    table = Table(title=title)
    table.add_column("t", style="magenta", justify="right")
    width = len(profiles[0]) if profiles else 0
    for i in range(width):
        table.add_column(f"x[{i}]", style="cyan", justify="right")
    for offset, profile in enumerate(profiles):
        table.add_row(str(first_t + offset), *(format_float(v, digits) for v in profile))
    return table


# 🎟️🎲🔚
