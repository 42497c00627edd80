#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Click parameter types for comma-separated vectors and `lo:hi` ranges."""

from typing import Any

import click


class FloatListParam(click.ParamType):
    name = "floats"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[float, ...]:
        if isinstance(value, tuple):
            return value
        try:
            return tuple(float(part) for part in str(value).split(",") if part.strip())
        except ValueError:
            self.fail(f"'{value}' is not a comma-separated list of numbers", param, ctx)


class FloatRangeParam(click.ParamType):
    name = "lo:hi"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[float, float]:
        if isinstance(value, tuple):
            return value
        parts = str(value).split(":")
        if len(parts) != 2:
            self.fail(f"'{value}' must look like lo:hi", param, ctx)
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError:
            self.fail(f"'{value}' must hold two numbers separated by ':'", param, ctx)
        if not 0 < lo <= hi:
            self.fail(f"'{value}' must satisfy 0 < lo <= hi", param, ctx)
        return lo, hi


FLOAT_LIST = FloatListParam()
FLOAT_RANGE = FloatRangeParam()

# 🎟️🎲🔚
