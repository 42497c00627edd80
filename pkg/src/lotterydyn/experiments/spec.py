#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Loading experiment spec files (TOML or YAML).

Schema (all keys optional, unknown keys rejected):

    policies           = ["unif", "round"]  # subset of unif, round, lex, worst, best
    n                  = [5, 10, 20]        # scalar or list
    eps                = [1e-2, 1e-4]
    gamma              = 1e-10
    replicates         = 100                # randomized policies only
    base_seed          = 20240101
    max_steps          = 1000000
    record_timing      = false
    relative_threshold = true               # lex/worst compare gaps, not utility gains
    workers            = 1

The keys may also sit under an [experiment] table.
"""

from pathlib import Path
import tomllib
from typing import Any

import attrs
from provide.foundation import logger
import yaml

from lotterydyn.common.exceptions import ExperimentSpecError
from lotterydyn.experiments.models import ExperimentSpec

SPEC_KEYS = frozenset(field.name for field in attrs.fields(ExperimentSpec))
INT_KEYS = frozenset({"replicates", "base_seed", "max_steps", "workers"})
BOOL_KEYS = frozenset({"record_timing", "relative_threshold"})


def _parse(path: Path) -> Any:
    suffix = path.suffix.lower()
    try:
        if suffix == ".toml":
            with path.open("rb") as f:
                return tomllib.load(f)
        if suffix in (".yaml", ".yml"):
            with path.open(encoding="utf-8") as f:
                return yaml.safe_load(f) or {}
    except OSError as e:
        raise ExperimentSpecError(f"Unable to read experiment spec {path}: {e}") from e
    except (tomllib.TOMLDecodeError, yaml.YAMLError) as e:
        raise ExperimentSpecError(f"Malformed experiment spec {path}: {e}") from e
    raise ExperimentSpecError(f"Experiment spec must be .toml, .yaml or .yml, got '{path.name}'")


def _unwrapped(data: dict[str, Any]) -> dict[str, Any]:
    if set(data) == {"experiment"} and isinstance(data["experiment"], dict):
        return dict(data["experiment"])
    return data


def spec_from_mapping(data: dict[str, Any]) -> ExperimentSpec:
    """Validates a parsed mapping against the schema and builds the spec."""
    data = _unwrapped(data)
    unknown = sorted(set(data) - SPEC_KEYS)
    if unknown:
        raise ExperimentSpecError(f"Unknown keys in experiment spec: {unknown}; allowed: {sorted(SPEC_KEYS)}")
    for key in INT_KEYS & set(data):
        if isinstance(data[key], bool) or not isinstance(data[key], int):
            raise ExperimentSpecError(f"'{key}' must be an integer, got {data[key]!r}")
    for key in BOOL_KEYS & set(data):
        if not isinstance(data[key], bool):
            raise ExperimentSpecError(f"'{key}' must be a boolean, got {data[key]!r}")
    return ExperimentSpec(**data)


def load_experiment_spec(
    path: Path | None,
    defaults: dict[str, Any] | None = None,
    overrides: dict[str, Any] | None = None,
) -> ExperimentSpec:
    """Spec from `path` (or built-in defaults when None).

    `defaults` fill keys the file leaves out; `overrides` win over the file.
    """
    data: Any = {} if path is None else _parse(path)
    if not isinstance(data, dict):
        raise ExperimentSpecError(f"Experiment spec {path} must be a mapping, got {type(data).__name__}")
    merged = {**(defaults or {}), **_unwrapped(data), **(overrides or {})}
    spec = spec_from_mapping(merged)
    logger.debug("Loaded experiment spec", path=str(path), policies=spec.policies, cells=cell_count(spec))
    return spec


def cell_count(spec: ExperimentSpec) -> int:
    return len(spec.policies) * len(spec.n) * len(spec.eps) * len(spec.gamma)


# 🎟️🎲🔚
