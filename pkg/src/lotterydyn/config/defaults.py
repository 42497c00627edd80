#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Centralized defaults and constants for lotterydyn.

All hardcoded defaults should be defined here instead of inline in the code."""

import math

# Experiment defaults
DEFAULT_EPS = 1e-10
DEFAULT_GAMMA = 1e-10
DEFAULT_N = 10
DEFAULT_REPLICATES = 100
DEFAULT_BASE_SEED = 20240101
DEFAULT_MAX_STEPS = 1_000_000
DEFAULT_WORKERS = 1

# Dynamics
CYCLE_SIGNIFICANT_DIGITS = 12
RING_BUFFER_SIZE = 64
WARMUP_MAX_SINGLE = 0.25
RATIO_FLOOR = math.sqrt(3) / 2

# Numeric tolerances
WEIGHT_SUM_TOLERANCE = 1e-12
INVARIANT_TOLERANCE = 1e-12
FINITE_DIFFERENCE_STEP = 1e-5

# Contraction constants of the potential
KAPPA_G = min(1 / 20, (1 / 3 - 27 / 125) / 64)
KAPPA_H = min((math.sqrt(6 / 5) - 1) ** 2 / 8, 1 / 12)
KAPPA = KAPPA_G * KAPPA_H

# Selection policy names, in the order experiments report them
POLICY_NAMES = ("unif", "round", "lex", "worst", "best")
RANDOMIZED_POLICIES = frozenset({"unif"})

# Plot data x-axis transforms
PLOT_TRANSFORMS = (
    "inv_eps",
    "log_inv_eps",
    "loglog_inv_eps",
    "inv_eps_fifth",
    "log_inv_eps_fifth",
    "nlogn",
    "n2",
    "n3",
    "loglog_inv_gamma",
)

# Result file schema
CSV_HEADER = ("policy", "n", "eps", "gamma", "seed", "steps", "outcome", "warmup_end", "nanos")
OUTPUT_FORMATS = ("csv", "svg", "both")

# Configuration files
CONFIG_FILENAME = "lotterydyn.toml"
DEFAULT_CONFIG_SUBDIR = "lotterydyn"
DEFAULT_OUTPUT_DIR = "lotterydyn-output"

# Environment variables
ENV_LOTTERYDYN_LOG_LEVEL = "LOTTERYDYN_LOG_LEVEL"
ENV_LOTTERYDYN_WORKERS = "LOTTERYDYN_WORKERS"
ENV_LOTTERYDYN_SEED = "LOTTERYDYN_SEED"
ENV_LOTTERYDYN_OUTPUT_DIR = "LOTTERYDYN_OUTPUT_DIR"

# Logging
LOG_LEVELS = ["NOTSET", "TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

# 🎟️🎲🔚
