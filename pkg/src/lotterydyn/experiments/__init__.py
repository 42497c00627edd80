#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Experiment sweeps over selection policies, with CSV and SVG output."""

from lotterydyn.experiments.models import ExperimentSpec, PlotPoint, PlotSeries, ResultRow
from lotterydyn.experiments.output import emit_csv, emit_plot_csv, emit_plot_data, parse_csv
from lotterydyn.experiments.runner import run_experiment
from lotterydyn.experiments.spec import load_experiment_spec, spec_from_mapping
from lotterydyn.experiments.svg import render_svg

__all__ = [
    "ExperimentSpec",
    "PlotPoint",
    "PlotSeries",
    "ResultRow",
    "emit_csv",
    "emit_plot_csv",
    "emit_plot_data",
    "load_experiment_spec",
    "parse_csv",
    "render_svg",
    "run_experiment",
    "spec_from_mapping",
]

# 🎟️🎲🔚
