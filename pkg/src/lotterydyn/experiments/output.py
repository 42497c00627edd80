#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""CSV rows and plot-ready series.

CSV schema: `policy,n,eps,gamma,seed,steps,outcome,warmup_end,nanos`, one row
per run, floats in shortest round-trip form, empty `warmup_end` when the run
never warmed up, `\\n` line endings. `steps` counts selection events.
"""

from collections import defaultdict
from collections.abc import Callable, Iterable, Sequence
import csv
import io
import math
from pathlib import Path

import numpy as np
from provide.foundation import logger

from lotterydyn.common.exceptions import OutputError
from lotterydyn.config.defaults import CSV_HEADER, PLOT_TRANSFORMS
from lotterydyn.experiments.models import OUTCOME_TAGS, PlotPoint, PlotSeries, ResultRow


def _lglg(value: float) -> float:
    return math.log2(math.log2(value))


TRANSFORMS: dict[str, Callable[[ResultRow], float]] = {
    "inv_eps": lambda r: 1.0 / r.eps,
    "log_inv_eps": lambda r: math.log(1.0 / r.eps),
    "loglog_inv_eps": lambda r: _lglg(1.0 / r.eps),
    "inv_eps_fifth": lambda r: (1.0 / r.eps) ** 0.2,
    "log_inv_eps_fifth": lambda r: math.log(1.0 / r.eps) ** 5,
    "nlogn": lambda r: r.n * math.log(r.n),
    "n2": lambda r: float(r.n**2),
    "n3": lambda r: float(r.n**3),
    "loglog_inv_gamma": lambda r: _lglg(1.0 / r.gamma),
}


def _row_fields(row: ResultRow) -> list[str]:
    return [
        row.policy,
        str(row.n),
        repr(row.eps),
        repr(row.gamma),
        str(row.seed),
        str(row.steps),
        row.outcome,
        "" if row.warmup_end is None else str(row.warmup_end),
        str(row.nanos),
    ]


def emit_csv(rows: Iterable[ResultRow]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(_row_fields(row))
    return buffer.getvalue().encode("utf-8")


def write_csv(rows: Iterable[ResultRow], path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(emit_csv(rows))
    except OSError as e:
        raise OutputError(f"Error writing CSV to {path}: {e}") from e
    return path


def parse_csv(data: bytes) -> list[ResultRow]:
    """Rows of a CSV produced by `emit_csv`."""
    reader = csv.reader(io.StringIO(data.decode("utf-8")))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise OutputError(f"Unexpected CSV header {header}, expected {list(CSV_HEADER)}")
    rows = []
    for line_no, fields in enumerate(reader, start=2):
        if len(fields) != len(CSV_HEADER):
            raise OutputError(f"Line {line_no} has {len(fields)} fields, expected {len(CSV_HEADER)}")
        policy, n, eps, gamma, seed, steps, outcome, warmup_end, nanos = fields
        if outcome not in OUTCOME_TAGS:
            raise OutputError(f"Line {line_no}: unknown outcome '{outcome}'")
        try:
            rows.append(
                ResultRow(
                    policy=policy,
                    n=int(n),
                    eps=float(eps),
                    gamma=float(gamma),
                    seed=int(seed),
                    steps=int(steps),
                    outcome=outcome,
                    warmup_end=int(warmup_end) if warmup_end else None,
                    nanos=int(nanos),
                )
            )
        except ValueError as e:
            raise OutputError(f"Line {line_no}: {e}") from e
    return rows


def _fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float, float | None]:
    if len(set(xs)) < 2:
        return 0.0, float(np.mean(ys)) if ys else 0.0, None
    slope, intercept = np.polyfit(xs, ys, 1)
    correlation = None
    if float(np.std(ys)) > 0:
        correlation = float(np.corrcoef(xs, ys)[0, 1])
    return float(slope), float(intercept), correlation


def emit_plot_data(
    rows: Iterable[ResultRow], tag: str, relative_to_gamma: float | None = None
) -> list[PlotSeries]:
    """Per-policy (transformed x, mean steps, standard error) series over converged rows.

    With `relative_to_gamma`, each policy's mean at that gamma is subtracted from its points.
    """
    transform = TRANSFORMS.get(tag)
    if transform is None:
        raise OutputError(f"Unknown plot transform '{tag}', expected one of {list(PLOT_TRANSFORMS)}")

    grouped: dict[str, dict[float, list[int]]] = defaultdict(lambda: defaultdict(list))
    baselines: dict[str, list[int]] = defaultdict(list)
    skipped = 0
    for row in rows:
        if row.outcome != "converged":
            skipped += 1
            continue
        grouped[row.policy][transform(row)].append(row.steps)
        if relative_to_gamma is not None and math.isclose(row.gamma, relative_to_gamma):
            baselines[row.policy].append(row.steps)
    if skipped:
        logger.debug("Skipped non-converged rows in plot data", tag=tag, skipped=skipped)

    series = []
    for policy in sorted(grouped):
        shift = 0.0
        if relative_to_gamma is not None:
            if not baselines[policy]:
                raise OutputError(f"No converged rows for policy '{policy}' at gamma={relative_to_gamma}")
            shift = float(np.mean(baselines[policy]))
        points = []
        for x in sorted(grouped[policy]):
            steps = np.asarray(grouped[policy][x], dtype=np.float64)
            stderr = float(steps.std(ddof=1) / math.sqrt(len(steps))) if len(steps) > 1 else 0.0
            points.append(
                PlotPoint(x=x, mean_steps=float(steps.mean()) - shift, stderr=stderr, count=len(steps))
            )
        slope, intercept, correlation = _fit([p.x for p in points], [p.mean_steps for p in points])
        series.append(
            PlotSeries(
                policy=policy,
                tag=tag,
                points=tuple(points),
                slope=slope,
                intercept=intercept,
                correlation=correlation,
            )
        )
    return series


def emit_plot_csv(series: Sequence[PlotSeries]) -> bytes:
    """Plot series as `policy,x,mean_steps,stderr,count` lines."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("policy", "x", "mean_steps", "stderr", "count"))
    for s in series:
        for p in s.points:
            writer.writerow((s.policy, repr(p.x), repr(p.mean_steps), repr(p.stderr), p.count))
    return buffer.getvalue().encode("utf-8")


def default_axes(rows: Sequence[ResultRow]) -> tuple[str, ...]:
    """Transforms worth plotting for whatever grid the rows vary over."""
    axes = []
    if len({r.eps for r in rows}) > 1:
        axes.append("log_inv_eps")
    if len({r.n for r in rows}) > 1:
        axes.append("nlogn")
    if len({r.gamma for r in rows}) > 1:
        axes.append("loglog_inv_gamma")
    return tuple(axes) or ("log_inv_eps",)


# 🎟️🎲🔚
