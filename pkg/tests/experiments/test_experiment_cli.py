#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from pathlib import Path

from provide.testkit import isolated_cli_runner
import pytest

from lotterydyn.common.rng import derive_seed
from lotterydyn.experiments.cli import experiment_command
from lotterydyn.experiments.output import parse_csv

SWEEP = """\
[experiment]
policies = ["unif", "round"]
n = [3]
eps = [1e-3, 1e-5]
gamma = 1e-3
replicates = 2
max_steps = 20000
"""


@pytest.fixture
def sweep_file(tmp_path: Path) -> Path:
    path = tmp_path / "sweep.toml"
    path.write_text(SWEEP)
    return path


class TestExperimentCommand:
    def test_writes_csv_and_svg(self, sweep_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "out"
        args = ["--config", str(sweep_file), "--out", str(out), "--format", "both", "--seed", "9"]
        with isolated_cli_runner() as runner:
            result = runner.invoke(experiment_command, args)

        assert result.exit_code == 0, result.output
        assert "Experiment summary" in result.output
        rows = parse_csv((out / "results.csv").read_bytes())
        assert len(rows) == 2 * 2 + 2
        assert rows[-1].policy == "unif"
        assert {r.seed for r in rows if r.policy == "unif" and r.eps == 1e-3} == {
            derive_seed(9, 0, 0),
            derive_seed(9, 0, 1),
        }
        assert (out / "plot-log_inv_eps.csv").is_file()
        assert (out / "plot-log_inv_eps.svg").is_file()

    def test_svg_only_with_explicit_axes(self, sweep_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "svg"
        args = ["--config", str(sweep_file), "--out", str(out), "--format", "svg", "--x-axis", "inv_eps"]
        args += ["--x-axis", "loglog_inv_eps"]
        with isolated_cli_runner() as runner:
            result = runner.invoke(experiment_command, args)

        assert result.exit_code == 0, result.output
        assert sorted(p.name for p in out.iterdir()) == ["plot-inv_eps.svg", "plot-loglog_inv_eps.svg"]

    def test_relative_to_gamma_must_be_on_grid(self, sweep_file: Path, tmp_path: Path) -> None:
        args = ["--config", str(sweep_file), "--out", str(tmp_path), "--relative-to-gamma", "0.1"]
        with isolated_cli_runner() as runner:
            result = runner.invoke(experiment_command, args)
        assert result.exit_code == 2
        assert "gamma grid" in result.output

    def test_bad_spec_is_a_usage_error(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.toml"
        path.write_text('policies = ["roulette"]\n')
        with isolated_cli_runner() as runner:
            result = runner.invoke(experiment_command, ["--config", str(path), "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert "Unknown policies" in result.output

    def test_unwritable_output(self, sweep_file: Path, tmp_path: Path) -> None:
        blocker = tmp_path / "taken"
        blocker.write_text("")
        with isolated_cli_runner() as runner:
            result = runner.invoke(
                experiment_command, ["--config", str(sweep_file), "--out", str(blocker / "sub")]
            )
        assert result.exit_code == 1


# 🎟️🎲🔚
