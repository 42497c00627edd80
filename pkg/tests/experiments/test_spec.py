#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from pathlib import Path
from typing import Any

import pytest

from lotterydyn.common.exceptions import ExperimentSpecError
from lotterydyn.config.defaults import DEFAULT_BASE_SEED, DEFAULT_N
from lotterydyn.experiments.models import ExperimentSpec
from lotterydyn.experiments.spec import cell_count, load_experiment_spec, spec_from_mapping


class TestExperimentSpec:
    def test_defaults(self) -> None:
        spec = ExperimentSpec()
        assert spec.policies == ("unif",)
        assert spec.n == (DEFAULT_N,)
        assert spec.base_seed == DEFAULT_BASE_SEED

    def test_scalars_become_grids(self) -> None:
        spec = ExperimentSpec(policies="round", n=5, eps=1e-3, gamma=1e-4)
        assert (spec.policies, spec.n, spec.eps, spec.gamma) == (("round",), (5,), (1e-3,), (1e-4,))

    def test_replicates_only_for_random_policies(self) -> None:
        spec = ExperimentSpec(policies=["unif", "lex"], replicates=7)
        assert spec.replicates_for("unif") == 7
        assert spec.replicates_for("lex") == 1

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"policies": []},
            {"policies": ["unif", "random"]},
            {"n": [1]},
            {"eps": [0.0]},
            {"eps": [1.0]},
            {"gamma": [0.3]},
            {"replicates": 0},
            {"max_steps": 0},
            {"workers": 0},
            {"n": ["five"]},
        ],
    )
    def test_invalid(self, kwargs: dict[str, Any]) -> None:
        with pytest.raises(ExperimentSpecError):
            ExperimentSpec(**kwargs)


class TestSpecFromMapping:
    def test_unwraps_experiment_table(self) -> None:
        spec = spec_from_mapping({"experiment": {"policies": ["lex"], "n": [3, 4]}})
        assert spec.policies == ("lex",)
        assert cell_count(spec) == 2

    @pytest.mark.parametrize(
        "data",
        [
            {"colour": "blue"},
            {"replicates": True},
            {"replicates": 2.5},
            {"record_timing": "yes"},
            {"relative_threshold": 0},
        ],
    )
    def test_rejects(self, data: dict[str, Any]) -> None:
        with pytest.raises(ExperimentSpecError):
            spec_from_mapping(data)


class TestLoadExperimentSpec:
    def test_toml(self, tmp_path: Path) -> None:
        path = tmp_path / "sweep.toml"
        path.write_text('[experiment]\npolicies = ["unif", "round"]\nn = [3, 5]\neps = 1e-4\nreplicates = 4\n')

        spec = load_experiment_spec(path)
        assert spec.policies == ("unif", "round")
        assert spec.eps == (1e-4,)
        assert spec.replicates == 4

    def test_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "sweep.yaml"
        path.write_text("policies: [worst]\nn: 6\ngamma: [0.001, 0.0001]\nrecord_timing: true\n")

        spec = load_experiment_spec(path)
        assert spec.policies == ("worst",)
        assert spec.gamma == (1e-3, 1e-4)
        assert spec.record_timing
        assert spec.relative_threshold

    def test_absolute_threshold(self, tmp_path: Path) -> None:
        path = tmp_path / "sweep.toml"
        path.write_text('policies = ["lex", "worst"]\nrelative_threshold = false\n')
        assert not load_experiment_spec(path).relative_threshold

    def test_empty_yaml_gives_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "empty.yml"
        path.write_text("")
        assert load_experiment_spec(path) == ExperimentSpec()

    def test_precedence(self, tmp_path: Path) -> None:
        path = tmp_path / "sweep.toml"
        path.write_text("base_seed = 5\nworkers = 2\n")

        spec = load_experiment_spec(path, defaults={"base_seed": 1, "max_steps": 99}, overrides={"workers": 3})
        assert (spec.base_seed, spec.max_steps, spec.workers) == (5, 99, 3)

    def test_no_file(self) -> None:
        assert load_experiment_spec(None, overrides={"base_seed": 11}).base_seed == 11

    @pytest.mark.parametrize(
        ("name", "content"),
        [
            ("sweep.json", "{}"),
            ("sweep.toml", "n = [3,"),
            ("sweep.yaml", "n: [3, 4"),
            ("sweep.yaml", "- 3\n- 4\n"),
        ],
    )
    def test_bad_files(self, tmp_path: Path, name: str, content: str) -> None:
        path = tmp_path / name
        path.write_text(content)
        with pytest.raises(ExperimentSpecError):
            load_experiment_spec(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ExperimentSpecError, match="Unable to read"):
            load_experiment_spec(tmp_path / "absent.toml")


# 🎟️🎲🔚
