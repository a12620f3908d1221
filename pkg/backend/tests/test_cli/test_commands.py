"""
CLI 명령 테스트 (run, sweep, 종료 코드)
"""

import pandas as pd
import pytest
from click.testing import CliRunner

from app.commands import EXIT_CONFIG_ERROR, EXIT_IO_ERROR
from app.main import cli
from services.experiment_service import ExperimentResult
from storage.results_storage import RUN_COLUMNS


@pytest.fixture
def runner(monkeypatch, mocker, tmp_path):
    monkeypatch.setenv("COOPSIM_RESULTS_DIR", str(tmp_path / "results"))
    monkeypatch.setenv("COOPSIM_SIM_DURATION_S", "1")
    monkeypatch.delenv("COOPSIM_ENVIRONMENT", raising=False)
    mocker.patch("app.main.setup_logging")
    return CliRunner()


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text(
        "scenario_id = cli\n"
        "n_nodes = 4\n"
        "attackers[0].mode = inflate\n",
        encoding="utf-8"
    )
    return path


class TestRunCommand:
    def test_run_writes_runs_and_summary(self, runner, scenario_file, tmp_path):
        out = tmp_path / "out" / "runs.csv"
        result = runner.invoke(cli, ["run", "--config", str(scenario_file), "--seeds", "2",
                                     "--out", str(out)])

        assert result.exit_code == 0, result.output
        frame = pd.read_csv(out)
        assert list(frame.columns) == RUN_COLUMNS
        assert frame["seed"].tolist() == [1, 2]
        assert set(frame["attack_mode"]) == {"inflate"}
        assert (tmp_path / "out" / "runs_summary.csv").exists()

    def test_default_output_in_results_dir(self, runner, scenario_file, tmp_path):
        result = runner.invoke(cli, ["run", "--config", str(scenario_file), "--seeds", "1"])
        assert result.exit_code == 0, result.output
        assert (tmp_path / "results" / "results.csv").exists()

    def test_invalid_config_exits_with_config_error(self, runner, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("n_nodes = 5\nattackers[0].claimed_us = 40000\n", encoding="utf-8")
        result = runner.invoke(cli, ["run", "--config", str(bad)])

        assert result.exit_code == EXIT_CONFIG_ERROR
        assert "attackers[0].claimed_us" in result.output

    def test_missing_config_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["run", "--config", str(tmp_path / "absent.cfg")])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_unwritable_output_exits_with_io_error(self, runner, scenario_file, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding="utf-8")
        result = runner.invoke(cli, ["run", "--config", str(scenario_file), "--seeds", "1",
                                     "--out", str(blocker / "runs.csv")])
        assert result.exit_code == EXIT_IO_ERROR


class TestSweepCommand:
    def test_sweep_writes_results_and_gain(self, runner, tmp_path):
        out_dir = tmp_path / "sweep"
        result = runner.invoke(cli, ["sweep", "--nodes", "3:4", "--attackers", "1",
                                     "--seeds", "1", "--out", str(out_dir)])

        assert result.exit_code == 0, result.output
        runs = pd.read_csv(out_dir / "results.csv")
        assert sorted(zip(runs["n_nodes"], runs["defense"])) == [
            (3, "off"), (3, "on"), (4, "off"), (4, "on")
        ]
        gains = pd.read_csv(out_dir / "gain.csv")
        assert gains["n_nodes"].tolist() == [3, 4]
        assert (out_dir / "results_summary.csv").exists()

    def test_single_defense_mode(self, runner, scenario_file, tmp_path):
        out_dir = tmp_path / "on-only"
        result = runner.invoke(cli, ["sweep", "--nodes", "4", "--defense", "on",
                                     "--config", str(scenario_file), "--seeds", "1",
                                     "--out", str(out_dir)])

        assert result.exit_code == 0, result.output
        runs = pd.read_csv(out_dir / "results.csv")
        assert runs["defense"].tolist() == ["on"]
        assert pd.read_csv(out_dir / "gain.csv").empty

    def test_bad_node_range(self, runner):
        result = runner.invoke(cli, ["sweep", "--nodes", "ten:20"])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_too_many_attackers_for_point(self, runner, tmp_path):
        result = runner.invoke(cli, ["sweep", "--nodes", "2", "--attackers", "2",
                                     "--seeds", "1", "--out", str(tmp_path / "x")])
        assert result.exit_code == EXIT_CONFIG_ERROR


class TestPaperScaleFlag:
    @pytest.fixture
    def service(self, runner, monkeypatch, mocker):
        monkeypatch.delenv("COOPSIM_SIM_DURATION_S", raising=False)
        monkeypatch.delenv("COOPSIM_REPETITIONS", raising=False)
        fake = mocker.Mock()
        fake.run.return_value = ExperimentResult()
        fake.sweep.return_value = ExperimentResult(gains=pd.DataFrame())
        mocker.patch("app.commands.run.get_experiment_service", return_value=fake)
        mocker.patch("app.commands.sweep.get_experiment_service", return_value=fake)
        return fake

    def test_run_uses_500s_and_50_seeds(self, runner, service, scenario_file, tmp_path):
        result = runner.invoke(cli, ["run", "--config", str(scenario_file), "--paper-scale",
                                     "--out", str(tmp_path / "p" / "runs.csv")])

        assert result.exit_code == 0, result.output
        config, seeds = service.run.call_args.args
        assert config.sim_duration_s == 500
        assert len(seeds) == 50

    def test_sweep_uses_500s_and_50_seeds(self, runner, service, tmp_path):
        result = runner.invoke(cli, ["sweep", "--nodes", "5:10:5", "--attackers", "1",
                                     "--paper-scale", "--out", str(tmp_path / "p")])

        assert result.exit_code == 0, result.output
        template, node_counts, seeds = service.sweep.call_args.args[:3]
        assert template.sim_duration_s == 500
        assert node_counts == [5, 10]
        assert len(seeds) == 50

    def test_explicit_seeds_override_paper_scale(self, runner, service, scenario_file, tmp_path):
        result = runner.invoke(cli, ["run", "--config", str(scenario_file), "--paper-scale",
                                     "--seeds", "3", "--out", str(tmp_path / "p" / "runs.csv")])

        assert result.exit_code == 0, result.output
        assert len(service.run.call_args.args[1]) == 3
