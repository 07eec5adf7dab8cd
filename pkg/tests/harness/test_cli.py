# coding: utf-8
import argparse
import json

import pytest

from netreserve import __version__
from netreserve.configs import TWO_SERVER_CONFIG
from netreserve.harness.cli import get_parser
from netreserve.harness.cli import main
from netreserve.harness.cli import parse_ks
from netreserve.harness.cli import parse_seeds
from netreserve.harness.config import ExperimentConfig


def _write_config(tmpdir, **changes):
    cfg = ExperimentConfig.from_json(TWO_SERVER_CONFIG).replace(**changes)
    path = tmpdir.join("config.json")
    path.write(json.dumps(cfg.to_value()))
    return str(path)


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("0..3", [0, 1, 2, 3], id="range"),
        pytest.param("4", [4], id="single"),
        pytest.param("5,2,9", [5, 2, 9], id="list"),
    ],
)
def test_parse_seeds(text, expected):
    assert parse_seeds(text) == expected


def test_parse_seeds__invalid():
    with pytest.raises(argparse.ArgumentTypeError):
        parse_seeds("a..b")


def test_parse_ks():
    assert parse_ks("1,T") == [1, "T"]
    with pytest.raises(argparse.ArgumentTypeError):
        parse_ks("1,K")


def test_get_parser():
    args = get_parser().parse_args(["run", "--policies", "saddle,lazy", "--seeds", "0..2", "--k", "1,T,10"])
    assert args.command == "run"
    assert args.config == TWO_SERVER_CONFIG
    assert args.policies == ["saddle", "lazy"]
    assert args.seeds == [0, 1, 2]
    assert args.benchmarks == [1, "T", 10]
    assert args.jobs == 1
    assert not args.svg


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out


def test_run_and_compare(tmpdir, capsys):
    config_path = _write_config(tmpdir, horizon=10)
    out_dir = tmpdir.join("out")
    status = main(["run", "--config", config_path, "--out", str(out_dir), "--policies", "saddle,lazy", "--seeds", "0,1"])
    assert status == 0
    printed = capsys.readouterr().out.splitlines()
    assert out_dir.join("summary.json").strpath in printed
    assert out_dir.join("ledger_saddle_1.csv").check()

    status = main(["compare", "--out", str(out_dir)])
    assert status == 0
    table = capsys.readouterr().out.splitlines()
    assert table[0].split()[0] == "label"
    assert len(table) == 5


def test_run__svg(tmpdir):
    config_path = _write_config(tmpdir, horizon=5, policies=["naive"])
    out_dir = tmpdir.join("out")
    assert main(["run", "--config", config_path, "--out", str(out_dir), "--svg"]) == 0
    assert out_dir.join("fig_violations.svg").check()


def test_run__unknown_policy(tmpdir, capsys):
    config_path = _write_config(tmpdir, horizon=5)
    status = main(["run", "--config", config_path, "--out", str(tmpdir.join("out")), "--policies", "greedy"])
    assert status == 1
    error = json.loads(capsys.readouterr().err)
    assert error["error"] == "ConfigError"


def test_run__invalid_config(tmpdir, capsys):
    path = tmpdir.join("config.json")
    path.write("[]")
    assert main(["run", "--config", str(path)]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "ConfigError"


def test_run__missing_config(tmpdir, capsys):
    assert main(["run", "--config", str(tmpdir.join("missing.json"))]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "FileNotFoundError"


def test_compare__empty_directory(tmpdir, capsys):
    assert main(["compare", "--out", str(tmpdir)]) == 1
    error = json.loads(capsys.readouterr().err)
    assert error["error"] == "HarnessError"
    assert json.loads(tmpdir.join("error.json").read()) == error


def test_bounds(tmpdir, capsys):
    config_path = _write_config(tmpdir, horizon=100)
    assert main(["bounds", "--config", config_path, "--aleph-max", "20", "--epsilon", "0.1"]) == 0
    value = json.loads(capsys.readouterr().out)
    assert value["constants"]["theta_bound"] == pytest.approx(65.9)
    assert set(value["reports"]) == {"saddle", "saddle-a0.01"}
    report = value["reports"]["saddle"]
    assert 1 <= report["aleph"] <= 20
    assert set(report["by_window"]) == {"1", "100"}
    assert report["by_window"]["1"]["drift_B"] == pytest.approx(86.8762)
    assert value["epsilon_schedule"]["horizon"] == 1000


def test_bounds__no_slater_point(tmpdir, capsys):
    cfg = ExperimentConfig.from_json(TWO_SERVER_CONFIG)
    value = cfg.to_value()
    value["network"]["v"] = 0
    path = tmpdir.join("config.json")
    path.write(json.dumps(value))
    assert main(["bounds", "--config", str(path)]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "ConfigError"


@pytest.mark.parametrize(
    "options",
    [
        pytest.param(["--epsilon", "1.5"], id="epsilon-above"),
        pytest.param(["--epsilon", "0"], id="null-epsilon"),
        pytest.param(["--delta", "1"], id="delta"),
        pytest.param(["--aleph-max", "0"], id="aleph-max"),
    ],
)
def test_bounds__out_of_range(options, capsys):
    assert main(["bounds"] + options) == 1
    error = json.loads(capsys.readouterr().err)
    assert error["error"] == "ConfigError"


def test_run__invalid_policy_option(tmpdir, capsys):
    value = ExperimentConfig.from_json(TWO_SERVER_CONFIG).to_value()
    value["policies"][0]["alpha"] = 0
    path = tmpdir.join("config.json")
    path.write(json.dumps(value))
    assert main(["run", "--config", str(path), "--out", str(tmpdir.join("out"))]) == 1
    error = json.loads(capsys.readouterr().err)
    assert error["error"] == "ConfigError"
    assert "alpha" in error["message"]


def test_run__timings(tmpdir):
    config_path = _write_config(tmpdir, horizon=5, policies=["naive"])
    without = tmpdir.join("without")
    assert main(["run", "--config", config_path, "--out", str(without)]) == 0
    assert not without.join("timings.json").check()
    with_timings = tmpdir.join("with")
    assert main(["run", "--config", config_path, "--out", str(with_timings), "--timings"]) == 0
    timings = json.loads(with_timings.join("timings.json").read())
    assert timings
