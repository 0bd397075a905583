from pathlib import Path

import pytest
from msgspec import json

from bxos_lab.lab import cli


@pytest.fixture(autouse=True)
def keep_test_logging(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(cli, "_setup_logging", lambda: None)


def test_verify_deltas(tmp_path: Path):
    out = tmp_path / "deltas.json"
    assert cli.main(["verify", "deltas", "--trials", "2", "--out", str(out)]) == cli.EXIT_OK
    report = json.decode(out.read_bytes())
    assert report["experiment"] == "deltas"
    assert report["config"]["trials"] == 2
    assert {check["status"] for check in report["checks"]} <= {"passed", "reported"}


def test_verify_writes_stdout(capsysbinary: pytest.CaptureFixture[bytes]):
    assert cli.main(["verify", "info", "--trials", "3", "--seed", "4"]) == cli.EXIT_OK
    report = json.decode(capsysbinary.readouterr().out)
    assert report["config"]["seed"] == 4


def test_gen_then_opt(tmp_path: Path):
    instance = tmp_path / "instance.json"
    summary = tmp_path / "opt.json"
    assert cli.main(["gen", "--m", "32", "--n", "2", "--seed", "6", "--out", str(instance)]) == cli.EXIT_OK
    assert json.decode(instance.read_bytes())["m"] == 32
    assert cli.main(["opt", "--instance", str(instance), "--eps", "1/100", "--out", str(summary)]) == cli.EXIT_OK
    doc = json.decode(summary.read_bytes())
    assert doc["opt"] == doc["m"] == 32
    assert doc["eps"] == "1/100"
    assert doc["brute_force"] is None


def test_run_protocol(tmp_path: Path):
    out = tmp_path / "run.json"
    args = ["run", "--protocol", "basis-exchange", "--m", "64", "--n", "2", "--trials", "2", "--out", str(out)]
    assert cli.main(args) == cli.EXIT_OK
    assert json.decode(out.read_bytes())["experiment"] == "run:basis-exchange"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "deltas", "--m", "20"],
        ["verify", "deltas", "--eps", "0.5"],
        ["run", "--protocol", "nope", "--trials", "1"],
        ["opt", "--instance", "/nonexistent/instance.json"],
    ],
)
def test_usage_errors(argv: list[str]):
    assert cli.main(argv) == cli.EXIT_USAGE


def test_malformed_instance(tmp_path: Path):
    bad = tmp_path / "bad.json"
    bad.write_bytes(b'{"m": 16}')
    assert cli.main(["opt", "--instance", str(bad)]) == cli.EXIT_USAGE


def test_argparse_rejects_unknown_experiment():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "everything"])
    assert exc.value.code == cli.EXIT_USAGE


def test_relative_out_lands_in_output_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(cli.lconfig, "lab_output_dir", tmp_path)
    assert cli.main(["gen", "--m", "16", "--n", "2", "--seed", "1", "--out", "nested/instance.json"]) == cli.EXIT_OK
    assert json.decode((tmp_path / "nested" / "instance.json").read_bytes())["m"] == 16
