import csv
import json
from pathlib import Path

import pytest

from doublewell.cli import run
from doublewell.config import parse_config
from doublewell.errors import ConfigError
from doublewell.probe import CSV_COLUMNS
from doublewell.radial import RadialProblem

ROOT = Path(__file__).resolve().parents[1]
EXAMPLE = str(ROOT / "configs" / "sine_example.json")
ANNULUS = str(ROOT / "configs" / "annulus_n2.json")


def cli(*argv):
    return run(list(argv))


def test_validate_example(capsys):
    assert cli("validate", "--config", EXAMPLE) == 0
    assert "all_ok: True" in capsys.readouterr().out


def test_probe_sup_counts(tmp_path, capsys):
    assert cli("probe-sup", "--config", EXAMPLE, "--trials", "1000", "--seed", "42", "--out", str(tmp_path)) == 0
    assert "1000/1000" in capsys.readouterr().out
    with open(tmp_path / "probe_sup.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1001 and all(r[-1] == "pass" for r in rows[1:])
    assert (tmp_path / "probe_sup.csv").read_bytes().count(b"\r\n") == 1001


def test_report_assertions(tmp_path):
    assert cli("report", "--config", EXAMPLE, "--trials", "100", "--out", str(tmp_path)) == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["assertions_true"] == ["maximizer_u3"]
    assert summary["assertions_false"] == ["minimizer_u1", "minimizer_u2"]


def test_artifacts_byte_identical(tmp_path):
    for d in ("a", "b"):
        assert cli("solve", "--out", str(tmp_path / d)) == 0
        assert cli("probe-lp", "--out", str(tmp_path / d)) == 0
    for name in ("solve.json", "solve.csv", "probe_lp.json", "probe_lp.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    manifest = json.loads((tmp_path / "a" / "manifest.json").read_text())
    assert manifest["command"] == "probe-lp" and manifest["timestamp"]


@pytest.mark.parametrize("cmd", ["solve", "probe-lp", "frechet", "candidates"])
def test_commands_succeed(cmd, tmp_path):
    assert cli(cmd, "--out", str(tmp_path)) == 0
    assert any(tmp_path.glob("*.json"))


def test_frechet_moment_and_sup_norm(tmp_path):
    assert cli("frechet", "--s", "3", "--p", "2", "--out", str(tmp_path)) == 0
    assert (tmp_path / "moment_s3.csv").exists()
    assert cli("frechet", "--p", "inf") == 0


def test_radial_command(tmp_path):
    assert cli("radial", "--config", ANNULUS, "--trials", "100", "--out", str(tmp_path)) == 0
    rep = json.loads((tmp_path / "radial.json").read_text())
    assert rep["verdict"] == "pass"
    assert cli("radial", "--config", EXAMPLE) == 1


def test_config_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema": 1, "a": 0, "b": 1, "lambda": 1, "f": 0, "extra": 1}))
    assert cli("validate", "--config", str(bad)) == 1
    assert "unknown config fields: extra" in capsys.readouterr().err
    assert cli("validate", "--config", str(tmp_path / "missing.json")) == 1
    bad.write_text("{")
    assert cli("validate", "--config", str(bad)) == 1
    assert cli("validate", "--m", "7") == 1
    assert cli("probe-lp", "--p", "4") == 1
    assert cli("probe-lp", "--p", "0.5") == 1
    assert cli("nonsense") == 1


def test_failed_verdict_exit_code(tmp_path):
    cfg = tmp_path / "cos.json"
    cfg.write_text(json.dumps({
        "schema": 1, "a": 0, "b": 6.283185307179586, "lambda": 3, "nu_or_theta": 1,
        "f": {"preset": "cosine", "amplitude": 0.5},
    }))
    assert cli("validate", "--config", str(cfg)) == 2


def test_parse_config_variants():
    prob, m = parse_config({"schema": 1, "a": 0, "b": 1, "lambda": 2, "nu_or_theta": 2.0,
                            "f": {"preset": "sine", "amplitude": 4.0}, "m": 64})
    assert m == 64 and prob.nu == 2.0 and prob.forcing.params["amplitude"] == 2.0
    prob, _ = parse_config({"schema": 1, "a": 0, "b": 1, "lambda": 2,
                            "nu_or_theta": {"samples": [1.0, 2.0]}, "f": 0.0})
    assert prob.theta(1.0) == 2.0 and prob.nu == 1.0
    rp, _ = parse_config(json.loads(Path(ANNULUS).read_text()))
    assert isinstance(rp, RadialProblem) and rp.n == 2
    for cfg in ({"a": 0}, {"schema": 2, "a": 0}, {"schema": 1, "a": 0, "b": 1, "lambda": 1, "f": 0, "m": 5},
                {"schema": 1, "a": 0, "b": 1, "lambda": "x", "f": 0},
                {"schema": 1, "a": 0, "b": 1, "lambda": 1, "f": {"preset": "exp"}}):
        with pytest.raises(ConfigError):
            parse_config(cfg)
