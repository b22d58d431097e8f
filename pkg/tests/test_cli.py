import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from eitnoise import cli

SMALL = ["--set", "omega_grid=0.1,0.25,0.8", "--set", "z_grid=0,12.5,50,200"]


def _rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_parse_config_text():
    text = "# reference run\nomega1 = 1\n\n omega2=2 # probe\nmode = numeric\n"
    assert cli.parse_config_text(text) == {"omega1": "1", "omega2": "2", "mode": "numeric"}
    with pytest.raises(cli.ConfigError):
        cli.parse_config_text("omega1 1")


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("omega1 = 2\nxi = -1\nomega_min = 0.1\nomega_max = 0.5\nomega_n = 5\n")
    cfg = cli.load_config(str(path), ["xi=-2", "theta_list=0,0.5"])
    assert cfg.drive.omega1 == pytest.approx(2.0)
    assert cfg.drive.xi2 == -2.0
    assert cfg.theta_list == (0.0, 0.5)
    assert cfg.omega_grid == pytest.approx((0.1, 0.2, 0.3, 0.4, 0.5))


def test_amplitudes_override_rabi():
    cfg = cli.load_config(None, ["alpha1=120", "alpha2=60"])
    assert (cfg.drive.omega1, cfg.drive.omega2) == pytest.approx((2.0, 1.0))


def test_sweep_writes_ordered_records(tmp_path):
    out = tmp_path / "s.csv"
    assert cli.main(["sweep", *SMALL, "--set", "theta_list=0,0.5", "--out", str(out)]) == 0
    rows = _rows(out)
    assert list(rows[0]) == list(cli.COLUMNS)
    assert len(rows) == 3 * 4 * 2 * 2
    keys = [(float(r["omega_over_gamma"]), float(r["z_C_over_gamma"]), float(r["theta"]),
             int(r["beam"])) for r in rows]
    assert keys == sorted(keys)
    first = rows[1]
    assert float(first["s_analytic"]) == pytest.approx(math.exp(-6), abs=1e-12)
    assert all(float(r["abs_diff"]) <= 1e-6 for r in rows)


def test_output_is_byte_stable(tmp_path):
    a, b, c = (tmp_path / n for n in ("a.csv", "b.csv", "c.csv"))
    cli.main(["sweep", *SMALL, "--out", str(a)])
    cli.main(["sweep", *SMALL, "--out", str(b)])
    cli.main(["sweep", *SMALL, "--set", "workers=2", "--out", str(c)])
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_seventeen_digit_format(tmp_path):
    out = tmp_path / "s.csv"
    cli.main(["sweep", "--set", "omega_grid=0.1", "--set", "z_grid=0,1", "--out", str(out)])
    value = _rows(out)[3]["s_numeric"]
    assert value == format(float(value), ".17g")


@pytest.mark.parametrize("mode, empty", [("analytic", ("s_numeric", "abs_diff")),
                                         ("numeric", ("s_analytic", "abs_diff"))])
def test_mode_dependent_columns(tmp_path, mode, empty):
    out = tmp_path / "s.csv"
    assert cli.main(["sweep", *SMALL, "--mode", mode, "--out", str(out)]) == 0
    for row in _rows(out):
        assert all(row[k] == "" for k in empty)


def test_coherent_compare(tmp_path):
    out = tmp_path / "s.csv"
    code = cli.main(["compare", *SMALL, "--set", "xi=0", "--set", "omega1=0.7",
                     "--out", str(out)])
    assert code == 0
    for row in _rows(out):
        assert float(row["abs_diff"]) <= 1e-9
        assert abs(float(row["s_analytic"]) - 1) <= 1e-9
        assert abs(float(row["s_numeric"]) - 1) <= 1e-9


def test_compare_report_passes(capsys):
    assert cli.main(["compare", "--set", "omega_n=5", "--set", "z_n=21"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["passed"]
    assert summary["max_rel_deviation"] <= 1e-3
    assert summary["eigen_max_rel_dev_absorption"] <= 1e-6
    assert summary["eigen_max_rel_dev_oscillation"] <= 1e-6
    assert summary["points"] == 5 * 21 * 2


def test_corrupted_diffusion_fails_compare(capsys):
    code = cli.main(["compare", *SMALL, "--set", "corrupt_diffusion=1e-3"])
    assert code == 1
    assert not json.loads(capsys.readouterr().out)["passed"]


def test_decoherence_mode(tmp_path):
    out = tmp_path / "s.csv"
    assert cli.main(["sweep", "--set", "omega_grid=0.25", "--set", "z_grid=0,50,100",
                     "--set", "gamma12=0.002", "--mode", "decoherence", "--out", str(out)]) == 0
    probe = [r for r in _rows(out) if r["beam"] == "2"]
    assert float(probe[0]["abs_diff"]) <= 1e-12
    assert 0.01 < float(probe[1]["abs_diff"]) < 0.2


@pytest.mark.parametrize("override", [
    "omega_grid=", "z_grid=", "omega_grid=0.5,0.2", "z_grid=0,1,1", "mode=fast",
    "bogus=1", "gamma1=-1", "omega_n=0", "theta_list=", "omega1=abc",
])
def test_config_errors(override, capsys):
    assert cli.main(["sweep", "--set", override]) == 2
    assert "config error" in capsys.readouterr().err


def test_missing_config_file(tmp_path):
    assert cli.main(["sweep", "--config", str(tmp_path / "nope.cfg")]) == 2


def test_numerical_failure_reports_location(capsys):
    code = cli.main(["sweep", *SMALL, "--set", "corrupt_diffusion=-1e-2"])
    assert code == 3
    err = capsys.readouterr().err
    assert "omega=" in err and "z=" in err


def test_scales(capsys):
    assert cli.main(["scales", "--set", "omega=0.1"]) == 0
    out = dict(line.split(" = ") for line in capsys.readouterr().out.splitlines())
    assert float(out["z_abs_over_z_osc"]) == pytest.approx(9.95, abs=0.05)
    assert float(out["fluctuation_peak_over_gamma"]) == pytest.approx(np.sqrt(2))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eitnoise", "scales"],
                          capture_output=True, text=True, check=True)
    assert "z_max_transfer_C_over_gamma = 24.44" in proc.stdout
