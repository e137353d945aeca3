"""End-to-end tests of the command-line surface and its exit-code contract."""

import json
import subprocess
import sys

import pytest

from sectorlab.cli import ExperimentConfig, main, run


def data_rows(path):
    lines = path.read_text().splitlines()
    return [ln for ln in lines if ln and not ln.startswith("#")]


# ------------------------------------------------------------ subcommands

def test_sieve_writes_ideal_csv(tmp_path, capsys):
    assert main(["sieve", "--max", "300", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert f"wrote {tmp_path / 'ideals.csv'}" in out
    text = (tmp_path / "ideals.csv").read_text()
    assert text.startswith("# sectorlab-ideals-v1 sectorlab=")
    assert data_rows(tmp_path / "ideals.csv")[0] == "p,a,b,norm,splitting,theta"


def test_sectors_scan_row_count(tmp_path):
    assert main(["sectors", "--x", "1e4", "--rho", "0.3", "--grid", "512",
                 "--out", str(tmp_path)]) == 0
    rows = data_rows(tmp_path / "sectors.csv")
    assert rows[0] == "beta,count,expected,deviation"
    assert len(rows) == 1 + 512
    summary = json.loads((tmp_path / "sectors.json").read_text())
    assert summary["grid_size"] == 512
    assert summary["format_version"] == "sectorlab-sectors-v1"


def test_weyl_command(tmp_path):
    assert main(["weyl", "--x", "2000", "--kmax", "4", "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "weyl.json").read_text())
    assert sorted(payload["sums"]) == ["1", "2", "3", "4"]
    assert payload["ideal_count"] > 0
    for cell in payload["sums"].values():
        assert cell["normalized"] <= 1.0


def test_variance_command(tmp_path):
    assert main(["variance", "--x-list", "500", "--x-list", "1000",
                 "--tau", "0.3", "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "variance.json").read_text())
    assert len(payload["cells"]) == 2
    for cell in payload["cells"]:
        assert cell["certificate"]["certified"] is True
    assert (tmp_path / "variance.csv").exists()


def test_realquad_command(tmp_path):
    assert main(["realquad", "--limit", "500", "--kmax", "3",
                 "--out", str(tmp_path)]) == 0
    rows = data_rows(tmp_path / "realquad.csv")
    assert rows[0] == "p,a,b,sign,t"
    payload = json.loads((tmp_path / "realquad.json").read_text())
    assert payload["weyl"]["0"] == 1.0


def test_forbidden_command(tmp_path):
    assert main(["forbidden", "--max", "5000", "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "forbidden.json").read_text())
    assert payload["min_angle"] > 0.0


# ------------------------------------------------------------ exit codes

def test_invalid_rho_exits_2(tmp_path, capsys):
    rc = main(["sectors", "--x", "100", "--rho", "1.5", "--out", str(tmp_path)])
    assert rc == 2
    assert "invalid parameters" in capsys.readouterr().err


def test_bad_kmax_exits_2(tmp_path):
    assert main(["weyl", "--x", "100", "--kmax", "0", "--out", str(tmp_path)]) == 2


def test_bad_limit_exits_2(tmp_path):
    assert main(["realquad", "--limit", "5", "--out", str(tmp_path)]) == 2


def test_unknown_command_exits_2(capsys):
    assert run(ExperimentConfig(command="nope")) == 2
    assert "unknown command" in capsys.readouterr().err


def test_fractional_literal_rejected():
    with pytest.raises(SystemExit) as info:
        main(["sieve", "--max", "10.5"])
    assert info.value.code == 2


# ------------------------------------------------------------ argument forms

def test_scientific_notation_matches_plain(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["sieve", "--max", "1e3", "--out", str(a)]) == 0
    assert main(["sieve", "--max", "1000", "--out", str(b)]) == 0
    assert (a / "ideals.csv").read_bytes() == (b / "ideals.csv").read_bytes()


def test_split_only_drops_nonsplit_rows(tmp_path):
    a, b = tmp_path / "all", tmp_path / "split"
    main(["sieve", "--max", "100", "--out", str(a)])
    main(["sieve", "--max", "100", "--split-only", "--out", str(b)])
    assert "inert" in (a / "ideals.csv").read_text()
    text = (b / "ideals.csv").read_text()
    assert "inert" not in text and "ramified" not in text


def test_config_defaults():
    config = ExperimentConfig(command="sieve")
    assert config.include_nonsplit is True
    assert ExperimentConfig(command="sieve", split_only=True).include_nonsplit is False
    assert config.taus == (0.2, 0.4, 0.55)


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith("sectorlab ")


# ------------------------------------------------------------ determinism

def test_reruns_are_byte_identical(tmp_path):
    for args, names in (
        (["sectors", "--x", "3000", "--rho", "0.25", "--grid", "64"],
         ("sectors.csv", "sectors.json")),
        (["realquad", "--limit", "300", "--kmax", "3"],
         ("realquad.csv", "realquad.json")),
        (["variance", "--x-list", "400", "--tau", "0.3"],
         ("variance.csv", "variance.json")),
    ):
        a, b = tmp_path / (args[0] + "1"), tmp_path / (args[0] + "2")
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        for name in names:
            assert (a / name).read_bytes() == (b / name).read_bytes()


# ------------------------------------------------------------ entry point

def test_module_invocation(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "sectorlab", "--version"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("sectorlab ")
    proc = subprocess.run(
        [sys.executable, "-m", "sectorlab", "sieve", "--max", "50",
         "--out", str(tmp_path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert (tmp_path / "ideals.csv").exists()
