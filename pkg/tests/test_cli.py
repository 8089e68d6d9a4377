"""End-to-end checks of the command-line front end."""

from __future__ import annotations

import subprocess
import sys

import pytest

from kummercodes.cli import main

HERM_CFG = """
[field]
p = 2
e = 2
modulus = 1,1,1

[curve]
m = 3
lambda = 1
f = 0,1,1

[job]
divisor = {divisor}
places = {places}
coords = {coords}
bound = {bound}
"""


def write_cfg(tmp_path, divisor="0,0,3", places="P1,P2", coords="1,1", bound="6"):
    path = tmp_path / "job.ini"
    path.write_text(HERM_CFG.format(divisor=divisor, places=places,
                                    coords=coords, bound=bound))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_curve_info(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    code, out, _ = run_cli(capsys, "curve-info", "--config", cfg)
    assert code == 0
    got = dict(line.split() for line in out.splitlines())
    assert got["genus"] == "1"
    assert got["places"] == "9"
    assert got["r"] == "2"


def test_places_csv(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    code, out, _ = run_cli(capsys, "places", "--config", cfg)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "kind,mu,x,y"
    assert len(lines) == 10
    assert lines[1].startswith("infinity")


def test_dim_zero_divisor(tmp_path, capsys):
    cfg = write_cfg(tmp_path, divisor="0,0,0")
    code, out, _ = run_cli(capsys, "dim", "--config", cfg)
    assert code == 0
    assert out.strip() == "1"


def test_rr_basis_format(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    code, out, _ = run_cli(capsys, "rr-basis", "--config", cfg)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3  # ell(3 P_inf) = 3
    for line in lines:
        left, right = line.split(" | ")
        i, *js = (int(v) for v in left.split())
        orders = [int(v) for v in right.split()]
        assert orders[0] == -i
        assert orders[-1] == 2 * i + 3 * sum(int(v) for v in js)


def test_semigroup_and_pure_gaps(tmp_path, capsys):
    cfg = write_cfg(tmp_path, places="P1", coords="1")
    code, out, _ = run_cli(capsys, "semigroup", "--config", cfg)
    assert code == 0 and out.strip() == "false"  # 1 is the gap at P1 (g=1)

    code, out, _ = run_cli(capsys, "pure-gaps", "--config", cfg)
    assert code == 0
    assert out.splitlines() == ["1"]


def test_floor_output(tmp_path, capsys):
    cfg = write_cfg(tmp_path, divisor="1,0,0")
    code, out, _ = run_cli(capsys, "floor", "--config", cfg)
    assert code == 0
    assert out.strip() == "0 0 0"  # 1 is a gap at P1, so the floor drops it


def test_build_code_export(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    out_path = tmp_path / "code.txt"
    code, out, _ = run_cli(capsys, "build-code", "--config", cfg,
                           "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    n, k, q = (int(v) for v in lines[0].split())
    assert (n, k, q) == (8, 5, 4)
    assert len(lines) == 1 + k
    assert "selection all" in out
    assert "bound goppa_omega 3" in out


def test_check_distance(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    code, out, _ = run_cli(capsys, "check-distance", "--config", cfg)
    assert code == 0
    assert out.strip() == "3"


def test_config_errors_exit_2(tmp_path, capsys):
    code, _, err = run_cli(capsys, "dim", "--config", str(tmp_path / "missing.ini"))
    assert code == 2
    assert "config error" in err

    bad = tmp_path / "bad.ini"
    bad.write_text("[field]\np = 2\n")
    code, _, err = run_cli(capsys, "dim", "--config", bad.as_posix())
    assert code == 2

    code, _, err = run_cli(capsys, "dim")
    assert code == 2


def test_math_errors_exit_1(tmp_path, capsys):
    gcd_bad = tmp_path / "gcd.ini"
    gcd_bad.write_text("\n".join([
        "[field]", "p = 5", "e = 2", "modulus = 2,0,1",
        "[curve]", "m = 6", "lambda = 4", "f = 0,4,0,0,0,1", ""]))
    code, _, err = run_cli(capsys, "curve-info", "--config", gcd_bad.as_posix())
    assert code == 1
    assert "gcd" in err


def test_verify_example_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify-example", "4")
    assert code == 0
    assert "PASS code parameters: [254,228]" in out
    code, _, err = run_cli(capsys, "verify-example", "7")
    assert code == 2


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "kummercodes.cli",
                           "verify-example", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") >= 6
