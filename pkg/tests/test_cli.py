"""Command-line interface: exit codes, reports, determinism."""

import json
import subprocess
import sys

import pytest

from bvgrid import save_function
from conftest import scalar_fn, theta_family

CLI = [sys.executable, "-m", "bvgrid.cli"]


def run_cli(*args, **kw):
    return subprocess.run(
        CLI + list(args), capture_output=True, timeout=120, **kw
    )


@pytest.fixture
def files(tmp_path):
    f = tmp_path / "f.json"
    f.write_bytes(save_function(scalar_fn([[0, 0], [1, 1]])))
    g = tmp_path / "g.json"
    g.write_bytes(save_function(scalar_fn([[0, 0], [0, 0]])))
    cfg = tmp_path / "w1.json"
    cfg.write_text(json.dumps({"family": "wiener", "p": 1}))
    return tmp_path, f, g, cfg


def test_variation_computes(files):
    _, f, _, cfg = files
    res = run_cli("variation", str(f), "--family-config", str(cfg))
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["status"] == "computed"
    assert obj["results"]["sup"]["value"] == 1.0


def test_reports_are_byte_identical(files):
    _, f, g, cfg = files
    a = run_cli("distance", str(f), str(g), "--family-config", str(cfg))
    b = run_cli("distance", str(f), str(g), "--family-config", str(cfg))
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_out_flag_writes_file(files):
    tmp, f, _, cfg = files
    out = tmp / "report.json"
    res = run_cli("variation", str(f), "--family-config", str(cfg), "--out", str(out))
    assert res.returncode == 0
    assert res.stdout == b""
    assert json.loads(out.read_bytes())["command"] == "variation"


def test_malformed_input_exits_2(files):
    tmp, _, _, cfg = files
    bad = tmp / "bad.json"
    bad.write_text("{nope")
    res = run_cli("variation", str(bad), "--family-config", str(cfg))
    assert res.returncode == 2
    assert b"error" in res.stderr


def test_bad_config_exits_2(files):
    tmp, f, _, _ = files
    cfg = tmp / "riesz1.json"
    cfg.write_text(json.dumps({"family": "riesz", "p": 1}))
    res = run_cli("variation", str(f), "--family-config", str(cfg))
    assert res.returncode == 2


def test_grid_mismatch_exits_2(files):
    tmp, f, _, cfg = files
    h = tmp / "h.json"
    h.write_bytes(save_function(scalar_fn([[0, 0, 0], [1, 1, 1]])))
    res = run_cli("distance", str(f), str(h), "--family-config", str(cfg))
    assert res.returncode == 2


def test_size_guard_exits_3(files, tmp_path):
    big = tmp_path / "big.json"
    big.write_bytes(save_function(scalar_fn([[float(i % 2)] * 2 for i in range(30)])))
    cfg2 = tmp_path / "w2.json"
    cfg2.write_text(json.dumps({"family": "wiener", "p": 2}))
    res = run_cli(
        "variation", str(big), "--family-config", str(cfg2), "--method", "brute"
    )
    assert res.returncode == 3


def test_verify_suite_passes():
    res = run_cli("verify", "semigroup", "--seed", "11", "--count", "50")
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"


def test_verify_requires_seed():
    res = run_cli("verify", "semigroup", "--count", "5")
    assert res.returncode == 2  # argparse usage error


def test_precompact_command(files, tmp_path):
    fam_file = tmp_path / "family.json"
    fam_file.write_text(json.dumps(theta_family(11).to_json()))
    _, _, _, cfg = files
    res = run_cli(
        "precompact", str(fam_file), "--epsilon", "0.25", "--family-config", str(cfg)
    )
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["status"] == "pass"
    assert obj["results"]["net"]["certificate"]["holds"] is True


def test_missing_file_exits_2(files):
    _, _, _, cfg = files
    res = run_cli("variation", "/no/such/file.json", "--family-config", str(cfg))
    assert res.returncode == 2
