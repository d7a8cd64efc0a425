import json
import os
import subprocess
import sys

import pytest

from k10.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "table")
    assert code == 0
    assert out.count("[PASS]") == 4


def test_verify_table_json(capsys):
    code, out, _ = run(capsys, "verify", "table", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [r["status"] for r in data] == ["pass"] * 4
    assert all("elapsed_ms" not in r for r in data)


def test_json_is_byte_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "table", "--format", "json")
    _, second, _ = run(capsys, "verify", "table", "--format", "json")
    assert first == second


@pytest.mark.parametrize("fixture", ["bad-sign", "printed"])
def test_broken_fixtures_fail(capsys, fixture):
    code, out, _ = run(capsys, "verify", "table", "--fixture", fixture)
    assert code == 1
    assert "[FAIL] supercommutativity" in out


def test_unknown_fixture_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "table", "--fixture", "nope")
    assert code == 2 and "unknown fixture" in err


def test_verify_catalog(capsys):
    code, out, _ = run(capsys, "verify", "catalog")
    assert code == 0
    lines = out.splitlines()
    assert sum(line.startswith("[PASS] catalog entry") for line in lines) == 21
    assert sum(line.startswith("[PASS] Kaplansky") for line in lines) == 2


def test_verify_single_entry(capsys):
    code, out, _ = run(capsys, "verify", "catalog", "--entry", "16")
    assert code == 0
    assert "J^(0,0) = <1, e⊗e, x⊗y - y⊗x>" in out
    assert "J^(2,1) = <x⊗x>" in out
    assert "type: (7, 0, 1)" in out


def test_unknown_entry(capsys):
    code, _, err = run(capsys, "verify", "catalog", "--entry", "22")
    assert code == 2
    assert "UnknownEntry" in err


def test_grading_toral(capsys):
    code, out, _ = run(capsys, "grading", "t", "1/3", "1/3")
    assert code == 0
    assert "J^1 = <y⊗y, e⊗x, x⊗e>" in out
    assert "type: (0, 0, 2, 1)" in out
    assert "catalog entry: 4" in out


def test_grading_trivial(capsys):
    code, out, _ = run(capsys, "grading", "t", "1/1", "1/1")
    assert code == 0
    assert "catalog entry: trivial" in out
    assert out.count("J^") == 1


def test_grading_delta(capsys):
    code, out, _ = run(capsys, "grading", "delta")
    assert code == 0
    assert "J^0 = <1, e⊗e, x⊗y - y⊗x, e⊗x + x⊗e, e⊗y + y⊗e>" in out
    assert "catalog entry: 19" in out


def test_grading_delta_t_and_hom(capsys):
    code, out, _ = run(capsys, "grading", "delta-t", "1/3")
    assert code == 0 and "catalog entry: 21" in out
    code, out, _ = run(capsys, "grading", "hom", "5", "1", "2")
    assert code == 0 and "catalog entry: 13" in out


def test_grading_json(capsys):
    code, out, _ = run(capsys, "grading", "t", "1/4", "1/4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == [0, 3, 0, 1]
    assert data["group"]["torsion"] == [4]


def test_grading_usage_errors(capsys):
    assert run(capsys, "grading")[0] == 2
    assert run(capsys, "grading", "t", "1/7", "1/3")[0] == 2
    assert run(capsys, "grading", "t", "1/3")[0] == 2
    assert run(capsys, "grading", "t", "1/3", "1/3", "--format=xml")[0] == 2


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "1/3", "1/4")
    assert code == 0
    assert "8 elements" in out
    assert "t(1/4, 1/3)  via delta" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "1/5", "2/5")
    assert code == 0
    assert "entry 13" in out


def test_mad(capsys):
    code, out, _ = run(capsys, "mad")
    assert code == 0
    assert out.count("[PASS] MAD") == 3


def test_export(capsys):
    code, out, _ = run(capsys, "export", "catalog")
    assert code == 0
    assert len(json.loads(out)["entries"]) == 21


def test_env_overrides_format(capsys, monkeypatch):
    monkeypatch.setenv("K10_FORMAT", "json")
    code, out, _ = run(capsys, "classify", "1/3", "1/3")
    assert code == 0
    assert json.loads(out)["entry"] == 4
    monkeypatch.setenv("K10_FORMAT", "yaml")
    assert run(capsys, "classify", "1/3", "1/3")[0] == 2


def test_argparse_errors_exit_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "everything")[0] == 2


def test_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "table", "--timing", "--format", "json")
    assert code == 0
    assert all("elapsed_ms" in r for r in json.loads(out))


def test_module_entry_point():
    env = dict(os.environ)
    env.pop("K10_FORMAT", None)
    proc = subprocess.run([sys.executable, "-m", "k10.cli", "verify", "table", "--fixture", "bad-sign"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 1
