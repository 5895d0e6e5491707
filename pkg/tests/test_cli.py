from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qflag.cli import exact, main


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def all_strings(obj) -> bool:
    if isinstance(obj, dict):
        return all(all_strings(v) for v in obj.values())
    if isinstance(obj, list):
        return all(all_strings(v) for v in obj)
    return isinstance(obj, (str, bool)) or obj is None


def test_roots(capsys):
    code, out = run(capsys, "roots", "A3")
    assert code == 0 and "6 positive roots" in out and "minuscule indices: [1, 2, 3]" in out
    code, data = run_json(capsys, "roots", "E8")
    assert code == 0 and data["num_positive_roots"] == "120" and data["minuscule"] == []


def test_bad_type_is_usage_error(capsys):
    assert main(["roots", "Z9"]) == 2
    assert main(["roots", "A3", "--bogus"]) == 2
    assert main([]) == 2


def test_wonderful_minuscule(capsys):
    code, out = run(capsys, "wonderful", "A3", "--s", "2", "--intervals")
    assert code == 0 and out.rstrip().endswith("PASS")


def test_wonderful_symmetric_group(capsys):
    code, data = run_json(capsys, "wonderful", "--symmetric-group", "4")
    assert code == 1
    assert data["is_wonderful"] is False
    assert data["witness"][:3] == ["s1s3", "s1s2s3", "s3s2s1"]
    assert run(capsys, "wonderful", "--symmetric-group", "3")[0] == 0


def test_wonderful_non_minuscule_weight(capsys):
    assert main(["wonderful", "C3", "--s", "2"]) == 2
    assert main(["wonderful"]) == 2


def test_hilbert(capsys):
    code, out = run(capsys, "hilbert", "A3", "--s", "2")
    assert code == 0 and "(1+t)/(1-t)^5" in out
    code, data = run_json(capsys, "hilbert", "A3", "--s", "2")
    assert data["flag"]["gorenstein"] == {"holds": True, "m": "4", "sign": "-1"}
    assert all_strings(data)


def test_hilbert_compare_and_big_cell(capsys):
    code, out = run(capsys, "hilbert", "B3", "--s", "3", "--compare", "D4:4")
    assert code == 0 and "equal" in out
    assert main(["hilbert", "A3", "--s", "1", "--compare", "A3:2"]) == 1
    capsys.readouterr()
    code, out = run(capsys, "hilbert", "A3", "--s", "2", "--big-cell")
    assert code == 0 and "1/(1-t)^4" in out
    assert main(["hilbert", "A3", "--s", "2", "--compare", "D4"]) == 2


def test_asl(capsys):
    code, data = run_json(capsys, "asl", "--grassmann", "2", "4")
    assert code == 0 and data["passed"] is True
    assert [a["axiom"] for a in data["axioms"]] == ["1", "2", "3", "4", "5"]
    assert all_strings(data)


def test_asl_schubert_quotient(capsys):
    code, out = run(capsys, "asl", "--grassmann", "2", "4", "--w", "14", "--degree", "2")
    assert code == 0 and "PASS" in out
    code, data = run_json(capsys, "asl", "--grassmann", "2", "4", "--w", "2")
    assert data["w"] == "14"


def test_asl_budget_and_bad_subset(capsys):
    assert main(["asl", "--grassmann", "3", "9"]) == 2
    assert main(["asl", "--grassmann", "2", "4", "--w", "15"]) == 2


def test_verify_all_writes_json(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out = run(capsys, "verify-all", "--max-rank", "3", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["schema"] == "1" and all_strings(data)
    assert len([line for line in out.splitlines() if "PASS" in line]) == 10


def test_output_flag_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["hilbert", "E6", "--s", "1", "--format", "json", "--output", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_exact_helper():
    from fractions import Fraction
    assert exact({1: [Fraction(1, 2), True, None, 3]}) == {"1": ["1/2", True, None, "3"]}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qflag.cli", "roots", "G2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "6 positive roots" in proc.stdout
