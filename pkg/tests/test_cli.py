import json
import shutil
import subprocess
import sys
from importlib import resources

import pytest

from prodquot.cli import main

from helpers import fixture_entries

FIXTURES = str(resources.files("prodquot").joinpath("data/fixtures.json"))


def test_missing_k2(capsys):
    assert main([]) == 1
    assert "--k2" in capsys.readouterr().err


def test_k2_out_of_range():
    with pytest.raises(SystemExit) as exc:
        main(["--k2", "9"])
    assert exc.value.code == 2


def test_groups_csv_to_file(tmp_path):
    out = tmp_path / "k6.csv"
    assert main(["--k2", "6", "--groups", "A5", "--no-h1", "--emit", "csv", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "K2, Sing X, t1, t2, G, N, H1"
    assert len(lines) > 1
    assert all(line.startswith("6, ") and ", A5, " in line and line.endswith(", ") for line in lines[1:])


def test_json_without_timings(capsysbinary):
    assert main(["--k2", "7", "--no-timings"]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert doc == {"accepted": [], "skipped": []}


def test_fixtures_csv(capsysbinary):
    assert main(["--fixtures", FIXTURES, "--k2", "1", "--emit", "csv"]) == 0
    lines = capsysbinary.readouterr().out.decode().splitlines()
    assert "1, 1/7 2/7^2, 3^2 7, 2 4 7, PSL(2,7), 1, Z6" in lines
    assert len(lines) == 1 + sum(1 for e in fixture_entries() if e["k2"] == 1)


def test_fixture_refusal_exit_code(tmp_path, capsys):
    bad = dict(fixture_entries()[-1], basket="1/7^3")
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([bad]))
    assert main(["--fixtures", str(path), "--no-h1"]) == 2
    assert "refused" in capsys.readouterr().err


def test_bad_catalogue(tmp_path, capsys):
    assert main(["--k2", "6", "--catalogue", str(tmp_path / "missing.txt")]) == 1
    assert "error" in capsys.readouterr().err


def test_skip_orders_parsing(capsysbinary):
    assert main(["--k2", "6", "--groups", "A5", "--no-h1", "--skip-orders", "60"]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert doc["accepted"] == []
    assert any(s["order"] == 60 and s["reason"] == "order in the skip list" for s in doc["skipped"])


@pytest.mark.skipif(shutil.which("pqclassify") is None, reason="package not installed")
def test_console_script():
    res = subprocess.run(["pqclassify", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "--k2" in res.stdout


def test_module_entry():
    res = subprocess.run([sys.executable, "-m", "prodquot.cli", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "pqclassify" in res.stdout
