import json
import subprocess
import sys
from pathlib import Path

from biserial_hh.cli import RunConfig, main, run
from biserial_hh.report import diff_tables, emit, parse

FIXTURES = Path(__file__).parent / "fixtures"


def test_table_1(capsys):
    assert main(["table", "1", "--m", "4", "--N", "2", "--n-max", "8"]) == 0
    out = capsys.readouterr().out
    assert "chi_{2,0}: phi=-2  psi=2" in out
    assert "PASS matches the closed-form formulas" in out


def test_char_gate(capsys):
    assert main(["algebra", "--m", "4", "--N", "2", "--char", "2"]) == 2
    assert "characteristic divides 2" in capsys.readouterr().err


def test_invalid_configs():
    assert run(RunConfig("table", 3, 2, table=1))[0] == 2
    assert run(RunConfig("algebra", 2, 2))[0] == 2
    assert run(RunConfig("cup", 4, 2, n_max=0))[0] == 2
    assert run(RunConfig("table", 4, 2))[0] == 2
    assert run(RunConfig("cup", 4, 2, expected="x.json"))[0] == 2


def test_verify_all():
    status, rep = run(RunConfig("verify-all", 3, 1, n_max=8))
    assert status == 0 and rep["ok"]


def test_verify_all_reports_first_failure(capsys):
    assert main(["verify-all", "--m", "4", "--N", "1", "--n-max", "8"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("first failure: cup: cup identities")


def test_table_3_fixture():
    status, rep = run(RunConfig("table", 4, 3, n_max=8, table=3,
                                expected=str(FIXTURES / "table3_m4_N3.json"), fmt="json"))
    assert status == 0
    assert rep["expected_mismatches"] == []


def test_table_1_fixture():
    with open(FIXTURES / "table1_m4_N2.json") as fh:
        exp = parse(fh.read())
    _, rep = run(RunConfig("table", 4, 2, n_max=8, table=1))
    assert diff_tables(rep, exp) == []


def test_diff_tables():
    _, rep = run(RunConfig("table", 4, 2, n_max=4, table=1))
    assert diff_tables(rep, rep) == []
    bad = json.loads(json.dumps(rep))
    bad["rows"][3]["cells"]["psi"] = "17"
    mism = diff_tables(rep, bad)
    assert len(mism) == 1
    assert mism[0]["row"] == rep["rows"][3]["row"] and mism[0]["column"] == "psi"
    bad["table"] = 2
    try:
        diff_tables(rep, bad)
    except ValueError as exc:
        assert "table" in str(exc)
    else:
        raise AssertionError("schema mismatch not detected")


def test_json_roundtrip_and_determinism():
    for cmd, extra in [("algebra", {}), ("cohomology", {}), ("cup", {}), ("brackets", {}),
                       ("lie", {}), ("table", {"table": 3})]:
        cfg = RunConfig(cmd, 4, 2, n_max=6, fmt="json", **extra)
        _, a = run(cfg)
        _, b = run(RunConfig(cmd, 4, 2, n_max=6, fmt="json", **extra))
        assert emit(a) == emit(b)
        assert parse(emit(a)) == a
        assert a["schema"] == 1


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "biserial_hh.cli", "algebra", "--m", "3", "--N", "1",
                          "--format", "json"], capture_output=True, text=True)
    assert out.returncode == 0
    rep = json.loads(out.stdout)
    assert rep["dimension"] == 12 and rep["kind"] == "algebra"


def test_text_outputs(capsys):
    for argv in (["lie", "--m", "3", "--N", "2", "--n-max", "4"],
                 ["cup", "--m", "4", "--N", "2", "--n-max", "6"],
                 ["brackets", "--m", "3", "--N", "2", "--n-max", "6"],
                 ["cohomology", "--m", "5", "--N", "1", "--n-max", "5"]):
        assert main(argv) == 0
    out = capsys.readouterr().out
    assert "HH^0 = <1>" in out and "FAIL" not in out
