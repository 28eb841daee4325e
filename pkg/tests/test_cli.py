import json
import os
from pathlib import Path

import pytest

from heckeo.cli import load_config, run
from heckeo.report import CheckResult, VerificationReport, emit

GOLDEN = Path(__file__).parent / "golden" / "v1"


def test_weyl_info():
    code, text = run(["weyl", "--type", "G2", "--info"])
    assert code == 0
    assert "order 12" in text and "longest_length 6" in text


def test_weyl_json_schema():
    code, text = run(["weyl", "--type", "A2", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert data["schema"] == 1
    assert data["order"] == 6
    assert data["lengths"]["1.2.1"] == 3
    assert ["e", "1"] in data["covers"]


def test_klpoly_examples():
    code, text = run(["klpoly", "--type", "A1", "--x", "s", "--y", "e", "--format", "json"])
    assert code == 0
    assert json.loads(text) == {"schema": 1, "x": "1", "y": "e", "coeff": {"1": 1}}
    code, text = run(["klpoly", "--type", "A1", "--x", "s", "--y", "e",
                      "--variant", "Cprime", "--format", "json"])
    assert json.loads(text)["coeff"] == {"-1": -1}


def test_basis_change_roundtrip():
    code, text = run(["basis-change", "--type", "A2", "--from", "Simple",
                      "--to", "Simple", "--x", "1.2", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert data["coords"] == {"1.2": {"0": 1}}


def test_basis_change_rejects_unknown_basis():
    code, text = run(["basis-change", "--type", "A2", "--from", "Nope",
                      "--to", "Verma", "--x", "e"])
    assert code == 2
    assert "basis" in text


def test_verify_exit_codes_and_schema():
    code, text = run(["verify", "--type", "A1", "--suite", "k0", "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert data["schema"] == 1 and data["pass"] is True
    assert all(set(c) == {"name", "pass", "detail"} for c in data["checks"])
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)


def test_usage_errors_are_distinct():
    code, text = run(["weyl", "--type", "E8"])
    assert code == 2 and "inadmissible Cartan datum" in text
    code, text = run(["weyl", "--type", "A8"])
    assert code == 2 and "enumeration cap exceeded" in text
    code, text = run(["klpoly", "--type", "A2", "--x", "oops", "--y", "e"])
    assert code == 2 and "malformed word string" in text
    code, text = run(["nonsense"])
    assert code == 2


def test_cap_flag_overrides():
    # the default cap admits A5; an explicit smaller cap must win
    code, text = run(["weyl", "--type", "A5", "--cap", "100"])
    assert code == 2 and "cap exceeded" in text
    code, _ = run(["weyl", "--type", "A5", "--cap", "1000"])
    assert code == 0


def test_block_check_csv_table():
    code, text = run(["block-check", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "module,degree,dimension"
    assert "Theta!(L_s),-1,1" in lines
    assert "Theta*(Delta_e),0,2" in lines


def test_determinism_byte_identical():
    a = run(["verify", "--type", "A2", "--suite", "all", "--format", "json"])
    b = run(["verify", "--type", "A2", "--suite", "all", "--format", "json"])
    assert a == b
    assert a[0] == 0


def test_config_file(tmp_path, monkeypatch):
    cfg = tmp_path / "my.cfg"
    cfg.write_text("cap = 10\nformat = json\n# comment\n", encoding="utf-8")
    monkeypatch.setenv("HECKEO_CONFIG", str(cfg))
    assert load_config() == {"cap": 10, "format": "json"}
    # cap from the config now rejects A3 (order 24 > 10)
    code, text = run(["weyl", "--type", "A3"])
    assert code == 2 and "cap exceeded" in text
    # flags override the file
    code, _ = run(["weyl", "--type", "A3", "--cap", "100"])
    assert code == 0
    cfg.write_text("cap = banana\n", encoding="utf-8")
    code, text = run(["weyl", "--type", "A2"])
    assert code == 2 and "config error" in text


def test_missing_config_is_fine(monkeypatch, tmp_path):
    monkeypatch.setenv("HECKEO_CONFIG", str(tmp_path / "nope.cfg"))
    assert load_config() == {}


@pytest.mark.parametrize("fname,argv", [
    ("weyl_A2_info.txt", ["weyl", "--type", "A2", "--info"]),
    ("weyl_A2.json", ["weyl", "--type", "A2", "--format", "json"]),
    ("weyl_G2_info.txt", ["weyl", "--type", "G2", "--info"]),
    ("klpoly_A1_s_e.json", ["klpoly", "--type", "A1", "--x", "s", "--y", "e", "--format", "json"]),
    ("klpoly_A3_nontrivial.txt", ["klpoly", "--type", "A3", "--x", "2.1.3.2", "--y", "2", "--format", "table"]),
    ("basis_change_B2.json", ["basis-change", "--type", "B2", "--from", "Tilting", "--to", "Verma", "--x", "1.2", "--format", "json"]),
    ("verify_A1_all.json", ["verify", "--type", "A1", "--suite", "all", "--format", "json"]),
    ("verify_A2_k0.csv", ["verify", "--type", "A2", "--suite", "k0", "--format", "csv"]),
    ("block_check_tilting.json", ["block-check", "--suite", "tilting", "--format", "json"]),
    ("block_check_homology.csv", ["block-check", "--format", "csv"]),
])
def test_golden_outputs(fname, argv, monkeypatch, tmp_path):
    monkeypatch.setenv("HECKEO_CONFIG", str(tmp_path / "absent.cfg"))
    code, text = run(argv)
    assert code == 0
    expected = (GOLDEN / fname).read_text(encoding="utf-8")
    assert text == expected, f"golden mismatch for {fname}"


# -- report emission -----------------------------------------------------------

def _sample_report():
    rep = VerificationReport("demo")
    rep.add("b_check", True, "fine", 1.25)
    rep.add("a_check", False, "broke", 0.5)
    return rep


def test_emit_json_sorted_and_versioned():
    data = json.loads(emit(_sample_report(), "json"))
    assert data["schema"] == 1
    assert [c["name"] for c in data["checks"]] == ["a_check", "b_check"]
    assert data["pass"] is False


def test_emit_empty_report():
    assert (
        emit(VerificationReport("empty"), "json")
        == '{"schema":1,"suite":"empty","checks":[],"pass":true}\n'
    )


def test_emit_csv_and_table():
    text = emit(_sample_report(), "csv")
    assert text.splitlines()[0] == "name,pass,detail"
    assert "a_check,false,broke" in text
    table = emit(_sample_report(), "table", width=20)
    assert "FAIL" in table and "PASS" in table and "overall: FAIL" in table
    assert "ms" not in table  # timings are opt-in
    assert "ms" in emit(_sample_report(), "table", timings=True)
    long_detail = VerificationReport("w")
    long_detail.add("x", True, "word " * 30)
    wrapped = emit(long_detail, "table", width=25)
    assert max(len(line) for line in wrapped.splitlines()) < 40


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit(_sample_report(), "xml")


def test_run_exception_becomes_failed_check():
    rep = VerificationReport("x")
    rep.run("boom", lambda: 1 / 0)
    assert not rep.passed
    assert "exception" in rep.checks[0].detail
