import csv
import io
import json

import pytest

from slopecount.cli import EXIT_BUDGET, EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from slopecount.graphs import enumerate_wheels
from slopecount.treepoly import tau_eval
from slopecount.verify import CheckResult
from slopecount.weights import parse_point


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


@pytest.mark.parametrize("args, zeros", [
    (("--n", "5", "--q", "2", "--ideal", "J"), 472),
    (("--n", "3", "--q", "2", "--ideal", "I"), 8),
    (("--n", "4", "--q", "3", "--ideal", "I"), 423),
])
def test_count_zeros(args, zeros):
    code, data = run_json("count-zeros", *args)
    assert code == EXIT_OK
    assert data["zeros"] == zeros
    assert set(data) == {"n", "q", "ideal", "zeros", "total", "elapsed_ms"}


def test_count_zeros_csv_and_text():
    code, text = run("count-zeros", "--n", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and rows[0]["zeros"] == "52"
    code, text = run("count-zeros", "--n", "4", "--format", "text")
    assert "52 zeros" in text


def test_budget_exit():
    code, _ = run("count-zeros", "--n", "6", "--q", "5")
    assert code == EXIT_BUDGET


@pytest.mark.parametrize("argv", [
    ("count-zeros",),
    ("count-zeros", "--n", "0"),
    ("count-zeros", "--n", "4", "--q", "4"),
    ("count-zeros", "--n", "4", "--ideal", "K"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == EXIT_USAGE


def test_cache(tmp_path):
    cache = tmp_path / "cache.jsonl"
    code, first = run_json("count-zeros", "--n", "5", "--q", "3", "--cache", str(cache))
    assert code == 0 and first["zeros"] == 9243
    lines = cache.read_text().splitlines()
    assert len(lines) == 1
    code, second = run_json("count-zeros", "--n", "5", "--q", "3", "--cache", str(cache))
    assert second == first
    assert len(cache.read_text().splitlines()) == 1
    # entries from another version are ignored
    entry = json.loads(lines[0])
    entry["key"]["version"] = "0.0.0"
    entry["result"]["zeros"] = -1
    cache.write_text(json.dumps(entry) + "\n")
    code, third = run_json("count-zeros", "--n", "5", "--q", "3", "--cache", str(cache))
    assert third["zeros"] == 9243


def test_classify():
    code, rec = run_json("classify", "2:4:100101")
    assert code == 0 and rec["zero_I"] is False and rec["is_cograph"] is False
    assert rec["class_has_induced_c5"] is True
    code, rec = run_json("classify", "2:4:000000")
    assert rec["zero_I"] is True and rec["is_cograph"] is True
    code, rec = run_json("classify", "3:4:001120", "--paranoid")
    a = parse_point("3:4:001120")
    direct = all(tau_eval(w, a) == 0 for w in enumerate_wheels(4))
    assert rec["zero_I"] == rec["zero_J"] == direct


def test_classify_bad_point(capsys):
    code, _ = run("classify", "3:4:000130")
    assert code == EXIT_DATA
    assert "position 4" in capsys.readouterr().err


def test_verify():
    code, data = run_json("verify", "--theorem", "1", "--n", "4")
    assert code == 0 and data["passed"]
    counts = data["checks"][0]
    assert counts["zeros_I"] == counts["zeros_J"] == counts["cographs"] == counts["c5free_classes"] == 52
    code, data = run_json("verify", "--theorem", "1", "--n", "1")
    assert data["checks"][0]["cographs"] == 1
    code, data = run_json("verify", "--theorem", "cog5cyc", "--n", "4")
    assert code == 0 and all(c["passed"] for c in data["checks"])
    code, text = run("verify", "--theorem", "generalize", "--q", "3", "--format", "text")
    assert code == 0 and text.strip().endswith("PASS")


def test_verify_out_of_budget():
    code, _ = run("verify", "--theorem", "1", "--n", "9")
    assert code == EXIT_BUDGET


def test_verify_failure_exit(monkeypatch):
    bad = CheckResult("forced", checked=1)
    bad.fail("some point")
    monkeypatch.setattr("slopecount.cli.run_theorem", lambda *a, **k: [bad])
    code, data = run_json("verify", "--theorem", "1")
    assert code == EXIT_VERIFY and data["checks"][0]["counterexample"] == "some point"


def test_table():
    code, data = run_json("table")
    assert code == 0
    rows = {r["type"]: (r["zeros"], r["nonzeros"]) for r in data["per_type"]}
    assert rows["(5,1)"] == (36, 0) and rows["(3,2,1)"] == (144, 216)
    assert data["totals"] == {"zeros": 423, "nonzeros": 306}
    code, text = run("table", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["type", "zeros", "nonzeros"] and rows[-1] == ["total", "423", "306"]
    assert len(rows) == 9


def test_export_poly():
    code, text = run("export-poly", "--n", "4", "--ideal", "J", "--format", "text")
    assert code == 0 and len(text.splitlines()) == 4
    assert text.splitlines()[0].startswith("(m_1_2-m_2_3)")
    code, text = run("export-poly", "--n", "3", "--format", "text")
    assert code == 0 and text == ""
    code, text = run("export-poly", "--n", "5", "--ideal", "I", "--format", "text")
    assert len(text.splitlines()) == 35
    assert run("export-poly", "--n", "5", "--format", "text") == (code, text)


@pytest.mark.parametrize("argv", [
    ("count-zeros", "--n", "4", "--q", "3"),
    ("classify", "2:4:100101"),
    ("table",),
    ("export-poly", "--n", "4"),
    ("verify", "--theorem", "cog5cyc", "--n", "3"),
])
def test_json_roundtrip(argv):
    _, text = run(*argv)
    data = json.loads(text)
    assert json.loads(json.dumps(data)) == data
