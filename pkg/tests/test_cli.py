import csv
import io
import json

import pytest

from kimcs.cli import CSV_COLUMNS, main
from kimcs.kim import certificate_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_human(capsys):
    code, out, _ = run(capsys, "compute", "--p", "5", "--t", "2")
    assert code == 0
    assert "S = 1 (nontrivial), oracle agrees" in out
    assert "1/2 + 1/2*sqrt(5)" in out
    code, out, _ = run(capsys, "compute", "--p", "5", "--t", "1")
    assert code == 0 and "S = 0 (trivial), oracle agrees" in out


def test_compute_invalid(capsys):
    code, _, err = run(capsys, "compute", "--p", "6", "--t", "1")
    assert code == 2 and "p must be prime" in err
    code, _, err = run(capsys, "compute", "--p", "5", "--t", "4")
    assert code == 2 and "squarefree" in err


def test_compute_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "--p", "13", "--t", "7", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    for key in ("schema", "datum", "epsilon", "y", "w", "wFactored", "I", "characterTrace", "S", "oracle", "agree"):
        assert key in obj
    cert = certificate_from_dict(obj)
    cert.check()
    assert obj["agree"] is True


def test_parity_violation_exit_code(capsys, monkeypatch):
    import kimcs.cli as cli
    from kimcs.idealcls import ParityViolation

    def boom(d):
        raise ParityViolation("odd valuation")

    monkeypatch.setattr(cli, "compute_invariant", boom)
    code, _, err = run(capsys, "compute", "--p", "5", "--t", "2")
    assert code == 3 and "parity" in err


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "--p-max", "5", "--t-max", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert [r[:2] for r in rows[1:]] == [["5", "1"], ["5", "2"], ["5", "3"]]
    assert [r[4] for r in rows[1:]] == ["0", "1", "1"]
    code, out, _ = run(capsys, "scan", "--p-max", "3", "--t-max", "3", "--format", "csv")
    assert out.strip() == ",".join(CSV_COLUMNS)


def test_scan_summary_and_json(capsys):
    code, out, _ = run(capsys, "scan", "--p-max", "100", "--t-max", "50")
    assert code == 0
    summary = out.strip().splitlines()[-1]
    counts = dict(kv.split("=") for kv in summary.split())
    assert int(counts["trivial"]) >= 10 and int(counts["nontrivial"]) >= 10
    assert counts["all_agree"] == "True"
    code, out, _ = run(capsys, "scan", "--p-max", "13", "--t-max", "2", "--format", "json")
    obj = json.loads(out)
    assert [(r["p"], r["t"]) for r in obj["rows"]] == [(5, 1), (5, 2), (13, 1), (13, 2)]


def test_scan_out_file(capsys, tmp_path):
    target = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--p-max", "5", "--t-max", "3", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "p,t,D,h,S,oracle,agree"


def test_scan_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--p-max", "5", "--t-max", "3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 4 and "I/O" in err


def test_scan_bounds_validated(capsys):
    code, _, err = run(capsys, "scan", "--p-max", "0", "--t-max", "3")
    assert code == 2 and "positive" in err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--p", "5", "--t", "7")
    assert code == 0 and "FAIL" not in out and "all conditions hold" in out
    code, out, _ = run(capsys, "witness", "--p", "5", "--t", "2")
    assert "[FAIL] -pt = 5 mod 8" in out
    code, out, _ = run(capsys, "witness", "--p", "5", "--t", "1", "--format", "json")
    obj = json.loads(out)
    assert {c["name"]: c["passed"] for c in obj["checks"]}["(t/p) = -1"] is False


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--n", "2,3")
    assert code == 0 and "FAIL" not in out
    assert "conventions:" in out and "analogue" in out
    code, out, _ = run(capsys, "cohomology", "--n", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["passed"] is True
    assert all(isinstance(it["passed"], bool) for it in obj["items"])


def test_cohomology_guard(capsys):
    code, _, err = run(capsys, "cohomology", "--n", "12")
    assert code == 2 and "guard" in err


def test_cohomology_failure_exit_code(capsys, monkeypatch):
    import kimcs.cli as cli
    from kimcs.cyccoh.checks import CheckItem, SuiteReport

    def failing(n_list, seed=0):
        return SuiteReport("test", [CheckItem("forced", 2, False, witness="w")])

    monkeypatch.setattr(cli, "suite", failing)
    code, out, _ = run(capsys, "cohomology", "--n", "2")
    assert code == 5 and "witness: w" in out


def test_bad_format_rejected():
    with pytest.raises(SystemExit):
        main(["compute", "--p", "5", "--t", "2", "--format", "csv"])
