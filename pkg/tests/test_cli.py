import json

import pytest

from qriccati.cli import main
from qriccati.report import SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json_round_trip(capsys):
    code, out, err = run(capsys, "verify", "--q", "0.5", "--tol", "1e-8", "--format", "json")
    assert code == 0 and err == ""
    d = json.loads(out)
    assert len(d["cases"]) == 42 and d["summary"]["failed"] == 0
    assert set(d) == {"config", "cases", "summary"}
    assert {"id", "params", "samples", "max_residual", "pass", "notes"} <= set(d["cases"][0])
    assert {"q", "x", "residual"} <= set(d["cases"][0]["samples"][0])
    assert out.endswith("\n")
    rep = SuiteReport.from_json(out)
    assert rep.to_json() == out
    assert SuiteReport.from_json(rep.to_json()) == rep


def test_case_filter(capsys):
    code, out, _ = run(capsys, "verify", "--case", "HERM1-*", "--format", "json", "--q", "0.3,0.9")
    assert code == 0
    assert len(json.loads(out)["cases"]) == 5


@pytest.mark.parametrize("q", ["1.5", "0", "-0.1"])
def test_bad_q_is_usage_error(capsys, q):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--q", q])
    assert exc.value.code == 2
    assert "q must lie in (0,1)" in capsys.readouterr().err


def test_bad_tolerance(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--tol", "0"])
    assert exc.value.code == 2


def test_failures_exit_nonzero(capsys):
    code, out, err = run(capsys, "verify", "--printed", "--case", "V-HND1-*", "--case", "HERM2-X", "--q", "0.5")
    assert code == 1
    assert "V-HND1-COS" in err and "V-HND1-SIN" in err and "HERM2-X" not in err
    assert "FAIL" in out and "PASS" in out


def test_csv_and_out_file(capsys, tmp_path):
    path = tmp_path / "r.csv"
    code, out, _ = run(capsys, "verify", "--case", "SW-TRIV", "--q", "0.5", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = path.read_text().splitlines()
    assert rows[0].startswith("id,mode,pass,q,x")
    assert len(rows) > 1 and all(r.startswith("SW-TRIV,") for r in rows[1:])


def test_max_terms_budget(capsys):
    code, _, err = run(capsys, "verify", "--case", "AIRY-TRIV", "--q", "0.9", "--max-terms", "20")
    assert code == 1 and "AIRY-TRIV" in err


@pytest.mark.parametrize("argv,first", [
    (["qairy", "--x", "0", "--q", "0.5"], "1.0"),
    (["hermite1", "--n", "1", "--x", "0.7", "--q", "0.5"], "0.7"),
    (["stieltjes", "--n", "0", "--x", "0.2", "--q", "0.5"], "1.0"),
    (["bigqlaguerre", "n=3", "a=0.5", "b=-0.7", "--x", "0.3", "--q", "0.5"], "0.01394144885354"),
])
def test_eval(capsys, argv, first):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0
    assert out.splitlines()[0].startswith(first)


def test_eval_prints_residual(capsys):
    _, out, _ = run(capsys, "eval", "hermite1", "--n", "3", "--x", "0.4", "--q", "0.5")
    line = out.splitlines()[1]
    assert line.startswith("ode_residual") and float(line.split()[1]) < 1e-10


@pytest.mark.parametrize("argv", [
    ["nosuch", "--x", "0.1", "--q", "0.5"],
    ["hermite1", "--x", "0.1", "--q", "0.5"],
    ["hermite1", "n=2", "bogus=1", "--x", "0.1", "--q", "0.5"],
    ["hermite1", "--n", "2", "--x", "0.1", "--q", "2"],
])
def test_eval_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(["eval", *argv])
    assert exc.value.code == 2
