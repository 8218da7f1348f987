import json
import subprocess
import sys

import pytest

from rsct.cli import main
from rsct.poly import Polynomial, determinant
from rsct.tableaux import Filling


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "rsct", "--shape", "2", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3 and data["fillings"] == [[[2, 1]], [[3, 1]], [[3, 2]]]
    code, out, _ = run(capsys, "enumerate", "ssyt", "--shape", "2", "--n", "2", "--format", "table")
    assert code == 0 and "count=3" in out
    code, out, _ = run(capsys, "enumerate", "ssyt", "--shape", "1,1", "--n", "2", "--format", "latex")
    assert "ytableau" in out


def test_fiber(capsys):
    code, out, _ = run(capsys, "fiber", "--lambda", "3,3,2,1", "--n", "8")
    assert code == 0
    comps = json.loads(out)["compositions"]
    assert len(comps) == 6 and [4, 2, 3] in comps


def test_expand_roundtrips_through_json(capsys):
    code, out, _ = run(capsys, "expand", "--factors", "1,5,7", "--n", "7")
    assert code == 0
    data = json.loads(out)
    assert Polynomial.from_json(7, data["terms"]) == determinant((1, 5, 7), 7)
    assert data["spec"] == {"factors": [[1, 5, 7]], "orientation": "row"}


def test_expand_zero_for_repeated_column(capsys):
    code, out, _ = run(capsys, "expand", "--cols", "--factors", "1,1", "--n", "2")
    assert code == 0 and json.loads(out)["terms"] == []


def test_leading_term(capsys):
    code, out, _ = run(capsys, "leading-term", "--factors", "1,5,7", "--n", "7")
    data = json.loads(out)
    assert code == 0 and data["monomial"] == [[1, 7, 1], [2, 5, 1], [3, 1, 1]] and data["coeff"] == "-1"
    code, _, err = run(capsys, "leading-term", "--cols", "--factors", "2,2", "--n", "2")
    assert code == 2 and "zero" in err


def test_phi_and_columns(capsys):
    code, out, _ = run(capsys, "phi", "--matrix", "0,2,4;1,3,0;2,0,0")
    assert code == 0
    y = Filling.from_json(json.loads(out))
    assert y.rows == ((2, 1), (2,), (3, 2, 1), (3, 2, 1), (3, 2), (3,))
    code, out, _ = run(capsys, "phi", "--matrix", "[[0,2,4],[1,3,0],[2,0,0]]", "--columns", "1")
    assert [r[0] for r in json.loads(out)["rows"]] == [2, 2, 3, 3, 3, 3]
    code, _, _ = run(capsys, "phi", "--matrix", "1,0;1,0")
    assert code == 2


def test_psi(capsys):
    code, out, _ = run(capsys, "psi", "--monomial", "1,7;2,5;3,1", "--n", "7")
    data = json.loads(out)
    assert code == 0 and data["valid"]
    assert data["matrix"][0][6] == data["matrix"][1][4] == data["matrix"][2][0] == 1
    code, out, _ = run(capsys, "psi", "--monomial", "1,1;2,1", "--n", "2")
    assert code == 1 and not json.loads(out)["valid"]


def test_gt(capsys):
    code, out, _ = run(capsys, "gt", "--to", "--matrix", "[[5,9,18,7],[0,13,6,0],[2,4,0,0],[1,0,0,0]]")
    gt = json.loads(out)["matrix"]
    assert gt == [[39, 34, 25, 7], [19, 19, 6, 0], [6, 4, 0, 0], [1, 0, 0, 0]]
    code, out, _ = run(capsys, "gt", "--from", "--matrix", json.dumps(gt))
    assert json.loads(out)["matrix"] == [[5, 9, 18, 7], [0, 13, 6, 0], [2, 4, 0, 0], [1, 0, 0, 0]]


def test_validate_ad_readings(capsys):
    m = "0,0,1;1,0,0;0,0,0"
    assert run(capsys, "validate-ad", "--matrix", m)[0] == 0
    assert run(capsys, "validate-ad", "--matrix", m, "--literal")[0] == 1
    assert run(capsys, "validate-ad", "--matrix", m, "--reading", "literal")[0] == 1


def test_experiment(capsys):
    code, out, _ = run(capsys, "experiment", "phi-injectivity", "--n", "2", "--max-total", "3")
    data = json.loads(out)
    assert code == 0 and data["injective"] and data["collisions"] == []


def test_verify_outputs(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "basis", "--lambda", "2,1", "--n", "3", "--jobs", "1")
    assert code == 0
    row = json.loads(out)
    assert row["outcome"] == "pass" and "wall_time" not in row
    assert "1/1 passed" in err
    code, out, _ = run(capsys, "verify", "identity", "--max-m", "3", "--n", "2", "--jobs", "1", "--timing")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 5 and all("wall_time" in r for r in rows)
    target = tmp_path / "out.jsonl"
    target.write_text("stale\n")
    code, out, _ = run(capsys, "verify", "roundtrip", "--n", "2", "--max-cells", "3", "-o", str(target), "--jobs", "1")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["check"] == "roundtrip"


def test_verify_guard_and_usage(capsys):
    code, out, _ = run(capsys, "verify", "basis", "--lambda", "2,1", "--n", "3", "--max-rows", "2", "--jobs", "1")
    assert code == 2 and json.loads(out)["outcome"] == "guard"
    with pytest.raises(SystemExit) as exc:
        main(["verify", "basis", "--n", "3"])
    assert exc.value.code == 2
    assert run(capsys, "enumerate", "ssyt", "--shape", "1,2", "--n", "3")[0] == 2
    assert run(capsys, "enumerate", "ssyt", "--shape", "x", "--n", "3")[0] == 2


def test_verify_parallel_matches_serial(capsys):
    args = ["verify", "suite", "--n", "2", "--max-cells", "3"]
    serial = run(capsys, *args, "--jobs", "1")
    parallel = run(capsys, *args, "--jobs", "2")
    assert serial[0] == parallel[0] == 0
    assert serial[1] == parallel[1]


def test_argument_from_file(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text('{"matrix": [[0, 1], [1, 0]]}')
    assert run(capsys, "validate-ad", "--matrix", str(f))[0] == 0


def test_module_entry_point_is_byte_deterministic():
    cmd = [sys.executable, "-m", "rsct", "verify", "suite", "--n", "2", "--max-cells", "4", "--jobs", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout
