import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from rigidtab import cli

GOLDEN = Path(__file__).parent / "golden"
ROWS = {"motzkin": 7, "riordan": 8, "catalan": 8, "pascal": 8}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("kind", sorted(ROWS))
def test_triangle_golden(kind):
    code, out, _ = call("triangle", "--kind", kind, "--rows", str(ROWS[kind]), "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / f"{kind}.csv").read_text()


def test_motzkin_bottom_row():
    _, out, _ = call("triangle", "--kind", "motzkin", "--rows", "7", "--format", "csv")
    assert out.splitlines()[-1] == "1,1,2,4,9,21,51"


def test_bessel_rows():
    _, out, _ = call("triangle", "--kind", "bessel", "--rows", "8", "--format", "json")
    rows = json.loads(out)["rows"]
    printed = [[1, 1, 3, 15, 105], [1, 3, 15, 105, 945], [1, 6, 45, 420], [1, 10, 105, 1260]]
    for s, want in enumerate(printed):
        assert rows[s][:len(want)] == want


def test_involution_json():
    code, out, _ = call("triangle", "--kind", "involution", "--rows", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"kind": "involution", "rows": [[1, 1, 2, 4], [1, 2, 6], [1, 3], [1]]}


def test_count():
    assert call("count", "--family", "sB", "--m", "5", "--s", "1", "--k", "2")[:2] == (0, "10\n")
    assert call("count", "--family", "sD", "--m", "4", "--s", "2", "--k", "3")[1] == "15\n"


def test_export_round_trip(tmp_path):
    path = tmp_path / "sB.json"
    doc = cli.export_tableaux("sB", (5, 3, 2), path)
    assert len(doc["tableaux"]) == 5
    jsonschema.validate(json.loads(path.read_text()), cli.schema())
    family, idx, tabs = cli.import_tableaux(path)
    assert (family, idx) == ("sB", (5, 3, 2))
    assert [t.rows for t in tabs] == [t.rows for t in cli.family_tableaux("sB", 5, 3, 2)]
    assert [t.outer for t in tabs] == [tuple(t["outer"]) for t in doc["tableaux"]]


def test_empty_family(tmp_path):
    doc = cli.export_tableaux("sD", (0, 0, 3), tmp_path / "e.json")
    assert doc["tableaux"] == []
    code, out, _ = call("enumerate", "--family", "sB", "--m", "2", "--s", "4", "--k", "2")
    assert code == 0 and json.loads(out)["tableaux"] == []


@pytest.mark.parametrize("family,s", [("sB", 1), ("sD", 2), ("parity", 1), ("ae", 0)])
def test_enumerate_validates(family, s, tmp_path):
    out_path = tmp_path / "x.json"
    code, _, _ = call("enumerate", "--family", family, "--m", "4", "--s", str(s), "--k", "3", "--out", str(out_path))
    assert code == 0
    jsonschema.validate(json.loads(out_path.read_text()), cli.schema())


def test_import_rejects_bad_documents(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"family": "sX", "m": 1, "s": 0, "k": 1, "tableaux": []}))
    with pytest.raises(jsonschema.ValidationError):
        cli.import_tableaux(bad)
    with pytest.raises(OSError, match="missing.json"):
        cli.import_tableaux(tmp_path / "missing.json")


def test_export_io_error_has_path(tmp_path):
    target = tmp_path / "no" / "such" / "dir" / "x.json"
    with pytest.raises(OSError, match="x.json"):
        cli.export_tableaux("sB", (2, 0, 2), target)
    code, _, err = call("enumerate", "--family", "sB", "--m", "2", "--k", "2", "--out", str(target))
    assert code == 2 and "x.json" in err


def test_byte_stable():
    argv = ("enumerate", "--family", "sD", "--m", "5", "--s", "1", "--k", "3")
    assert call(*argv)[1] == call(*argv)[1]
    argv = ("triangle", "--kind", "riordan", "--rows", "9", "--format", "json")
    assert call(*argv)[1] == call(*argv)[1]


def test_usage_errors():
    assert call("triangle", "--kind", "nope")[0] == 2
    assert call("count", "--family", "sB", "--m", "3")[0] == 2
    code, _, err = call("triangle", "--kind", "motzkin", "--rows", "0")
    assert code == 2 and "rows" in err
    assert call("verify")[0] == 2
    assert call("verify", "--suite", "level2", "--all")[0] == 2
    assert call("count", "--family", "parity", "--m", "3", "--s", "2", "--k", "2")[0] == 2
    assert call()[0] == 2


def test_bound_is_usage_error(monkeypatch):
    monkeypatch.setenv("MAXWEIGHT_BOUND", "4")
    code, _, err = call("enumerate", "--family", "sB", "--m", "6", "--k", "2")
    assert code == 2 and err


def test_verify_suite():
    code, out, _ = call("verify", "--suite", "level3", "--max-m", "9")
    assert code == 0 and out.strip().endswith("checks passed")


def test_verify_reports_failure(monkeypatch):
    monkeypatch.setattr(cli.cf, "sB2", lambda m, s: -1)
    code, out, _ = call("verify", "--suite", "level2", "--max-m", "3")
    assert code == 1 and "FAIL" in out


def test_verify_budget():
    code, out, _ = call("verify", "--all", "--budget-seconds", "0")
    assert code == 0 and "SKIP" in out


def test_oracles():
    assert call("oracle", "freudenthal", "--family", "B", "--rank", "3", "--highest", "0,1,0",
                "--weight", "0,0,0")[1] == "3\n"
    code, out, _ = call("oracle", "theorem", "--n", "3", "--k", "3", "--s", "1", "--m", "2")
    assert code == 0 and "2" in out
    code, out, _ = call("oracle", "affine", "--n", "3", "--labels", "1,1,0,0")
    assert code == 0 and len(out.strip().splitlines()) == 5
    code, out, _ = call("oracle", "conjecture", "--n", "3", "--level", "3")
    assert code == 0 and out


def test_biject():
    assert call("biject", "motzkin", "--rows", "12,10,8,7/11,9,1/6,5,4,3,2", "--s", "3")[1] == "UUUUUUDHHDHD\n"
    assert call("biject", "pascal", "--rows", "6,5,3,2/8,7,4,1", "--s", "2")[1] == "UDDDUUUU\n"
    code, out, _ = call("biject", "rs", "--perm", "2,1,4,3")
    assert code == 0 and json.loads(out) == {"P": [[1, 3], [2, 4]], "Q": [[1, 3], [2, 4]]}
    assert call("biject", "nr", "--perm", "1,3,2")[1] == "HUD\n"
    assert call("biject", "nr", "--perm", "4,3,2,1")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rigidtab", "count", "--family", "sB", "--m", "5",
                          "--s", "1", "--k", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "10\n"
