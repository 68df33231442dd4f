import json
import subprocess
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from psl2ogs.cli import cli

DATA = Path(__file__).parent / "testdata"


def run(*args):
    return CliRunner().invoke(cli, [str(a) for a in args])


def run_json(*args):
    res = run(*args)
    assert res.exit_code == 0, res.output
    return json.loads(res.output)


def test_params():
    assert run_json("params", "--q", 29) == {"p": 29, "kappa": 1, "modulus": [0, 1], "q": 29, "t": 15, "a": 4, "b": 1}
    d = run_json("params", "--q", 4)
    assert d["t"] == 5 and d["a"] == 2 and "b" not in d


@pytest.mark.parametrize("args", [["--q", 6], ["--q", 29, "--a", 2], ["--q", 29, "--b", 11], ["--q", 8, "--b", 1],
                                  ["--q", 29, "--a", 29]])
def test_params_rejects(args):
    res = run("params", *args)
    assert res.exit_code == 2
    assert "error:" in res.output


def test_tables_golden_tsv():
    res = run("tables", "--q", 29)
    assert res.exit_code == 0
    assert res.output == (DATA / "q29_tables.tsv").read_text()


def test_tables_golden_json():
    res = run("tables", "--q", 29, "--format", "json")
    assert res.exit_code == 0
    assert res.output == (DATA / "q29_tables.json").read_text()


def test_tables_formats_agree():
    rows = run("tables", "--q", 29).output.splitlines()[1:]
    data = run_json("tables", "--q", 29, "--format", "json")
    for row in rows:
        idx, a, b, alpha, beta, gamma = row.split("\t")
        assert data["alpha"][idx] == int(alpha)
        assert data["beta"][idx] == int(beta)
        assert data["gamma"][idx] == int(gamma)
        if a:
            assert data["a_seq"][idx] == int(a)
        if b:
            assert data["b_seq"][idx] == int(b)


def test_tables_q2():
    data = run_json("tables", "--q", 2, "--format", "json")
    assert data["a_seq"] == {"1": 1, "2": 0}


def test_compose_golden():
    for case in json.loads((DATA / "q29_conversions.json").read_text()):
        o = case["ogs"]
        out = run_json("compose", "--q", 29, "--k", o["k"], "--ell", o["ell"], "--x", o["x"], "--y", o["y"])
        assert out["bn"] == case["bn"]
        back = run_json("decompose", "--q", 29, "--matrix", ",".join(map(str, out["matrix"])))
        assert back["ogs"] == o


def test_decompose_identity():
    out = run_json("decompose", "--q", 29, "--matrix", "1,0,0,1")
    assert out["ogs"] == {"k": 0, "ell": 0, "x": 0, "y": 1}
    assert out["bn"] == {"a": None, "x": 0, "y": 1}


def test_decompose_errors():
    assert run("decompose", "--q", 29, "--matrix", "1,2,3,4").exit_code == 2
    assert run("decompose", "--q", 29, "--matrix", "1,2,3").exit_code == 2
    assert run("decompose", "--q", 29, "--matrix", "a,b,c,d").exit_code == 2
    assert run("decompose", "--q", 29, "--matrix", "1,0,0,30").exit_code == 2
    assert run("compose", "--q", 29, "--k", 15, "--x", 0, "--y", 1).exit_code == 2


def test_order():
    assert run_json("order", "--q", 29, "--a", 4)["order"] == 15
    assert run_json("order", "--q", 29, "--matrix", "1,0,0,1")["order"] == 1
    assert run_json("order", "--q", 4, "--a", 2)["order"] == 5
    assert run("order", "--q", 29).exit_code == 2


def test_verify_exit_codes(monkeypatch):
    res = run("verify", "--q", 7, "--suite", "enumeration")
    assert res.exit_code == 0 and "elements=168" in res.output
    data = run_json("verify", "--q", 7, "--suite", "enumeration", "--json")
    assert data["checks"][0]["pass"] is True
    assert run("verify", "--q", 6).exit_code == 2
    assert run("verify", "--q", 7, "--suite", "bogus").exit_code == 2

    from psl2ogs import decomp

    # forget the coset index so every round trip lands in B
    monkeypatch.setattr(decomp, "bn_to_ogs", lambda t, f: decomp.OgsForm(0, 0, f.x, f.y))
    res = run("verify", "--q", 5, "--suite", "conversion")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_out_file(tmp_path):
    target = tmp_path / "t.tsv"
    res = run("tables", "--q", 29, "--out", target)
    assert res.exit_code == 0 and res.output == ""
    assert target.read_text() == (DATA / "q29_tables.tsv").read_text()


def test_identical_invocations_identical_bytes():
    for args in (["tables", "--q", 27, "--format", "json"], ["verify", "--q", 9, "--json"]):
        assert run(*args).output == run(*args).output


def shell(*args):
    return subprocess.run([sys.executable, "-m", "psl2ogs", *map(str, args)],
                          capture_output=True, text=True, check=False)


def test_subprocess_round_trip():
    for q, (k, ell, x, y) in [(29, (7, 1, 10, 3)), (27, (4, 1, 20, 5)), (32, (17, 0, 30, 9))]:
        out = shell("compose", "--q", q, "--k", k, "--ell", ell, "--x", x, "--y", y)
        assert out.returncode == 0, out.stderr
        m = json.loads(out.stdout)["matrix"]
        back = shell("decompose", "--q", q, "--matrix", ",".join(map(str, m)))
        assert back.returncode == 0, back.stderr
        assert json.loads(back.stdout)["ogs"]["k"] == k
        again = shell("compose", "--q", q, *sum((["--" + n, v] for n, v in json.loads(back.stdout)["ogs"].items()), []))
        assert json.loads(again.stdout)["matrix"] == m


def test_subprocess_usage_error():
    out = shell("params", "--q", 6)
    assert out.returncode == 2
    assert "NotPrimePower" in out.stderr
