import io
import json

import pytest

from glweight.cli import main, verify_paper
from glweight.engine import MemoCache
from glweight.polyring import Polynomial


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv("GLWEIGHT_CACHE_DIR", raising=False)


def test_perm_text():
    code, out = run("perm", "(1 3 2)")
    assert code == 0
    assert Polynomial.parse(out) == Polynomial.parse("C3 + C1^2 - N*C2")
    assert out.strip() == "-N*C2 + C1^2 + C3"


def test_kn_and_chord_text():
    code, out = run("kn", "2")
    assert code == 0 and Polynomial.parse(out) == Polynomial.parse("C2^2 + C1^2 - N*C2")
    assert run("chord", "1-3,2-4") == (0, out)
    assert run("chord", "K2") == (0, out)


def test_sl_and_primitive():
    assert Polynomial.parse(run("kn", "2", "--sl")[1]) == Polynomial.parse("C2^2 - N*C2")
    assert Polynomial.parse(run("kn", "2", "--primitive")[1]) == Polynomial.parse("-N*C2 + C1^2")
    assert Polynomial.parse(run("kn", "3", "--primitive", "--sl")[1]) == Polynomial.parse("2 N^2 C2")


def test_p_basis():
    code, out = run("kn", "2", "--basis", "p")
    assert code == 0 and Polynomial.parse(out) == Polynomial.parse("-N p2 + p1^2 + p2^2")


def test_json_roundtrip():
    code, out = run("perm", "[3,1,2]", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["input"] == "[3,1,2]" and rec["basis"] == "c"
    assert Polynomial.from_json_obj(rec["value"]) == Polynomial.parse("C3 + C1^2 - N*C2")
    # global flag before the subcommand works too
    assert run("--format", "json", "perm", "[3,1,2]") == (code, out)


def test_latex():
    code, out = run("kn", "2", "--format", "latex")
    assert code == 0 and out.strip() == "-N C_{2} + C_{1}^{2} + C_{2}^{2}"


def test_series():
    code, out = run("series", "3")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[1].startswith("pi(K2) = ")
    code, out = run("series", "3", "--evaluate", "--format", "json")
    recs = json.loads(out)
    assert [r["n"] for r in recs] == [1, 2, 3]
    assert Polynomial.from_json_obj(recs[2]["value"]) == Polynomial.parse("2 N^2 C2 - 2 N C1^2")


def test_oracle_command():
    code, out = run("oracle", "(1 3 2)", "-N", "2", "--weight", "1,0", "--weight", "2,-1")
    assert code == 0
    assert "matches" in out and "central: True" in out and "MISMATCH" not in out
    code, out = run("oracle", "K2", "-N", "2", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_exit_codes(capsys):
    assert run("perm", "(1 1)")[0] == 2
    assert run("chord", "1-2,2-3")[0] == 2
    assert run("kn", "0")[0] == 2
    assert run("kn", "2", "--sl", "--basis", "p")[0] == 2
    assert run("oracle", "K2", "--weight", "1,0,0")[0] == 2
    assert run("oracle", "K2", "--weight", "x")[0] == 2
    assert run("bogus")[0] == 2
    assert run()[0] == 2
    assert run("verify-paper", "--max-n", "9")[0] == 2
    assert run("oracle", "K5", "-N", "3")[0] == 3
    assert run("oracle", "K2", "-N", "2", "--max-index-tuples", "4")[0] == 3
    err = capsys.readouterr().err
    assert "glweight: error:" in err and "resource limit" in err


def test_cache_flag(tmp_path):
    path = tmp_path / "sub" / "c.jsonl"
    code, out = run("kn", "3", "--cache", str(path))
    assert code == 0 and path.exists()
    cache = MemoCache.load(path)
    assert len(cache) > 0
    assert run("kn", "3", "--cache", str(path)) == (0, out)


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("GLWEIGHT_CACHE_DIR", str(tmp_path))
    assert run("kn", "2")[0] == 0
    assert (tmp_path / "wgl-cache.jsonl").exists()


def test_corrupt_cache_is_usage_error(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"format": "nope"}\n')
    assert run("kn", "2", "--cache", str(path))[0] == 2


def test_verify_paper_small(ws):
    results = verify_paper(4, ws)
    assert len(results) == 4 + 2 + 4 * 3
    assert all(ok for _, ok, _ in results)
    code, out = run("verify-paper", "--max-n", "3")
    assert code == 0 and out.splitlines()[-1].startswith("14/14 items agree")


def test_verify_paper_reports_k5_p_basis(ws):
    bad = [(item, detail) for item, ok, detail in verify_paper(5, ws) if not ok]
    assert [item for item, _ in bad] == ["w_GL(K5) p-basis", "wbar_GL(K5) p-basis"]
    assert all(detail.startswith("computed - table = ") for _, detail in bad)
