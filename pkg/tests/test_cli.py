import io
import json

from spin9forms.cli import run


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_main():
    code, out, _ = _run("verify", "--suite", "main")
    assert code == 0
    assert "360·Φ = τ₄(ψ): PASS (12870 blades)" in out


def test_emit_json():
    code, out, _ = _run("emit-table", "--dim", "8", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 702


def test_families():
    code, out, _ = _run("families")
    assert code == 0 and out.splitlines()[0] == "2/70/70/336/28/28/84/84"


def test_usage_errors():
    assert _run("verify", "--suite", "nope")[0] == 2
    assert _run()[0] == 2
    assert _run("emit-table", "--dim", "3")[0] == 2
    assert _run("eval", "--form", "phi7", "--vectors", "/nonexistent")[0] == 2


def test_charpoly_json():
    code, out, _ = _run("charpoly", "--coeff", "8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["tau8"] == [{"blade": list(range(1, 17)), "coeff": -19958400}]


def test_eval(tmp_path):
    p = tmp_path / "v.txt"
    p.write_text("1 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 1/2 0 0 0 0\n")
    code, out, _ = _run("eval", "--form", "phi7", "--vectors", str(p))
    assert code == 0 and out.strip() == "1/2"
    assert _run("eval", "--form", "spin9", "--vectors", str(p))[0] == 2


def test_verify_deterministic():
    a = _run("verify", "--suite", "invariance", "--trials", "3", "--seed", "4")
    b = _run("verify", "--suite", "invariance", "--trials", "3", "--seed", "4")
    assert a == b and a[0] == 0


def test_info():
    code, out, _ = _run("info")
    assert code == 0 and "d12345678 = -14" in out


def test_verify_failure_exit_code(monkeypatch):
    from spin9forms import cli
    from spin9forms.verify import Report

    def failing(name, trials, seed):
        Report(name).check("forced", False, diff=["d12: computed 1, expected 0"])

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = _run("verify", "--suite", "algebra")
    assert code == 1
    assert "forced: FAIL" in out and "diff: d12" in out
