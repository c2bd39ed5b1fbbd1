import json

import pytest

from d5roof.cli import main, resolve_script_path


@pytest.fixture(scope="module")
def corrupted(tmp_path_factory):
    text = resolve_script_path("d5_flop.script").read_text(encoding="utf-8")
    lines = text.splitlines(keepends=True)
    k = next(i for i, ln in enumerate(lines) if ln.startswith("mutate_right"))
    assert " F @ " in lines[k]
    lines[k] = lines[k].replace(" F @ ", " Ttilde @ ")
    path = tmp_path_factory.mktemp("scripts") / "bad.script"
    path.write_text("".join(lines), encoding="utf-8")
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bott(capsys):
    code, out, _ = run(capsys, "bott", "0", "0", "0", "1", "1")
    assert code == 0 and "dim 210" in out
    code, out, _ = run(capsys, "--format", "structured", "bott", "1,0,0,-1,1")
    assert json.loads(out)["zero"] is True


def test_decompose_and_cohomology(capsys):
    assert run(capsys, "decompose", "wedge2(dual(V))(0,0)")[1].strip() == "E[0, 1, 0, 0, 0]"
    assert run(capsys, "cohomology", "O(-2,0)")[1].strip() == "0"
    code, out, _ = run(capsys, "--format", "structured", "cohomology", "dual(U+)(-1,1)")
    assert json.loads(out)["degrees"] == {"0": 1}


def test_ext(capsys):
    code, out, _ = run(capsys, "--format", "structured", "ext", "O(2,-2)", "V(1,-1)", "--mode", "cayley")
    d = json.loads(out)
    assert code == 0 and d["degrees"] == {"1": 1} and d["euler_pairing"] == -1


def test_lemma(capsys):
    code, out, _ = run(capsys, "lemma", "all")
    assert code == 0
    assert "FLAG" in out
    assert run(capsys, "lemma", "nope")[0] == 2


def test_kleiman(capsys):
    code, out, _ = run(capsys, "--format", "structured", "kleiman", "--samples", "2", "--seed", "5")
    d = json.loads(out)
    assert code == 0 and d["ok"] and [s["dimension"] for s in d["samples"]] == [16, 16]


def test_cy_checks_reports_literal_hoppe_failure(capsys):
    code, out, _ = run(capsys, "--format", "structured", "cy-checks")
    d = json.loads(out)
    assert code == 1
    assert d["unique_section"]["ok"] and d["hoppe-normalized"]["ok"] and not d["hoppe"]["ok"]
    assert d["dimension_count"]["bound"] == 74


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "cohomology", "dual(Q)")[0] == 2
    assert run(capsys, "bott", "1", "2")[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.script"))[0] == 2
    bad = tmp_path / "syntax.script"
    bad.write_text("mode blowup\nobject a dual( @ 0 0\n", encoding="utf-8")
    code, out, err = run(capsys, "verify", str(bad))
    assert code == 2 and "line 2" in err and out == ""
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_corrupted_claim_fails(capsys, corrupted):
    code, out, _ = run(capsys, "verify", str(corrupted))
    assert code == 1
    assert "[fail]" in out and "mutate_right" in out and "expected" in out
    code, out, _ = run(capsys, "--format", "structured", "verify", str(corrupted))
    d = json.loads(out)
    assert code == 1
    bad = [r for r in d["records"] if r["status"] == "fail"]
    assert len(bad) == 1 and bad[-1] == d["records"][-1]
    assert set(bad[0]) == {"step", "kind", "pairs", "verdicts", "kclass_delta", "status"}
    assert bad[0]["kind"] == "mutate_right" and "E[" in bad[0]["kclass_delta"]
    assert d["summary"]["fail"] == 1 and d["summary"]["ok"] is False


def test_reports_are_byte_stable(capsys, corrupted):
    a = run(capsys, "--format", "structured", "verify", str(corrupted))[1]
    b = run(capsys, "--format", "structured", "verify", str(corrupted))[1]
    assert a == b
