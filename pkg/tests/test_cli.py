import subprocess
import sys

import pytest

from coxtwist import checks
from coxtwist.cli import main
from coxtwist.instances import parse_instance


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_header_echoes_parameters(capsys):
    code, out = run(capsys, "fc", "Q3", "--radius", "7")
    assert code == 0
    assert out.splitlines()[:3] == ["# coxtwist fc", "# radius=7 cutoff=100 depth=8 cap=100000 seed=0",
                                    "FC: true"]


def test_classify_and_fc(capsys):
    code, out = run(capsys, "classify", "E1")
    assert code == 0 and "{s,t,p}: Finite(A,3)" in out
    code, out = run(capsys, "fc", "TRI333")
    assert code == 0 and "FC: false" in out and "{a,b,c}" in out


def test_rigidity(capsys):
    assert "3-rigid: true" in run(capsys, "rigidity", "Q3")[1]
    assert "3-rigid: false; witness J={s,t,p}" in run(capsys, "rigidity", "E2", "--k", "3")[1]


def test_twists_and_class(capsys):
    code, out = run(capsys, "twists", "Q3")
    assert "twists: 3" in out and "J={s,t} B={b} A={a}" in out
    code, out = run(capsys, "twist-class", "Q3")
    assert "canonical graphs: 2" in out


def test_apply_writes_files(capsys, tmp_path):
    inst, words = tmp_path / "tw.cox", tmp_path / "tw.words"
    code, out = run(capsys, "apply", "Q3", "--J", "s,t", "--B", "b", "--out", str(inst),
                    "--words-out", str(words))
    assert code == 0
    G = parse_instance(inst.read_text())
    assert G.label("s", "b") == 4
    assert "b := s t s b s t s" in words.read_text()
    code, out = run(capsys, "complexity", "Q3", str(words))
    assert code == 0 and "complexity: (4, 6)" in out
    code, out = run(capsys, "minimize", "Q3", str(words))
    assert code == 0
    assert "step 1: J={s,t} B={b}" in out and "minimum: (0, 0)" in out and "conjugator: e" in out


def test_apply_inline_words(capsys):
    code, out = run(capsys, "apply", "Q3", "--J", "s,t", "--B", "b")
    assert code == 0 and "b := s t s b s t s" in out


def test_repeat_is_byte_identical(capsys):
    outs = [run(capsys, "twist-class", "Q5")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "find-instances", "--n", "3", "--labels", "3,4")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.cox"
    bad.write_text("cox v1\ngens a b\nedge a b x\n")
    code, out = run(capsys, "classify", str(bad))
    assert code == 2 and "line 3" in out
    assert run(capsys, "classify", "NOPE")[0] == 2
    assert run(capsys, "complexity", "Q3", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "apply", "Q3", "--J", "a,b", "--B", "s")[0] == 2
    # E2 is not 3-rigid, so its non-exposed E-sets are unsupported
    words = tmp_path / "e2.words"
    words.write_text("".join(f"{g} := {g}\n" for g in "stpqx"))
    code, out = run(capsys, "complexity", "E2", str(words))
    assert code == 2 and "3-rigid" in out


def test_exhausted(capsys):
    code, out = run(capsys, "find-instances", "--n", "4", "--cap", "3")
    assert code == 3 and "partial" in out


def test_verify(capsys, monkeypatch):
    code, out = run(capsys, "verify", "f4-roots")
    assert code == 0 and out.rstrip().endswith("f4-roots: PASS")
    code, out = run(capsys, "verify", "doubles", "--instance", "Q3")
    assert code == 0
    monkeypatch.setattr(checks, "run", lambda *a, **k: (False, ["forced"]))
    code, out = run(capsys, "verify", "doubles")
    assert code == 1 and "doubles: FAIL" in out


def test_argparse_rejects_unknown_check(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxtwist", "fc", "Q4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "FC: true" in proc.stdout
