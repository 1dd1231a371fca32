import io
import subprocess
import sys

import pytest

from ndpost.cli import main
from ndpost.kernel import NM, check, in_system, same_up_to_labels
from ndpost.syntax import parse_derivation
from support import CORPUS, load

EX2 = str(CORPUS / "paper" / "example2.nd")
CE = str(CORPUS / "paper" / "counterexample.nd")
FORM = CORPUS / "formulas"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    code, out, _ = run(capsys, "check", EX2)
    assert code == 0 and out.strip() == "P ⊢ P ∨ Q"


def test_size(capsys):
    code, out, _ = run(capsys, "size", EX2)
    assert code == 0 and "size_raa = 5" in out and "size_raa+ = 1" in out


def test_postpone_m(capsys, tmp_path):
    out_file = tmp_path / "ex2.out.nd"
    log = tmp_path / "trace.log"
    code, _, _ = run(capsys, "postpone", "--mode", "m", "--trace", str(log), EX2, "-o", str(out_file))
    assert code == 0
    assert len(log.read_text().splitlines()) == 3
    d = parse_derivation(out_file.read_text())
    assert check(d).conclusion == load("paper/example2.nd").conclusion
    assert d.rule.value == "raa"


def test_postpone_trace_to_stderr(capsys):
    code, out, err = run(capsys, "postpone", "--mode", "j", str(CORPUS / "paper" / "example1.nd"))
    assert code == 0 and len(err.splitlines()) == 3
    assert same_up_to_labels(parse_derivation(out), load("paper/example1_final.nd"))


def test_postpone_precondition(capsys):
    code, _, err = run(capsys, "postpone", "--mode", "m", CE)
    assert code == 1 and "precondition: imp_i present" in err


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "--mode", "m", str(FORM / "peirce.ndf"))
    assert code == 0 and out.startswith("(or (not (or (not (or (not (pred P)) (pred Q)))")
    code, _, err = run(capsys, "translate", "--mode", "mstar", str(FORM / "efq.ndf"))
    assert code == 1 and "not negative" in err


def test_glivenko_outputs(capsys, tmp_path):
    base = tmp_path / "lem.nd"
    code, out, _ = run(capsys, "glivenko", "--mode", "m", str(CORPUS / "theorems" / "lem.nd"), "-o", str(base))
    assert code == 0
    nn = parse_derivation((tmp_path / "lem.nn.nd").read_text())
    ref = parse_derivation((tmp_path / "lem.refutation.nd").read_text())
    assert in_system(nn, NM) and check(ref).conclusion.__class__.__name__ == "Bot"
    code, out, _ = run(capsys, "glivenko", "--mode", "j", str(CORPUS / "theorems" / "lem.nd"))
    assert "; double negation" in out and "; refutation" in out


def test_inverse(capsys, tmp_path):
    run(capsys, "glivenko", "--mode", "m", str(CORPUS / "theorems" / "lem.nd"), "-o", str(tmp_path / "lem"))
    out_file = tmp_path / "back.nd"
    code, _, _ = run(capsys, "inverse", "--mode", "m", "--original", str(FORM / "lem.ndf"),
                     str(tmp_path / "lem.nn.nd"), "-o", str(out_file))
    assert code == 0
    j = check(parse_derivation(out_file.read_text()))
    assert str(j) == "⊢ P ∨ ¬P"
    code, _, err = run(capsys, "inverse", "--mode", "m", "--original", str(FORM / "p.ndf"),
                       str(tmp_path / "lem.nn.nd"))
    assert code == 1


@pytest.mark.parametrize("logic,name,verdict", [
    ("m", "nn_lem", "provable"), ("i", "lem", "not provable"), ("c", "lem", "provable"),
    ("m", "efq", "not provable"), ("i", "efq", "provable"), ("i", "peirce", "not provable"),
])
def test_prove(capsys, logic, name, verdict):
    code, out, _ = run(capsys, "prove", "--logic", logic, str(FORM / f"{name}.ndf"))
    assert code == 0 and out.strip() == verdict


@pytest.mark.parametrize("fmt", ["text", "ascii", "latex"])
def test_render(capsys, fmt):
    code, out, _ = run(capsys, "render", "--format", fmt, EX2)
    assert code == 0 and out


def test_stress(capsys):
    code, out, _ = run(capsys, "stress", "--seed", "0", "--count", "10", "--profile", "mode=j,depth=4")
    assert code == 0 and out.startswith("mode j: 10/10 passed")


def test_explore(capsys):
    code, out, _ = run(capsys, "explore", "--strategy", "random", "--seed", "42", "--fuel", "100", EX2)
    assert code == 0 and out.startswith("terminated(")


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO((CORPUS / "paper" / "example2.nd").read_text()))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0 and "P ∨ Q" in out


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.nd"
    bad.write_text("(raa (assume bot))")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "parse error" in err
    code, _, err = run(capsys, "check", str(CORPUS / "invalid" / "raa_shape.nd"))
    assert code == 1 and "check failed" in err
    code, _, _ = run(capsys, "check", str(tmp_path / "missing.nd"))
    assert code == 1


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "ndpost.cli", "check", EX2],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "P ⊢ P ∨ Q"
