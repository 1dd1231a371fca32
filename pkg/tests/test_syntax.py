import pytest
from hypothesis import given, settings, strategies as st

from ndpost.kernel import Forall, Imp, Not, Var, check, same_up_to_labels
from ndpost.kernel.formula import Atom, prop
from ndpost.syntax import (
    ArityMismatch, ParseError, formula_latex, formula_sexpr, parse_derivation,
    parse_formula, parse_term, render, render_ascii, render_formula, render_latex,
    render_text,
)
from support import corpus_files, formulas, fuzz_derivation, load

p = prop("P")


def test_parse_formula_examples():
    assert parse_formula("(imp (not (not (pred P))) (pred P))") == Imp(Not(Not(p)), p)
    assert parse_formula("(forall x (pred P x))") == Forall("x", Atom("P", (Var("x"),)))
    with pytest.raises(ParseError):
        parse_formula("(and (pred P))")


def test_parse_errors_carry_spans():
    with pytest.raises(ParseError) as e:
        parse_derivation("(raa (assume bot))")
    assert e.value.span.start <= e.value.span.end
    with pytest.raises(ParseError):
        parse_formula("(pred P")
    with pytest.raises(ParseError):
        parse_formula("(pred P) extra")
    with pytest.raises(ArityMismatch):
        parse_formula("(and (pred P) (pred P x))")
    with pytest.raises(ArityMismatch):
        parse_formula("(and (pred P (fun f x)) (pred P (fun f x x)))")


def test_parse_terms_and_comments():
    assert str(parse_term("(fun f x (fun c))")) == "f(x, c)"
    d = parse_derivation("; comment\n(raa 1 (not-e (assume 1 (not (pred P))) (assume (pred P)))) ; tail")
    j = check(d)
    assert j.conclusion == p and j.assumptions == {p}


def test_example2_judgment():
    j = check(load("paper/example2.nd"))
    assert str(j) == "P ⊢ P ∨ Q"


ALL = [pth for sub in ("valid", "theorems", "paper") for pth in corpus_files(sub)]


@pytest.mark.parametrize("path", ALL, ids=lambda p: f"{p.parent.name}/{p.stem}")
def test_corpus_round_trip(path):
    d = parse_derivation(path.read_text(encoding="utf-8"))
    again = parse_derivation(render_text(d))
    assert same_up_to_labels(d, again)
    render_ascii(d)
    render_latex(d)


def test_efq_rule_name():
    d = load("paper/example2.nd")
    assert "by efq" in render_ascii(d)
    assert r"\mathsf{efq}" in render_latex(d)


def test_latex_root_line():
    tex = render_latex(load("paper/example1_final.nd"))
    lines = tex.strip().splitlines()
    assert lines[0] == r"\begin{prooftree}" and lines[-1] == r"\end{prooftree}"
    assert lines[-3].startswith(r"\RightLabel{$\mathsf{raa}^{")
    assert lines[-2] == r"\UnaryInfC{$(\lnot \lnot P \to P) \land (\lnot \lnot Q \to Q)$}"


def test_render_dispatch():
    d = load("valid/and_i.nd")
    assert render(d, "text") == render_text(d)
    assert render(d, "ascii") == render_ascii(d)
    with pytest.raises(ValueError):
        render(d, "html")


@given(formulas)
def test_formula_round_trip(a):
    assert parse_formula(formula_sexpr(a)) == a
    assert render_formula(a, "text") == formula_sexpr(a)
    formula_latex(a)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_fuzz_round_trip(seed):
    d = fuzz_derivation(seed)
    assert same_up_to_labels(parse_derivation(render_text(d)), d)
    render_ascii(d)
    render_latex(d)
