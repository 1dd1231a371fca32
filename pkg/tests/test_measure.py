from ndpost.kernel import (
    Rule, check, maximal_raa, raa_report, size_raa, size_raa_plus, standard_form,
    standard_form_structural,
    subtree, uses_rule,
)
from ndpost.kernel.derivation import is_efq
from ndpost.rewrite import find_redex, reduce_at
from support import load


def test_example2_sizes():
    d = load("paper/example2.nd")
    assert size_raa(d) == 5
    assert size_raa_plus(d) == 1


def test_example2_maximal_raa():
    d = load("paper/example2.nd")
    top = maximal_raa(d, "all")
    assert len(top) == 4 and is_efq(subtree(d, top))
    low = maximal_raa(d, "discharging")
    assert len(low) == 1 and not is_efq(subtree(d, low))


def test_report_lists_each_raa():
    rep = raa_report(load("paper/example2.nd"))
    assert sorted(e.distance for e in rep.entries) == [1, 4]
    text = str(rep)
    assert "size_raa = 5" in text and "efq at 0.0.1.0, distance 4" in text


def test_counterexample_grows():
    d = load("paper/counterexample.nd")
    assert size_raa(d) == 1
    out = reduce_at(d, find_redex(d, (0,)))
    check(out)
    assert size_raa(out) == 3


def test_standard_form():
    d = load("paper/example1_final.nd")
    sf = standard_form(d)
    assert sf.j_standard and not sf.m_standard
    assert standard_form_structural(d) == sf
    sf = standard_form(load("paper/example2.nd"))
    assert not sf.j_standard and not sf.m_standard


def test_example1_uses_imp_intro():
    d = load("paper/example1.nd")
    assert uses_rule(d, Rule.IMP_I)
    assert not uses_rule(d, Rule.FORALL_I)
