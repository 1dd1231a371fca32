import pytest

from ndpost.kernel import (
    NM, Forall, Imp, Not, Rule, Var, assume, check, forall_i, imp_e,
    imp_i, in_system, not_e, raa, uses_rule,
)
from ndpost.kernel.derivation import is_efq, nodes
from ndpost.kernel.formula import BOT, TOP, And, Atom, Or, prop
from ndpost.oracle import minimal_provable
from ndpost.rewrite import (
    Case, NotNegative, ShapeMismatch, dne_for_negative, find_redex, is_negative,
    negative_formulas, reduce_at_negative,
)

p, q = prop("P"), prop("Q")
x = Var("x")


def efq_count(d):
    return sum(1 for _, n in nodes(d) if is_efq(n))


def test_is_negative_examples():
    assert is_negative(And(Not(p), Not(q)))
    assert not is_negative(Imp(p, Not(q)))
    assert not is_negative(Or(Not(p), Not(q)))
    assert not is_negative(Not(Or(p, q)))
    assert is_negative(Forall("x", Not(Atom("P", (x,)))))
    assert not is_negative(BOT) and is_negative(Not(BOT))


@pytest.mark.parametrize("b", [Not(p), And(Not(p), Not(q)), Imp(Not(p), Not(Not(q))),
                               Not(Not(Not(p))), Forall("x", Not(Atom("P", (x,))))])
def test_dne_examples(b):
    d = dne_for_negative(b)
    j = check(d)
    assert j.assumptions == {Not(Not(b))} and j.conclusion == b
    assert in_system(d, NM)


def test_dne_agrees_with_minimal_oracle():
    b = And(Not(p), Not(q))
    assert minimal_provable(b, [Not(Not(b))])


def test_dne_rejects_positive():
    with pytest.raises(NotNegative):
        dne_for_negative(p)


def test_negative_formulas_counts():
    leaves = [p, q, BOT, TOP]
    assert [len(negative_formulas(n, leaves)) for n in range(4)] == [0, 4, 72, 13612]
    assert all(is_negative(f) for f in negative_formulas(2, leaves))


def _imp_redex(b, labels=None):
    r = raa(5, not_e(assume(Not(b), 5), imp_e(assume(Imp(p, b)), assume(p, 1))), b)
    return imp_i(1, p, r)


def test_imp_intro_negative():
    b = Not(q)
    d = _imp_redex(b)
    red = find_redex(d, (0,), negative=True)
    assert red.case is Case.IMP_INTRO_NEGATIVE
    out = reduce_at_negative(d, red)
    assert check(out).within(check(d))
    assert out.rule is Rule.RAA and out.premises[0].premises[1].rule is Rule.IMP_I
    assert uses_rule(out, Rule.NOT_I)
    assert efq_count(out) == 0


def test_forall_intro_negative_removes_raa():
    a = Not(Atom("P", (x,)))
    body = raa(3, not_e(assume(Not(a), 3), forall_e_leaf(a)), a)
    d = forall_i("x", body)
    out = reduce_at_negative(d, find_redex(d, (0,), negative=True))
    assert check(out).within(check(d))
    assert out.rule is Rule.FORALL_I
    assert not uses_rule(out, Rule.RAA)


def forall_e_leaf(a):
    from ndpost.kernel import forall_e
    return forall_e(assume(Forall("x", a)), x)


def test_imp_intro_positive_consequent():
    d = _imp_redex(q)
    with pytest.raises(NotNegative):
        reduce_at_negative(d, find_redex(d, (0,), negative=True))


def test_shape_mismatch():
    d = _imp_redex(Not(q))
    red = find_redex(d, (0,), negative=True)
    bad = imp_i(1, p, assume(Not(q)))
    with pytest.raises(ShapeMismatch):
        reduce_at_negative(bad, red)
