import pytest
from hypothesis import given

from ndpost.glivenko import (
    JudgmentMismatch, StarRestrictionViolated, TranslationMode, VocabularyViolation,
    classical_equiv, consistency_transfer, glivenko, inverse_glivenko,
    strip_triple_negation, translate, translate_derivation,
)
from ndpost.kernel import (
    NJ, NK, NM, Exists, Forall, Fun, Imp, Not, Rule, Var, and_i, assume, check,
    forall_e, imp_i, in_system, not_e, not_i, or_i1, or_i2, raa,
    same_up_to_labels, subst, top_i, uses_rule,
)
from ndpost.kernel.derivation import nodes, Assume
from ndpost.kernel.formula import BOT, TOP, And, Atom, Or, contains, is_propositional, prop
from ndpost.oracle import classical_valid, intuitionistic_provable, minimal_provable
from ndpost.rewrite import ShapeMismatch
from support import corpus_files, f, formulas, load, names, terms

p, q = prop("P"), prop("Q")
x = Var("x")
c = Fun("c", ())
THEOREMS = corpus_files("theorems")


def Px(t):
    return Atom("P", (t,))


def formulas_in(d):
    for _, n in nodes(d):
        yield n.formula if isinstance(n, Assume) else n.conclusion


def free_of(d, kinds):
    return not any(contains(g, kinds) for g in formulas_in(d))


# ---------------------------------------------------------------- translate

def test_translate_examples():
    assert translate(Imp(p, q), "m") == Or(Not(p), q)
    assert translate(Forall("x", Px(x)), "j") == Not(Exists("x", Not(Px(x))))
    assert translate(And(Or(p, q), BOT), "m") == And(Or(p, q), BOT)
    assert translate(Imp(p, q), TranslationMode.INTUITIONISTIC) == Imp(p, q)


def test_translate_peirce_minimal():
    peirce = f("(imp (imp (imp (pred P) (pred Q)) (pred P)) (pred P))")
    inner = Or(Not(Or(Not(p), q)), p)
    assert translate(peirce, "m") == Or(Not(inner), p)


def test_translate_star():
    assert translate(Imp(p, Not(q)), "mstar") == Imp(p, Not(Not(Not(q))))
    with pytest.raises(StarRestrictionViolated):
        translate(Imp(p, q), "mstar")
    with pytest.raises(StarRestrictionViolated):
        translate(Forall("x", Px(x)), "mstar")


def test_translate_prime_variants():
    a = Forall("x", Px(x))
    assert translate(a, "m'") == Forall("x", Not(Not(Px(x))))
    assert translate(Imp(p, a), "j'") == Imp(p, Forall("x", Not(Not(Px(x)))))


@given(formulas)
def test_minimal_translation_drops_imp_and_forall(a):
    assert not contains(translate(a, "m"), (Imp, Forall))
    assert not contains(translate(a, "j"), (Forall,))


@given(formulas)
def test_translation_preserves_free_variables(a):
    for mode in "mj":
        assert translate(a, mode).free_vars == a.free_vars


@given(formulas, names, terms)
def test_translation_commutes_with_substitution(a, v, t):
    for mode in "mj":
        assert translate(subst(a, v, t), mode) == subst(translate(a, mode), v, t)


@given(formulas)
def test_translation_identity_on_fragment(a):
    if not contains(a, (Imp, Forall)):
        assert translate(a, "m") == a
    if not contains(a, (Forall,)):
        assert translate(a, "j") == a


# ---------------------------------------------------------------- derivations

def test_translate_derivation_imp_intro():
    d = imp_i(1, p, assume(p, 1))
    out = translate_derivation(d, "m")
    j = check(out)
    assert j.conclusion == Or(Not(p), p) and not j.assumptions
    assert uses_rule(out, Rule.RAA) and not uses_rule(out, Rule.IMP_I)


def test_translate_derivation_forall_elim():
    d = forall_e(assume(Forall("x", Px(x))), c)
    out = translate_derivation(d, "m")
    j = check(out)
    assert j.conclusion == Px(c)
    assert j.assumptions == {Not(Exists("x", Not(Px(x))))}
    assert out.rule is Rule.RAA and uses_rule(out, Rule.EXISTS_I)
    assert free_of(out, (Forall, Imp))


def test_translate_derivation_homomorphic_fragment():
    d = and_i(assume(p), or_i1(assume(q), p))
    assert same_up_to_labels(translate_derivation(d, "m"), d)


@pytest.mark.parametrize("path", THEOREMS, ids=lambda p: p.stem)
@pytest.mark.parametrize("mode", ["m", "j"])
def test_translate_derivation_judgment(path, mode):
    d = load(f"theorems/{path.name}")
    j = check(d)
    out = translate_derivation(d, mode)
    jt = check(out)
    assert jt.conclusion == translate(j.conclusion, mode)
    assert jt.assumptions <= {translate(g, mode) for g in j.assumptions}
    assert not uses_rule(out, Rule.FORALL_I) and not uses_rule(out, Rule.FORALL_E)
    if mode == "m":
        assert free_of(out, (Imp, Forall))
        assert not uses_rule(out, Rule.IMP_I) and not uses_rule(out, Rule.IMP_E)


# ---------------------------------------------------------------- glivenko

def test_glivenko_lem():
    res = glivenko(load("theorems/lem.nd"), "m")
    j = check(res.double_negation)
    assert j.conclusion == Not(Not(Or(p, Not(p)))) and not j.assumptions
    assert in_system(res.double_negation, NM)
    assert minimal_provable(j.conclusion)


def test_glivenko_peirce():
    res = glivenko(load("theorems/peirce.nd"), "m")
    j = check(res.double_negation)
    inner = Or(Not(Or(Not(p), q)), p)
    assert j.conclusion == Not(Not(Or(Not(inner), p)))
    assert in_system(res.double_negation, NM)


def test_glivenko_top():
    res = glivenko(top_i(), "m")
    assert check(res.double_negation).conclusion == Not(Not(TOP))
    ref = check(res.refutation)
    assert ref.conclusion == BOT and ref.assumptions == {Not(TOP)}


@pytest.mark.parametrize("path", THEOREMS, ids=lambda p: p.stem)
@pytest.mark.parametrize("mode,system,oracle", [("m", NM, minimal_provable),
                                                ("j", NJ, intuitionistic_provable)])
def test_glivenko_corpus(path, mode, system, oracle):
    d = load(f"theorems/{path.name}")
    j = check(d)
    res = glivenko(d, mode)
    dn, ref = check(res.double_negation), check(res.refutation)
    a = translate(j.conclusion, mode)
    gamma = {translate(g, mode) for g in j.assumptions}
    assert dn.conclusion == Not(Not(a)) and dn.assumptions <= gamma
    assert ref.conclusion == BOT and ref.assumptions <= gamma | {Not(a)}
    assert in_system(res.double_negation, system) and in_system(res.refutation, system)
    if mode == "m":
        for out in (res.double_negation, res.refutation):
            assert free_of(out, (Imp, Forall))
    if is_propositional(j.conclusion) and all(map(is_propositional, j.assumptions)):
        assert oracle(dn.conclusion, sorted(dn.assumptions, key=str))


# ---------------------------------------------------------------- helpers

def _nm_triple(b):
    """A minimal derivation of ¬¬¬B from the open assumption ¬B."""
    return not_i(1, not_e(assume(Not(Not(b)), 1), assume(Not(b))), Not(Not(b)))


@pytest.mark.parametrize("b", [p, And(p, q)])
def test_strip_triple_negation(b):
    out = strip_triple_negation(_nm_triple(b))
    j = check(out)
    assert j.conclusion == Not(b) and j.assumptions == {Not(b)}
    assert in_system(out, NM)


def test_strip_triple_negation_shape():
    d = not_i(1, not_e(assume(Not(p), 1), assume(p)), Not(p))
    with pytest.raises(ShapeMismatch):
        strip_triple_negation(d)


def test_consistency_transfer_minimal_input():
    d = not_e(assume(Not(p)), assume(p))
    out = consistency_transfer(d, "m")
    j = check(out)
    assert j.conclusion == BOT and j.assumptions <= {p, Not(p)}
    assert in_system(out, NM)


def test_consistency_transfer_classical():
    h = Not(Or(p, Not(p)))
    d = not_e(assume(h), or_i1(raa(1, not_e(assume(h), or_i2(p, assume(Not(p), 1))), p), Not(p)))
    assert not in_system(d, NJ)
    out = consistency_transfer(d, "m")
    j = check(out)
    assert j.conclusion == BOT and j.assumptions == {h}
    assert in_system(out, NM)
    assert minimal_provable(Not(h))


def test_consistency_transfer_vocabulary():
    d = not_e(assume(Not(p)), assume(p))
    d = not_e(assume(Not(Imp(p, q))), assume(Imp(p, q)))
    with pytest.raises(VocabularyViolation):
        consistency_transfer(d, "m")
    assert in_system(consistency_transfer(d, "j"), NJ)


def test_consistency_transfer_needs_bottom():
    with pytest.raises(ShapeMismatch):
        consistency_transfer(assume(p), "m")


@pytest.mark.parametrize("a", [p, Imp(p, q), Forall("x", Px(x)),
                               Imp(Imp(p, q), p), Not(Forall("x", Imp(Px(x), q)))])
@pytest.mark.parametrize("mode", ["m", "j"])
def test_classical_equiv(a, mode):
    eq = classical_equiv(a, mode)
    fwd, bwd = check(eq.fwd), check(eq.bwd)
    t = translate(a, mode)
    assert fwd.conclusion == t and fwd.assumptions <= {a}
    assert bwd.conclusion == a and bwd.assumptions <= {t}
    assert in_system(eq.fwd, NK) and in_system(eq.bwd, NK)
    if is_propositional(a):
        assert classical_valid(Imp(a, t)) and classical_valid(Imp(t, a))


def test_classical_equiv_atom_is_a_leaf():
    eq = classical_equiv(p, "m")
    assert isinstance(eq.fwd, Assume) and isinstance(eq.bwd, Assume)


def test_inverse_lem():
    dn = glivenko(load("theorems/lem.nd"), "m").double_negation
    out = inverse_glivenko(dn, Or(p, Not(p)))
    j = check(out)
    assert j.conclusion == Or(p, Not(p)) and not j.assumptions


def test_inverse_with_assumption():
    d = not_i(1, not_e(assume(Not(p), 1), assume(p)), Not(p))
    out = inverse_glivenko(d, p, [p])
    j = check(out)
    assert j.conclusion == p and j.assumptions == {p}


def test_inverse_rejects_wrong_shape():
    d = not_i(1, not_e(assume(Not(p)), assume(p, 1)), p)
    with pytest.raises(JudgmentMismatch):
        inverse_glivenko(d, p)


def test_inverse_rejects_foreign_assumption():
    d = not_i(1, not_e(assume(Not(p), 1), assume(p)), Not(p))
    with pytest.raises(JudgmentMismatch):
        inverse_glivenko(d, p, [q])


@pytest.mark.parametrize("path", THEOREMS, ids=lambda p: p.stem)
@pytest.mark.parametrize("mode", ["m", "j"])
def test_inverse_round_trip(path, mode):
    d = load(f"theorems/{path.name}")
    j = check(d)
    dn = glivenko(d, mode).double_negation
    out = inverse_glivenko(dn, j.conclusion, sorted(j.assumptions, key=str), mode)
    assert check(out).within(j)
    assert in_system(out, NK)
