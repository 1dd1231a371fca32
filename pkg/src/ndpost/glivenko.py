"""Double-negation translations and the constructive Glivenko pipeline.

``m`` rewrites A→B as ¬A∨B and ∀xA as ¬∃x¬A; ``j`` only rewrites ∀.
Together with raa postponement this turns a classical derivation of
Γ ⊢ A into a minimal (resp. intuitionistic) one of Γ^m ⊢ ¬¬A^m
(resp. Γ^j ⊢ ¬¬A^j).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .kernel.check import check
from .kernel.derivation import (
    Assume, Derivation, Inference, Labels, Rule, and_e1, and_e2, and_i, assume,
    discharge_none, exists_e, exists_i, forall_e, forall_i, graft, imp_e,
    imp_i, not_e, not_i, or_e, or_i1, or_i2, raa,
)
from .kernel.formula import (
    And, Atom, Bot, Exists, Forall, Formula, Imp, Not, Or, Top, Var, contains,
)
from .kernel.measure import NJ, NM, in_system
from .rewrite.negative import ShapeMismatch, is_negative
from .strategy import postpone_j, postpone_m


class TranslationMode(str, Enum):
    MINIMAL = "m"
    INTUITIONISTIC = "j"
    MINIMAL_STAR = "mstar"
    # Kuroda-style variants keeping ∀ as ∀x¬¬A; for comparison only
    MINIMAL_PRIME = "m'"
    INTUITIONISTIC_PRIME = "j'"


class GlivenkoError(Exception):
    pass


class StarRestrictionViolated(GlivenkoError):
    pass


class VocabularyViolation(GlivenkoError):
    pass


class JudgmentMismatch(GlivenkoError):
    pass


def _mode(mode) -> TranslationMode:
    return TranslationMode(mode.value if isinstance(mode, TranslationMode) else mode)


def _pipeline_mode(mode) -> TranslationMode:
    m = _mode(mode)
    if m not in (TranslationMode.MINIMAL, TranslationMode.INTUITIONISTIC):
        raise ValueError(f"mode {m.value!r} is not available here; use m or j")
    return m


# ---------------------------------------------------------------- formulas

def translate(f: Formula, mode=TranslationMode.MINIMAL) -> Formula:
    mode = _mode(mode)
    return _tr(f, mode)


def _tr(f, mode):
    if isinstance(f, (Atom, Bot, Top)):
        return f
    if isinstance(f, Not):
        return Not(_tr(f.body, mode))
    if isinstance(f, And):
        return And(_tr(f.left, mode), _tr(f.right, mode))
    if isinstance(f, Or):
        return Or(_tr(f.left, mode), _tr(f.right, mode))
    if isinstance(f, Exists):
        return Exists(f.var, _tr(f.body, mode))
    if isinstance(f, Imp):
        a, b = _tr(f.left, mode), _tr(f.right, mode)
        if mode in (TranslationMode.MINIMAL, TranslationMode.MINIMAL_PRIME):
            return Or(Not(a), b)
        if mode is TranslationMode.MINIMAL_STAR:
            if not is_negative(b):
                raise StarRestrictionViolated(f"consequent {b} of {f} is not negative")
            return Imp(a, Not(Not(b)))
        return Imp(a, b)
    if isinstance(f, Forall):
        a = _tr(f.body, mode)
        if mode in (TranslationMode.MINIMAL, TranslationMode.INTUITIONISTIC):
            return Not(Exists(f.var, Not(a)))
        if mode is TranslationMode.MINIMAL_STAR:
            if not is_negative(a):
                raise StarRestrictionViolated(f"body {a} of {f} is not negative")
            return Forall(f.var, a)
        return Forall(f.var, Not(Not(a)))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- derivations

def translate_derivation(d: Derivation, mode=TranslationMode.MINIMAL,
                         labels: Labels | None = None) -> Derivation:
    """A derivation of Γ^mode ⊢ A^mode built node by node from d.

    In mode m the result has no →/∀ anywhere, neither in formulas nor as
    rules; in mode j it has no ∀.
    """
    mode = _pipeline_mode(mode)
    check(d)
    labels = labels or Labels.above(d)
    return _td(d, mode, labels)


def _lem(a: Formula, labels: Labels) -> Derivation:
    """⊢ ¬A ∨ A by raa (the excluded-middle gadget)."""
    k2, k1 = labels(), labels()
    disj = Or(Not(a), a)
    inner = not_e(assume(Not(disj), k2), or_i2(Not(a), assume(a, k1)))
    not_a = not_i(k1, inner, a)
    return raa(k2, not_e(assume(Not(disj), k2), or_i1(not_a, a)), disj)


def _td(d, mode, labels):
    tr = lambda f: _tr(f, mode)
    if isinstance(d, Assume):
        return Assume(tr(d.formula), d.label)
    r = d.rule
    ps = [_td(p, mode, labels) for p in d.premises]
    m = mode is TranslationMode.MINIMAL
    if r is Rule.IMP_I and m:
        a, b = tr(d.conclusion.left), tr(d.conclusion.right)
        k = d.label if d.label is not None else labels()
        left = or_i1(assume(Not(a), k), b)
        right = or_i2(Not(a), ps[0])
        return or_e(k, _lem(a, labels), left, right)
    if r is Rule.IMP_E and m:
        major, minor = ps
        a = tr(d.premises[0].conclusion.left)
        b = tr(d.conclusion)
        k = labels()
        efq = raa(labels(), not_e(assume(Not(a), k), minor), b)
        return or_e(k, major, efq, assume(b, k))
    if r is Rule.FORALL_I:
        x = d.var
        a = ps[0].conclusion
        k2, k1 = labels(), labels()
        q = Exists(x, Not(a))
        body = exists_e(k1, x, assume(q, k2), not_e(assume(Not(a), k1), ps[0]))
        return not_i(k2, body, q)
    if r is Rule.FORALL_E:
        q = ps[0].conclusion.body          # ∃x ¬A'
        target = tr(d.conclusion)
        k = labels()
        wit = exists_i(q, d.term, assume(Not(target), k))
        return raa(k, not_e(ps[0], wit), target)
    if r is Rule.RAA:
        return raa(d.label, ps[0], tr(d.conclusion))
    if r is Rule.NOT_I:
        return not_i(d.label, ps[0], tr(d.conclusion.body))
    if r is Rule.OR_I1:
        return or_i1(ps[0], tr(d.conclusion.right))
    if r is Rule.OR_I2:
        return or_i2(tr(d.conclusion.left), ps[0])
    if r is Rule.IMP_I:
        return imp_i(d.label, tr(d.conclusion.left), ps[0])
    if r is Rule.EXISTS_I:
        return exists_i(tr(d.target), d.term, ps[0])
    if r is Rule.EXISTS_E:
        return exists_e(d.label, d.var, ps[0], ps[1])
    return Inference(r, tuple(ps), tr(d.conclusion), d.label, d.term, d.target, d.var)


# ---------------------------------------------------------------- Glivenko

@dataclass(frozen=True)
class GlivenkoResult:
    double_negation: Derivation
    refutation: Derivation


def _core(d, mode, labels):
    """(¬¬A' derivation, ⊥ derivation with ¬A' leaves labelled h, h)."""
    t = _td(d, mode, labels)
    post = postpone_m if mode is TranslationMode.MINIMAL else postpone_j
    p, _ = post(t, labels=labels)
    a = p.conclusion
    if isinstance(p, Inference) and p.rule is Rule.RAA:
        body = p.premises[0]
        return not_i(p.label, body, Not(a)), body, p.label
    h = labels()
    body = not_e(assume(Not(a), h), p)
    return not_i(h, body, Not(a)), body, h


def glivenko(d: Derivation, mode=TranslationMode.MINIMAL,
             labels: Labels | None = None) -> GlivenkoResult:
    """From Γ ⊢ A in NK, derivations of Γ' ⊢ ¬¬A' and Γ', ¬A' ⊢ ⊥.

    A' is A^m (the result lies in NM) or A^j (in NJ).
    """
    mode = _pipeline_mode(mode)
    check(d)
    labels = labels or Labels.above(d)
    dn, body, h = _core(d, mode, labels)
    return GlivenkoResult(dn, discharge_none(body, h))


def strip_triple_negation(d: Derivation) -> Derivation:
    """Turn a derivation of ¬¬¬B into one of ¬B with the same assumptions."""
    c = d.conclusion
    if not (isinstance(c, Not) and isinstance(c.body, Not) and isinstance(c.body.body, Not)):
        raise ShapeMismatch(f"{c} is not a triple negation")
    b = c.body.body.body
    labels = Labels.above(d)
    k3, k1, k2 = labels(), labels(), labels()
    nnb = not_i(k1, not_e(assume(Not(b), k1), assume(b, k2)), Not(b))
    nb = not_i(k2, not_e(assume(c, k3), nnb), b)
    return imp_e(imp_i(k3, c, nb), d)


def _vocabulary(fs, mode):
    kinds = (Imp, Forall) if mode is TranslationMode.MINIMAL else (Forall,)
    for f in fs:
        if contains(f, kinds):
            raise VocabularyViolation(
                f"assumption {f} uses {'→ or ∀' if len(kinds) == 2 else '∀'}")


def consistency_transfer(d: Derivation, mode=TranslationMode.MINIMAL,
                         labels: Labels | None = None) -> Derivation:
    """A refutation Γ ⊢ ⊥ in NK becomes one in NM (mode m) or NJ (mode j)."""
    mode = _pipeline_mode(mode)
    j = check(d)
    if not isinstance(j.conclusion, Bot):
        raise ShapeMismatch(f"conclusion {j.conclusion} is not ⊥")
    _vocabulary(j.assumptions, mode)
    labels = labels or Labels.above(d)
    _, body, h = _core(d, mode, labels)
    k = labels()
    not_bot = not_i(k, assume(Bot(), k), Bot())
    return graft(body, h, not_bot, labels)


# ---------------------------------------------------------------- equivalences

@dataclass(frozen=True)
class Equivalence:
    fwd: Derivation
    bwd: Derivation


def classical_equiv(a: Formula, mode=TranslationMode.MINIMAL,
                    labels: Labels | None = None) -> Equivalence:
    """NK derivations of {A} ⊢ A^mode and {A^mode} ⊢ A."""
    mode = _pipeline_mode(mode)
    labels = labels or Labels(1)
    h1, h2 = labels(), labels()
    return Equivalence(discharge_none(_fwd(a, mode, labels, h1), h1),
                       discharge_none(_bwd(a, mode, labels, h2), h2))


def _fwd(a, mode, labels, h):
    """A' from leaves [A]^h."""
    t = _tr(a, mode)
    if t == a:
        return assume(a, h)
    if isinstance(a, Not):
        k = labels()
        return not_i(k, not_e(assume(a, h), _bwd(a.body, mode, labels, k)), t.body)
    if isinstance(a, And):
        k1, k2 = labels(), labels()
        left = graft(_fwd(a.left, mode, labels, k1), k1, and_e1(assume(a, h)), labels)
        right = graft(_fwd(a.right, mode, labels, k2), k2, and_e2(assume(a, h)), labels)
        return and_i(left, right)
    if isinstance(a, Or):
        k = labels()
        return or_e(k, assume(a, h),
                    or_i1(_fwd(a.left, mode, labels, k), t.right),
                    or_i2(t.left, _fwd(a.right, mode, labels, k)))
    if isinstance(a, Imp):
        b, c = a.left, a.right
        if mode is TranslationMode.INTUITIONISTIC:
            k, k2 = labels(), labels()
            app = imp_e(assume(a, h), _bwd(b, mode, labels, k))
            return imp_i(k, t.left, graft(_fwd(c, mode, labels, k2), k2, app, labels))
        # ¬B' ∨ C' by cases on B ∨ ¬B
        bt, ct = _tr(b, mode), _tr(c, mode)
        k, k2, k3 = labels(), labels(), labels()
        yes = or_i2(Not(bt), graft(_fwd(c, mode, labels, k2), k2,
                                   imp_e(assume(a, h), assume(b, k)), labels))
        no = or_i1(not_i(k3, not_e(assume(Not(b), k), _bwd(b, mode, labels, k3)), bt), ct)
        return or_e(k, _lem_pos(b, labels), yes, no)
    if isinstance(a, Forall):
        x = a.var
        body_t = _tr(a.body, mode)
        q = Exists(x, Not(body_t))
        k, k1, k2 = labels(), labels(), labels()
        inst = graft(_fwd(a.body, mode, labels, k2), k2, forall_e(assume(a, h), Var(x)), labels)
        ex = exists_e(k1, x, assume(q, k), not_e(assume(Not(body_t), k1), inst))
        return not_i(k, ex, q)
    if isinstance(a, Exists):
        k = labels()
        return exists_e(k, a.var, assume(a, h),
                        exists_i(t, Var(a.var), _fwd(a.body, mode, labels, k)))
    raise TypeError(f"not a formula: {a!r}")


def _bwd(a, mode, labels, h):
    """A from leaves [A']^h."""
    t = _tr(a, mode)
    if t == a:
        return assume(a, h)
    if isinstance(a, Not):
        k = labels()
        return not_i(k, not_e(assume(t, h), _fwd(a.body, mode, labels, k)), a.body)
    if isinstance(a, And):
        k1, k2 = labels(), labels()
        left = graft(_bwd(a.left, mode, labels, k1), k1, and_e1(assume(t, h)), labels)
        right = graft(_bwd(a.right, mode, labels, k2), k2, and_e2(assume(t, h)), labels)
        return and_i(left, right)
    if isinstance(a, Or):
        k = labels()
        return or_e(k, assume(t, h),
                    or_i1(_bwd(a.left, mode, labels, k), a.right),
                    or_i2(a.left, _bwd(a.right, mode, labels, k)))
    if isinstance(a, Imp):
        b, c = a.left, a.right
        if mode is TranslationMode.INTUITIONISTIC:
            k, k2 = labels(), labels()
            app = imp_e(assume(t, h), _fwd(b, mode, labels, k))
            return imp_i(k, b, graft(_bwd(c, mode, labels, k2), k2, app, labels))
        bt = _tr(b, mode)
        k, k2 = labels(), labels()
        efq = raa(labels(), not_e(assume(Not(bt), k2), _fwd(b, mode, labels, k)), c)
        return imp_i(k, b, or_e(k2, assume(t, h), efq, _bwd(c, mode, labels, k2)))
    if isinstance(a, Forall):
        x = a.var
        body_t = _tr(a.body, mode)
        q = Exists(x, Not(body_t))
        k, k2 = labels(), labels()
        neg = not_i(k2, not_e(assume(Not(a.body), k), _bwd(a.body, mode, labels, k2)), body_t)
        bot = not_e(assume(t, h), exists_i(q, Var(x), neg))
        return forall_i(x, raa(k, bot, a.body))
    if isinstance(a, Exists):
        k = labels()
        return exists_e(k, a.var, assume(t, h),
                        exists_i(a, Var(a.var), _bwd(a.body, mode, labels, k)))
    raise TypeError(f"not a formula: {a!r}")


def _lem_pos(a: Formula, labels: Labels) -> Derivation:
    """⊢ A ∨ ¬A by raa."""
    k2, k1 = labels(), labels()
    disj = Or(a, Not(a))
    inner = not_e(assume(Not(disj), k2), or_i1(assume(a, k1), Not(a)))
    return raa(k2, not_e(assume(Not(disj), k2), or_i2(a, not_i(k1, inner, a))), disj)


def _tag_open(d, f, h):
    """Give the undischarged leaves with formula f the label h."""
    if isinstance(d, Assume):
        return Assume(d.formula, h) if d.label is None and d.formula == f else d
    return Inference(d.rule, tuple(_tag_open(p, f, h) for p in d.premises),
                     d.conclusion, d.label, d.term, d.target, d.var)


def inverse_glivenko(d: Derivation, original: Formula, gamma=(),
                     mode=TranslationMode.MINIMAL,
                     labels: Labels | None = None) -> Derivation:
    """From Γ' ⊢ ¬¬A' in NM (resp. NJ) back to Γ ⊢ A in NK."""
    mode = _pipeline_mode(mode)
    j = check(d)
    at = _tr(original, mode)
    if j.conclusion != Not(Not(at)):
        raise JudgmentMismatch(f"conclusion {j.conclusion} is not ¬¬{at}")
    translated = {}
    for g in gamma:
        translated.setdefault(_tr(g, mode), g)
    extra = [f for f in j.assumptions if f not in translated]
    if extra:
        raise JudgmentMismatch(f"assumption {extra[0]} is not the translation of any of gamma")
    system = NM if mode is TranslationMode.MINIMAL else NJ
    if not in_system(d, system):
        raise JudgmentMismatch(f"input derivation is not in {system}")
    labels = labels or Labels.above(d)
    for gt in j.assumptions:
        g = translated[gt]
        if g == gt:
            continue
        h, h2 = labels(), labels()
        d = graft(_tag_open(d, gt, h), h,
                  discharge_none(_fwd(g, mode, labels, h2), h2), labels)
    k = labels()
    at_proof = raa(k, not_e(d, assume(Not(at), k)), at)
    h = labels()
    return graft(_bwd(original, mode, labels, h), h, at_proof, labels)
