"""Negative formulas, minimal double-negation elimination for them, and
the efq-free reductions at imp_i / forall_i that this makes possible.

A formula is negative when it contains no ∨ or ∃ and every atomic
occurrence (⊥ and ⊤ included) sits under some ¬.  For such B there is a
minimal derivation of B from ¬¬B.
"""
from __future__ import annotations

from dataclasses import replace

from ..kernel.derivation import (
    Derivation, Inference, Labels, Rule, and_e1, and_e2, and_i, assume,
    discharge_none, forall_e, forall_i, graft, imp_e, imp_i, not_e, not_i,
    raa, replace_at, subtree,
)
from ..kernel.formula import (
    And, Atom, Bot, Exists, Forall, Formula, Imp, Not, Or, Top, Var,
)
from .steps import Case, InternalShapeError, Redex, RewriteError


class NotNegative(RewriteError):
    pass


class ShapeMismatch(RewriteError):
    pass


def is_negative(f: Formula) -> bool:
    return _negative(f, False)


def _negative(f, under_not):
    if isinstance(f, (Atom, Bot, Top)):
        return under_not
    if isinstance(f, (Or, Exists)):
        return False
    if isinstance(f, Not):
        return _negative(f.body, True)
    if isinstance(f, (And, Imp)):
        return _negative(f.left, under_not) and _negative(f.right, under_not)
    if isinstance(f, Forall):
        return _negative(f.body, under_not)
    raise TypeError(f"not a formula: {f!r}")


def negative_formulas(depth: int, leaves) -> list[Formula]:
    """Every negative formula of height at most ``depth`` built from
    ``leaves`` with ¬, ∧ and →, without duplicates."""
    plain = list(dict.fromkeys(leaves))        # ¬/∧/→ formulas, any leaf placement
    neg: list[Formula] = []
    for level in range(depth):
        neg = list(dict.fromkeys(
            [Not(u) for u in plain]
            + [cls(a, b) for cls in (And, Imp) for a in neg for b in neg]))
        if level + 1 < depth:
            plain = list(dict.fromkeys(
                plain + [Not(u) for u in plain]
                + [cls(a, b) for cls in (And, Imp) for a in plain for b in plain]))
    return neg


def dne_for_negative(b: Formula, labels: Labels | None = None) -> Derivation:
    """A minimal derivation of B from the single open assumption ¬¬B."""
    if not is_negative(b):
        raise NotNegative(f"{b} is not negative")
    labels = labels or Labels(1)
    hyp = labels()
    return discharge_none(_dne(b, labels, hyp), hyp)


def _nn_part(whole: Formula, part: Formula, project, labels, hyp) -> Derivation:
    """¬¬part from ¬¬whole (leaf labelled hyp), given whole ⊢ part by ``project``."""
    k1, k2 = labels(), labels()
    body = not_e(assume(Not(part), k1), project(assume(whole, k2)))
    return not_i(k1, not_e(assume(Not(Not(whole)), hyp), not_i(k2, body, whole)), Not(part))


def _dne(b: Formula, labels: Labels, hyp: int) -> Derivation:
    """B from ¬¬B; the ¬¬B leaves carry the (outside) label ``hyp``."""
    if isinstance(b, Not):
        c = b.body
        k1, k2 = labels(), labels()
        inner = not_i(k2, not_e(assume(b, k2), assume(c, k1)), b)           # ¬¬C
        return not_i(k1, not_e(assume(Not(Not(b)), hyp), inner), c)        # ¬C
    if isinstance(b, And):
        parts = []
        for part, proj in ((b.left, and_e1), (b.right, and_e2)):
            nn = _nn_part(b, part, proj, labels, hyp)
            h = labels()
            parts.append(graft(_dne(part, labels, h), h, nn, labels))
        return and_i(*parts)
    if isinstance(b, Imp):
        kc = labels()
        nn = _nn_part(b, b.right, lambda d: imp_e(d, assume(b.left, kc)), labels, hyp)
        h = labels()
        return imp_i(kc, b.left, graft(_dne(b.right, labels, h), h, nn, labels))
    if isinstance(b, Forall):
        nn = _nn_part(b, b.body, lambda d: forall_e(d, Var(b.var)), labels, hyp)
        h = labels()
        return forall_i(b.var, graft(_dne(b.body, labels, h), h, nn, labels))
    raise NotNegative(f"{b} is not negative")


def _splice_dne(b: Formula, nn: Derivation, labels: Labels) -> Derivation:
    """B from a derivation ``nn`` of ¬¬B."""
    h = labels()
    return graft(_dne(b, labels, h), h, nn, labels)


def reduce_at_negative(d: Derivation, redex: Redex, labels: Labels | None = None) -> Derivation:
    """Fire an imp_i or forall_i redex whose raa concludes a negative formula."""
    labels = labels or Labels.above(d)
    s = subtree(d, redex.anchor)
    r = s.premises[0]
    if not (isinstance(r, Inference) and r.rule is Rule.RAA):
        raise ShapeMismatch("the premise of the anchor is not an raa")
    body, lab = r.premises[0], r.label
    if redex.case is Case.IMP_INTRO_NEGATIVE:
        if s.rule is not Rule.IMP_I:
            raise ShapeMismatch("anchor is not imp_i")
        imp = s.conclusion
        a, b = imp.left, imp.right
        if not is_negative(b):
            raise NotNegative(f"consequent {b} is not negative")
        k1, k0, k3, k4 = labels(), labels(), labels(), labels()
        vacuous = Inference(Rule.IMP_I, (assume(b, k1),), imp, k0)
        g = not_i(k1, not_e(assume(Not(imp), k3), vacuous), b)             # ¬B
        nn = not_i(k4, graft(body, lab, g, labels), Not(b))                # ¬¬B, vacuous
        new_b = _splice_dne(b, nn, labels)
        new = raa(k3, not_e(assume(Not(imp), k3), replace(s, premises=(new_b,))), imp)
        return replace_at(d, redex.anchor, new)
    if redex.case is Case.FORALL_INTRO_NEGATIVE:
        if s.rule is not Rule.FORALL_I:
            raise ShapeMismatch("anchor is not forall_i")
        a = r.conclusion
        if not is_negative(a):
            raise NotNegative(f"body {a} is not negative")
        nn = not_i(lab, body, Not(a)) if lab is not None else not_i(labels(), body, Not(a))
        new = replace(s, premises=(_splice_dne(a, nn, labels),))
        return replace_at(d, redex.anchor, new)
    raise InternalShapeError(f"{redex.case} is not a negative-variant case")
