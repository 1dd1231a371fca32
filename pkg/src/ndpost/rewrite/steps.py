"""One-step reductions pushing an raa below the rule that consumes it.

A redex is addressed by the raa under focus.  Its anchor is the rule
instance immediately below; the active premises are those premises of
the anchor that end in raa.  ``reduce_at`` rebuilds the anchor subtree
according to the case and leaves the rest of the derivation untouched.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from ..kernel.derivation import (
    Derivation, Inference, Labels, Path, Rule, assume, count_label,
    graft, not_e, not_i, raa, rename_label, replace_at, subtree,
)
from ..kernel.formula import BOT, Not


class Case(str, Enum):
    NOT_INTRO = "NotIntro"
    NOT_ELIM_MAJOR = "NotElimMajor"
    NOT_ELIM_MINOR = "NotElimMinor"
    NOT_ELIM_BOTH = "NotElimBoth"
    AND_INTRO_LEFT = "AndIntroLeft"
    AND_INTRO_RIGHT = "AndIntroRight"
    AND_INTRO_BOTH = "AndIntroBoth"
    AND_ELIM1 = "AndElim1"
    AND_ELIM2 = "AndElim2"
    OR_INTRO1 = "OrIntro1"
    OR_INTRO2 = "OrIntro2"
    OR_ELIM_MAJOR = "OrElimMajor"
    OR_ELIM_LEFT = "OrElimLeft"
    OR_ELIM_RIGHT = "OrElimRight"
    OR_ELIM_MINORS = "OrElimMinors"
    OR_ELIM_MAJOR_LEFT = "OrElimMajorLeft"
    OR_ELIM_MAJOR_RIGHT = "OrElimMajorRight"
    OR_ELIM_ALL = "OrElimAll"
    IMP_INTRO = "ImpIntro"
    IMP_ELIM_MAJOR = "ImpElimMajor"
    IMP_ELIM_MINOR = "ImpElimMinor"
    IMP_ELIM_BOTH = "ImpElimBoth"
    EXISTS_INTRO = "ExistsIntro"
    EXISTS_ELIM_MAJOR = "ExistsElimMajor"
    EXISTS_ELIM_MINOR = "ExistsElimMinor"
    EXISTS_ELIM_BOTH = "ExistsElimBoth"
    FORALL_ELIM = "ForallElim"
    EFQ_BELOW = "EfqBelow"
    RAA_BELOW = "RaaBelow"
    # variants for negative consequents, built without efq
    IMP_INTRO_NEGATIVE = "ImpIntroNegative"
    FORALL_INTRO_NEGATIVE = "ForallIntroNegative"

    def __str__(self):
        return self.value


# (rule below the raa, active premises) -> case
DISPATCH: dict[tuple[Rule, frozenset], Case] = {
    (Rule.NOT_I, frozenset({0})): Case.NOT_INTRO,
    (Rule.NOT_E, frozenset({0})): Case.NOT_ELIM_MAJOR,
    (Rule.NOT_E, frozenset({1})): Case.NOT_ELIM_MINOR,
    (Rule.NOT_E, frozenset({0, 1})): Case.NOT_ELIM_BOTH,
    (Rule.AND_I, frozenset({0})): Case.AND_INTRO_LEFT,
    (Rule.AND_I, frozenset({1})): Case.AND_INTRO_RIGHT,
    (Rule.AND_I, frozenset({0, 1})): Case.AND_INTRO_BOTH,
    (Rule.AND_E1, frozenset({0})): Case.AND_ELIM1,
    (Rule.AND_E2, frozenset({0})): Case.AND_ELIM2,
    (Rule.OR_I1, frozenset({0})): Case.OR_INTRO1,
    (Rule.OR_I2, frozenset({0})): Case.OR_INTRO2,
    (Rule.OR_E, frozenset({0})): Case.OR_ELIM_MAJOR,
    (Rule.OR_E, frozenset({1})): Case.OR_ELIM_LEFT,
    (Rule.OR_E, frozenset({2})): Case.OR_ELIM_RIGHT,
    (Rule.OR_E, frozenset({1, 2})): Case.OR_ELIM_MINORS,
    (Rule.OR_E, frozenset({0, 1})): Case.OR_ELIM_MAJOR_LEFT,
    (Rule.OR_E, frozenset({0, 2})): Case.OR_ELIM_MAJOR_RIGHT,
    (Rule.OR_E, frozenset({0, 1, 2})): Case.OR_ELIM_ALL,
    (Rule.IMP_I, frozenset({0})): Case.IMP_INTRO,
    (Rule.IMP_E, frozenset({0})): Case.IMP_ELIM_MAJOR,
    (Rule.IMP_E, frozenset({1})): Case.IMP_ELIM_MINOR,
    (Rule.IMP_E, frozenset({0, 1})): Case.IMP_ELIM_BOTH,
    (Rule.EXISTS_I, frozenset({0})): Case.EXISTS_INTRO,
    (Rule.EXISTS_E, frozenset({0})): Case.EXISTS_ELIM_MAJOR,
    (Rule.EXISTS_E, frozenset({1})): Case.EXISTS_ELIM_MINOR,
    (Rule.EXISTS_E, frozenset({0, 1})): Case.EXISTS_ELIM_BOTH,
    (Rule.FORALL_E, frozenset({0})): Case.FORALL_ELIM,
}

# cases where two raas are consumed and either one may end up on top
SYMMETRIC = frozenset({Case.NOT_ELIM_BOTH, Case.AND_INTRO_BOTH, Case.IMP_ELIM_BOTH})


class RewriteError(Exception):
    pass


class RootRaa(RewriteError):
    """The raa under focus is the last rule; nothing lies below it."""


class ForallIntroBlock(RewriteError):
    """An raa directly above forall_i cannot be pushed down."""


class NotAnRaa(RewriteError):
    pass


class InternalShapeError(RewriteError):
    """The subtree does not have the shape its case requires."""


@dataclass(frozen=True)
class Redex:
    anchor: Path
    active: frozenset
    case: Case
    focus: Path

    def describe(self) -> str:
        where = ".".join(map(str, self.anchor)) or "root"
        return f"case {self.case} at {where}"


def _is_raa(d: Derivation) -> bool:
    return isinstance(d, Inference) and d.rule is Rule.RAA


def find_redex(d: Derivation, raa_pos: Path, negative: bool = False) -> Redex:
    """The redex containing the raa at ``raa_pos``.

    With ``negative`` set, imp_i and forall_i anchors give the variant
    cases handled by ``reduce_at_negative``.
    """
    raa_pos = tuple(raa_pos)
    node = subtree(d, raa_pos)
    if not _is_raa(node):
        raise NotAnRaa(f"no raa at {raa_pos}")
    if not raa_pos:
        raise RootRaa("the raa under focus is the last rule")
    anchor = raa_pos[:-1]
    s = subtree(d, anchor)
    if s.rule is Rule.FORALL_I:
        if negative:
            return Redex(anchor, frozenset({0}), Case.FORALL_INTRO_NEGATIVE, raa_pos)
        raise ForallIntroBlock("raa directly above forall_i")
    if s.rule is Rule.RAA:
        case = Case.EFQ_BELOW if count_label(s.premises[0], s.label) == 0 else Case.RAA_BELOW
        return Redex(anchor, frozenset({0}), case, raa_pos)
    if negative and s.rule is Rule.IMP_I:
        return Redex(anchor, frozenset({0}), Case.IMP_INTRO_NEGATIVE, raa_pos)
    active = frozenset(i for i, p in enumerate(s.premises) if _is_raa(p))
    case = DISPATCH.get((s.rule, active))
    if case is None:
        raise InternalShapeError(f"no reduction for {s.rule} with active premises {sorted(active)}")
    return Redex(anchor, active, case, raa_pos)


def all_redexes(d: Derivation) -> list[Redex]:
    """One redex per non-root raa that can be fired (forall_i blocks)."""
    from ..kernel.derivation import nodes
    out = []
    for path, n in nodes(d):
        if path and _is_raa(n):
            try:
                out.append(find_redex(d, path))
            except ForallIntroBlock:
                pass
    return out


def reduce_at(d: Derivation, redex: Redex, labels: Labels | None = None,
              orientation: str = "printed") -> Derivation:
    """Fire ``redex`` in ``d``.

    ``orientation`` only matters for the symmetric two-raa cases:
    "printed" stacks the right subderivation above the left one,
    "swapped" does the opposite.
    """
    if orientation not in ("printed", "swapped"):
        raise ValueError(f"unknown orientation {orientation!r}")
    if labels is None:
        labels = Labels.above(d)
    s = subtree(d, redex.anchor)
    new = _REDUCERS[redex.case](s, labels, orientation == "swapped")
    return replace_at(d, redex.anchor, new)


# ---------------------------------------------------------------- helpers

def _need(cond, msg):
    if not cond:
        raise InternalShapeError(msg)


def _raa_parts(r: Derivation):
    _need(_is_raa(r), "expected an raa premise")
    return r.premises[0], r.label


def _not_bot(labels: Labels) -> Derivation:
    """¬⊥ by discharging ⊥ at once."""
    k = labels()
    return not_i(k, assume(BOT, k), BOT)


def _with_premises(s: Inference, *prem) -> Inference:
    return replace(s, premises=tuple(prem))


# ---------------------------------------------------------------- cases

def _not_intro(s, labels, swapped):
    body, lab = _raa_parts(s.premises[0])
    return _with_premises(s, graft(body, lab, _not_bot(labels), labels))


_raa_below = _not_intro


def _not_elim_major(s, labels, swapped):
    body, lab = _raa_parts(s.premises[0])
    minor = s.premises[1]
    neg_a = s.premises[0].conclusion  # ¬A
    k = labels()
    g = not_i(k, not_e(assume(neg_a, k), minor), neg_a)  # ¬¬A
    return graft(body, lab, g, labels)


def _not_elim_minor(s, labels, swapped):
    major = s.premises[0]
    body, lab = _raa_parts(s.premises[1])
    return graft(body, lab, major, labels)


def _not_elim_both(s, labels, swapped):
    b1, l1 = _raa_parts(s.premises[0])
    b2, l2 = _raa_parts(s.premises[1])
    neg_a = s.premises[0].conclusion
    a = s.premises[1].conclusion
    k1, k2 = labels(), labels()
    if not swapped:
        g1 = not_i(k1, not_e(assume(neg_a, k2), assume(a, k1)), a)            # ¬A
        inner = not_i(k2, graft(b2, l2, g1, labels), neg_a)                    # ¬¬A
        return graft(b1, l1, inner, labels)
    g1 = not_i(k1, not_e(assume(neg_a, k1), assume(a, k2)), neg_a)             # ¬¬A
    inner = not_i(k2, graft(b1, l1, g1, labels), a)                            # ¬A
    return graft(b2, l2, inner, labels)


def _unary(s, labels, swapped):
    """and_e1/2, or_i1/2, forall_e, exists_i: the raa moves below s."""
    body, lab = _raa_parts(s.premises[0])
    x = s.premises[0].conclusion
    c = s.conclusion
    k1, k2 = labels(), labels()
    g = not_i(k1, not_e(assume(Not(c), k2), _with_premises(s, assume(x, k1))), x)
    return raa(k2, graft(body, lab, g, labels), c)


def _binary_left(s, labels, swapped):
    body, lab = _raa_parts(s.premises[0])
    x = s.premises[0].conclusion
    c = s.conclusion
    k1, k2 = labels(), labels()
    g = not_i(k1, not_e(assume(Not(c), k2), _with_premises(s, assume(x, k1), s.premises[1])), x)
    return raa(k2, graft(body, lab, g, labels), c)


def _binary_right(s, labels, swapped):
    body, lab = _raa_parts(s.premises[1])
    x = s.premises[1].conclusion
    c = s.conclusion
    k1, k2 = labels(), labels()
    g = not_i(k1, not_e(assume(Not(c), k2), _with_premises(s, s.premises[0], assume(x, k1))), x)
    return raa(k2, graft(body, lab, g, labels), c)


def _binary_both(s, labels, swapped):
    b0, l0 = _raa_parts(s.premises[0])
    b1, l1 = _raa_parts(s.premises[1])
    x0, x1 = s.premises[0].conclusion, s.premises[1].conclusion
    c = s.conclusion
    k1, k2, k3 = labels(), labels(), labels()
    if not swapped:
        core = _with_premises(s, assume(x0, k2), assume(x1, k1))
        g1 = not_i(k1, not_e(assume(Not(c), k3), core), x1)
        g2 = not_i(k2, graft(b1, l1, g1, labels), x0)
        return raa(k3, graft(b0, l0, g2, labels), c)
    core = _with_premises(s, assume(x0, k1), assume(x1, k2))
    g1 = not_i(k1, not_e(assume(Not(c), k3), core), x0)
    g2 = not_i(k2, graft(b0, l0, g1, labels), x1)
    return raa(k3, graft(b1, l1, g2, labels), c)


def _or_elim(s, labels, swapped, active):
    major, left, right = s.premises
    disj = major.conclusion
    c = s.conclusion
    lab = s.label
    # minors: an raa minor gives up its raa and shares its label for ¬C
    neg_c_label = None
    if 1 in active:
        left, neg_c_label = _raa_parts(left)
    if 2 in active:
        right_body, l2 = _raa_parts(right)
        if neg_c_label is None:
            neg_c_label = l2
            right = right_body
        else:
            right = rename_label(right_body, l2, neg_c_label)
    if neg_c_label is None:
        neg_c_label = labels()
    if 1 not in active:
        left = not_e(assume(Not(c), neg_c_label), left)
    if 2 not in active:
        right = not_e(assume(Not(c), neg_c_label), right)
    if 0 not in active:
        return raa(neg_c_label, Inference(Rule.OR_E, (major, left, right), BOT, lab), c)
    body, lm = _raa_parts(major)
    k2 = labels()
    inner = Inference(Rule.OR_E, (assume(disj, k2), left, right), BOT, lab)
    g = not_i(k2, inner, disj)
    return raa(neg_c_label, graft(body, lm, g, labels), c)


def _or_case(active):
    return lambda s, labels, swapped: _or_elim(s, labels, swapped, active)


def _imp_intro(s, labels, swapped):
    body, lab = _raa_parts(s.premises[0])
    imp = s.conclusion
    b = imp.right
    k1, k0, k3, k4 = labels(), labels(), labels(), labels()
    vacuous = Inference(Rule.IMP_I, (assume(b, k1),), imp, k0)
    g = not_i(k1, not_e(assume(Not(imp), k3), vacuous), b)                 # ¬B
    efq = raa(k4, graft(body, lab, g, labels), b)
    return raa(k3, not_e(assume(Not(imp), k3), _with_premises(s, efq)), imp)


def _exists_elim(s, labels, swapped, active):
    major, minor = s.premises
    ex = major.conclusion
    c = s.conclusion
    if 1 in active:
        minor, neg_c_label = _raa_parts(minor)
    else:
        neg_c_label = labels()
        minor = not_e(assume(Not(c), neg_c_label), minor)
    if 0 not in active:
        return raa(neg_c_label, replace(s, premises=(major, minor), conclusion=BOT), c)
    body, lm = _raa_parts(major)
    k2 = labels()
    inner = replace(s, premises=(assume(ex, k2), minor), conclusion=BOT)
    g = not_i(k2, inner, ex)
    return raa(neg_c_label, graft(body, lm, g, labels), c)


def _ex_case(active):
    return lambda s, labels, swapped: _exists_elim(s, labels, swapped, active)


def _negative_only(s, labels, swapped):
    raise InternalShapeError("this case needs reduce_at_negative")


_REDUCERS = {
    Case.NOT_INTRO: _not_intro,
    Case.RAA_BELOW: _raa_below,
    Case.EFQ_BELOW: _raa_below,
    Case.NOT_ELIM_MAJOR: _not_elim_major,
    Case.NOT_ELIM_MINOR: _not_elim_minor,
    Case.NOT_ELIM_BOTH: _not_elim_both,
    Case.AND_INTRO_LEFT: _binary_left,
    Case.AND_INTRO_RIGHT: _binary_right,
    Case.AND_INTRO_BOTH: _binary_both,
    Case.IMP_ELIM_MAJOR: _binary_left,
    Case.IMP_ELIM_MINOR: _binary_right,
    Case.IMP_ELIM_BOTH: _binary_both,
    Case.AND_ELIM1: _unary,
    Case.AND_ELIM2: _unary,
    Case.OR_INTRO1: _unary,
    Case.OR_INTRO2: _unary,
    Case.FORALL_ELIM: _unary,
    Case.EXISTS_INTRO: _unary,
    Case.OR_ELIM_MAJOR: _or_case(frozenset({0})),
    Case.OR_ELIM_LEFT: _or_case(frozenset({1})),
    Case.OR_ELIM_RIGHT: _or_case(frozenset({2})),
    Case.OR_ELIM_MINORS: _or_case(frozenset({1, 2})),
    Case.OR_ELIM_MAJOR_LEFT: _or_case(frozenset({0, 1})),
    Case.OR_ELIM_MAJOR_RIGHT: _or_case(frozenset({0, 2})),
    Case.OR_ELIM_ALL: _or_case(frozenset({0, 1, 2})),
    Case.IMP_INTRO: _imp_intro,
    Case.EXISTS_ELIM_MAJOR: _ex_case(frozenset({0})),
    Case.EXISTS_ELIM_MINOR: _ex_case(frozenset({1})),
    Case.EXISTS_ELIM_BOTH: _ex_case(frozenset({0, 1})),
    Case.IMP_INTRO_NEGATIVE: _negative_only,
    Case.FORALL_INTRO_NEGATIVE: _negative_only,
}
