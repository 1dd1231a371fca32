"""Derivation trees and their construction helpers.

A derivation is a tree of ``Assume`` leaves and ``Inference`` nodes.
Discharge is by integer label: a binder (raa, not_i, imp_i, or_e,
exists_e) carries a label and the assumption leaves it discharges carry
the same label.  An raa binding no leaf is an efq.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum

from .formula import (
    BOT, TOP, And, Exists, Forall, Formula, Imp, Not, Or, Term, Var, all_vars,
    fresh_var, rename_free, subst, subst_term, term_vars,
)


class Rule(str, Enum):
    RAA = "raa"
    TOP_I = "top_i"
    NOT_I = "not_i"
    NOT_E = "not_e"
    AND_I = "and_i"
    AND_E1 = "and_e1"
    AND_E2 = "and_e2"
    OR_I1 = "or_i1"
    OR_I2 = "or_i2"
    OR_E = "or_e"
    IMP_I = "imp_i"
    IMP_E = "imp_e"
    FORALL_I = "forall_i"
    FORALL_E = "forall_e"
    EXISTS_I = "exists_i"
    EXISTS_E = "exists_e"

    def __str__(self):
        return self.value


BINDERS = frozenset({Rule.RAA, Rule.NOT_I, Rule.IMP_I, Rule.OR_E, Rule.EXISTS_E})
EIGEN_RULES = frozenset({Rule.FORALL_I, Rule.EXISTS_E})


@dataclass(frozen=True)
class Assume:
    formula: Formula
    label: int | None = None

    @property
    def conclusion(self) -> Formula:
        return self.formula

    @property
    def premises(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Inference:
    """One rule instance.

    ``label`` is the discharge label of binders.  ``term`` is the witness
    of forall_e / exists_i, ``target`` the existential formula introduced
    by exists_i, ``var`` the eigenvariable of forall_i / exists_e.
    """
    rule: Rule
    premises: tuple
    conclusion: Formula
    label: int | None = None
    term: Term | None = None
    target: Formula | None = None
    var: str | None = None


Derivation = Assume | Inference
Path = tuple[int, ...]


# ------------------------------------------------------------ constructors
#
# These compute the conclusion from the premises.  They do not validate;
# that is the checker's job.

def assume(f: Formula, label: int | None = None) -> Assume:
    return Assume(f, label)


def raa(label: int, d: Derivation, conclusion: Formula) -> Inference:
    return Inference(Rule.RAA, (d,), conclusion, label)


def top_i() -> Inference:
    return Inference(Rule.TOP_I, (), TOP)


def not_i(label: int, d: Derivation, discharged: Formula) -> Inference:
    return Inference(Rule.NOT_I, (d,), Not(discharged), label)


def not_e(major: Derivation, minor: Derivation) -> Inference:
    return Inference(Rule.NOT_E, (major, minor), BOT)


def and_i(left: Derivation, right: Derivation) -> Inference:
    return Inference(Rule.AND_I, (left, right), And(left.conclusion, right.conclusion))


def and_e1(d: Derivation) -> Inference:
    return Inference(Rule.AND_E1, (d,), d.conclusion.left)


def and_e2(d: Derivation) -> Inference:
    return Inference(Rule.AND_E2, (d,), d.conclusion.right)


def or_i1(d: Derivation, right: Formula) -> Inference:
    return Inference(Rule.OR_I1, (d,), Or(d.conclusion, right))


def or_i2(left: Formula, d: Derivation) -> Inference:
    return Inference(Rule.OR_I2, (d,), Or(left, d.conclusion))


def or_e(label: int, major: Derivation, left: Derivation, right: Derivation) -> Inference:
    return Inference(Rule.OR_E, (major, left, right), left.conclusion, label)


def imp_i(label: int, antecedent: Formula, d: Derivation) -> Inference:
    return Inference(Rule.IMP_I, (d,), Imp(antecedent, d.conclusion), label)


def imp_e(major: Derivation, minor: Derivation) -> Inference:
    return Inference(Rule.IMP_E, (major, minor), major.conclusion.right)


def forall_i(var: str, d: Derivation) -> Inference:
    return Inference(Rule.FORALL_I, (d,), Forall(var, d.conclusion), var=var)


def forall_e(d: Derivation, t: Term) -> Inference:
    q = d.conclusion
    return Inference(Rule.FORALL_E, (d,), subst(q.body, q.var, t), term=t)


def exists_i(target: Formula, t: Term, d: Derivation) -> Inference:
    return Inference(Rule.EXISTS_I, (d,), target, term=t, target=target)


def exists_e(label: int, var: str, major: Derivation, minor: Derivation) -> Inference:
    return Inference(Rule.EXISTS_E, (major, minor), minor.conclusion, label, var=var)


def exists_instance(q: Exists, var: str) -> Formula:
    """The formula an exists_e with eigenvariable ``var`` discharges."""
    return subst(q.body, q.var, Var(var))


def is_efq(d: Derivation) -> bool:
    return isinstance(d, Inference) and d.rule is Rule.RAA and count_label(d.premises[0], d.label) == 0


# ------------------------------------------------------------ traversal

def nodes(d: Derivation, path: Path = ()):
    """Yield (path, node) in pre-order, premises left to right."""
    stack = [(path, d)]
    while stack:
        p, n = stack.pop()
        yield p, n
        for i in range(len(n.premises) - 1, -1, -1):
            stack.append((p + (i,), n.premises[i]))


def subtree(d: Derivation, path: Path) -> Derivation:
    for i in path:
        d = d.premises[i]
    return d


def replace_at(d: Derivation, path: Path, new: Derivation) -> Derivation:
    if not path:
        return new
    i = path[0]
    prem = list(d.premises)
    prem[i] = replace_at(prem[i], path[1:], new)
    return replace(d, premises=tuple(prem))


def leaves(d: Derivation):
    for _, n in nodes(d):
        if isinstance(n, Assume):
            yield n


def count_label(d: Derivation, label: int | None) -> int:
    if label is None:
        return 0
    return sum(1 for leaf in leaves(d) if leaf.label == label)


def label_counts(d: Derivation) -> dict[int, int]:
    out: dict[int, int] = {}
    for leaf in leaves(d):
        if leaf.label is not None:
            out[leaf.label] = out.get(leaf.label, 0) + 1
    return out


def labels_in(d: Derivation) -> set[int]:
    out = set()
    for _, n in nodes(d):
        if n.label is not None:
            out.add(n.label)
    return out


def max_label(d: Derivation) -> int:
    return max(labels_in(d), default=0)


def depth(d: Derivation) -> int:
    if not d.premises:
        return 0
    return 1 + max(depth(p) for p in d.premises)


def count_nodes(d: Derivation) -> int:
    return sum(1 for _ in nodes(d))


def open_assumptions(d: Derivation) -> list[Assume]:
    """Leaves not discharged inside d (in left-to-right order)."""
    out = []
    _open(d, frozenset(), out)
    return out


def _open(d, bound, out):
    if isinstance(d, Assume):
        if d.label is None or d.label not in bound:
            out.append(d)
        return
    if d.rule in BINDERS and d.label is not None:
        if d.rule is Rule.OR_E:
            _open(d.premises[0], bound, out)
            inner = bound | {d.label}
            _open(d.premises[1], inner, out)
            _open(d.premises[2], inner, out)
            return
        if d.rule is Rule.EXISTS_E:
            _open(d.premises[0], bound, out)
            _open(d.premises[1], bound | {d.label}, out)
            return
        bound = bound | {d.label}
    for p in d.premises:
        _open(p, bound, out)


def open_formulas(d: Derivation) -> frozenset[Formula]:
    return frozenset(a.formula for a in open_assumptions(d))


def derivation_vars(d: Derivation) -> set[str]:
    """Every variable name mentioned anywhere in d."""
    out: set[str] = set()
    for _, n in nodes(d):
        out |= all_vars(n.conclusion)
        if isinstance(n, Inference):
            if n.var is not None:
                out.add(n.var)
            if n.term is not None:
                out |= term_vars(n.term)
            if n.target is not None:
                out |= all_vars(n.target)
    return out


def rules_used(d: Derivation) -> set[Rule]:
    return {n.rule for _, n in nodes(d) if isinstance(n, Inference)}


# ------------------------------------------------------------ labels

class Labels:
    """Fresh discharge labels: a strictly increasing counter.

    One source is created per top-level operation (above the largest
    label of its input) and handed explicitly to every helper that needs
    new labels.
    """

    def __init__(self, start: int = 1):
        self._it = itertools.count(start)

    @classmethod
    def above(cls, *ds: Derivation) -> "Labels":
        return cls(max((max_label(d) for d in ds), default=0) + 1)

    def fresh(self) -> int:
        return next(self._it)

    def __call__(self) -> int:
        return next(self._it)


def relabel(d: Derivation, labels: Labels, mapping: dict | None = None) -> Derivation:
    """Copy d giving every binder bound inside d a fresh label.

    Leaves whose label is bound outside d keep it.
    """
    mapping = dict(mapping or {})
    return _relabel(d, labels, mapping)


def _relabel(d, labels, mapping):
    if isinstance(d, Assume):
        if d.label is not None and d.label in mapping:
            return Assume(d.formula, mapping[d.label])
        return d
    if d.label is not None and d.rule in BINDERS:
        mapping = dict(mapping)
        mapping[d.label] = labels()
        new_label = mapping[d.label]
    else:
        new_label = d.label
    prem = tuple(_relabel(p, labels, mapping) for p in d.premises)
    return replace(d, premises=prem, label=new_label)


def canonical_labels(d: Derivation) -> Derivation:
    """Renumber binders 1, 2, ... in pre-order."""
    return relabel(d, Labels(1))


def rename_label(d: Derivation, old: int, new: int) -> Derivation:
    """Rename the leaves labelled ``old`` (the binder is not touched)."""
    if isinstance(d, Assume):
        return Assume(d.formula, new) if d.label == old else d
    prem = tuple(rename_label(p, old, new) for p in d.premises)
    return replace(d, premises=prem)


def discharge_none(d: Derivation, label: int) -> Derivation:
    """Turn the leaves labelled ``label`` into undischarged assumptions."""
    if isinstance(d, Assume):
        return Assume(d.formula, None) if d.label == label else d
    return replace(d, premises=tuple(discharge_none(p, label) for p in d.premises))


# ------------------------------------------------------------ variables

def rename_var(d: Derivation, old: str, new: str) -> Derivation:
    """Uniformly rename the free variable ``old`` to the unused name ``new``.

    Applied to formulas, witness terms, targets and eigenvariables.  With
    ``new`` fresh this is a bijective renaming and preserves validity.
    """
    if isinstance(d, Assume):
        return Assume(rename_free(d.formula, old, new), d.label)
    prem = tuple(rename_var(p, old, new) for p in d.premises)
    return replace(
        d,
        premises=prem,
        conclusion=rename_free(d.conclusion, old, new),
        term=None if d.term is None else subst_term(d.term, old, Var(new)),
        target=None if d.target is None else rename_free(d.target, old, new),
        var=new if d.var == old else d.var,
    )


# ------------------------------------------------------------ grafting

def graft(host: Derivation, label: int, repl: Derivation, labels: Labels) -> Derivation:
    """Replace every leaf of ``host`` labelled ``label`` by a copy of ``repl``.

    Each copy gets fresh binder labels.  Eigenvariables of binders in
    ``host`` that would capture a free variable of the open assumptions
    of ``repl`` are renamed first.
    """
    if label is None:
        return host
    bad = set()
    for a in open_assumptions(repl):
        bad |= a.formula.free_vars
    names = _Names(host, repl)
    return _graft(host, label, repl, labels, frozenset(bad), names, _holders(host, label))


class _Names:
    """Variable names already used by host and replacement, gathered on demand."""

    def __init__(self, *ds):
        self.ds = ds
        self.taken = None

    def fresh(self, base, avoid):
        if self.taken is None:
            self.taken = set().union(*(derivation_vars(d) for d in self.ds))
        new = fresh_var(base, self.taken | avoid)
        self.taken.add(new)
        return new


def _holders(d, label) -> set[int]:
    """ids of the subtrees of d containing a leaf labelled ``label``."""
    out: set[int] = set()

    def visit(n):
        if isinstance(n, Assume):
            hit = n.label == label
        else:
            hit = False
            for q in n.premises:
                hit = visit(q) or hit
        if hit:
            out.add(id(n))
        return hit

    visit(d)
    return out


def _graft(d, label, repl, labels, bad, names, holders):
    if isinstance(d, Assume):
        if d.label == label:
            return relabel(repl, labels)
        return d
    if id(d) not in holders:
        return d
    if d.rule in EIGEN_RULES and d.var in bad:
        new = names.fresh(d.var, bad)
        scope = 0 if d.rule is Rule.FORALL_I else 1
        prem = list(d.premises)
        prem[scope] = rename_var(prem[scope], d.var, new)
        holders = holders | _holders(prem[scope], label)
        if d.rule is Rule.FORALL_I:
            d = replace(d, premises=tuple(prem), var=new,
                        conclusion=Forall(new, prem[0].conclusion))
        else:
            d = replace(d, premises=tuple(prem), var=new)
    prem = tuple(_graft(p, label, repl, labels, bad, names, holders) for p in d.premises)
    return replace(d, premises=prem)


# ------------------------------------------------------------ comparison

def same_up_to_labels(a: Derivation, b: Derivation) -> bool:
    """Structural identity modulo a consistent renaming of binder labels."""
    return _same(a, b, {}, {})


def _same(a, b, ma, mb):
    if type(a) is not type(b):
        return False
    if isinstance(a, Assume):
        if a.formula != b.formula:
            return False
        la = ma.get(a.label, ("free", a.label))
        lb = mb.get(b.label, ("free", b.label))
        return la == lb
    if (a.rule is not b.rule or len(a.premises) != len(b.premises)
            or a.conclusion != b.conclusion or a.term != b.term
            or a.target != b.target):
        return False
    if a.rule in EIGEN_RULES and a.var != b.var:
        # eigenvariables may differ by a bijective renaming; compare after renaming b
        scope = 0 if a.rule is Rule.FORALL_I else 1
        prem = list(b.premises)
        prem[scope] = rename_var(prem[scope], b.var, a.var) if a.var not in derivation_vars(b) else prem[scope]
        if a.var in derivation_vars(b):
            return False
        b = replace(b, premises=tuple(prem), var=a.var)
    if a.label is not None and a.rule in BINDERS:
        if b.label is None:
            return False
        key = object()
        ma = {**ma, a.label: key}
        mb = {**mb, b.label: key}
    elif b.label is not None and b.rule in BINDERS:
        return False
    return all(_same(x, y, ma, mb) for x, y in zip(a.premises, b.premises))


def format_path(path: Path) -> str:
    return "root" if not path else ".".join(map(str, path))


def parse_path(text: str) -> Path:
    text = text.strip()
    if text in ("", "root"):
        return ()
    return tuple(int(x) for x in text.split("."))
