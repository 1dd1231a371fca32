"""First-order terms and formulas.

Formulas compare equal (and hash) up to renaming of bound variables.
Terms compare structurally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property


# ---------------------------------------------------------------- terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Fun:
    name: str
    args: tuple = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self):
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(map(str, self.args))})"


Term = Var | Fun


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    out: set[str] = set()
    for a in t.args:
        out |= term_vars(a)
    return frozenset(out)


def subst_term(t: Term, var: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == var else t
    return Fun(t.name, tuple(subst_term(a, var, s) for a in t.args))


# ---------------------------------------------------------------- formulas

class Formula:
    """Base class.  Equality is alpha-equivalence."""

    __slots__ = ()

    @cached_property
    def canon(self):
        return _canon(self, {}, 0)

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return _free_vars(self)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Formula):
            return NotImplemented
        return self.canon == other.canon

    def __hash__(self):
        return hash(self.canon)

    def __str__(self):
        return pretty(self)


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    pred: str
    args: tuple = ()

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True, eq=False)
class Bot(Formula):
    pass


@dataclass(frozen=True, eq=False)
class Top(Formula):
    pass


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, eq=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True, eq=False)
class Exists(Formula):
    var: str
    body: Formula


BOT = Bot()
TOP = Top()

BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)


def prop(name: str) -> Atom:
    return Atom(name, ())


def _canon_term(t: Term, env: dict, depth: int):
    if isinstance(t, Var):
        if t.name in env:
            return ("#", depth - env[t.name])
        return ("v", t.name)
    return ("f", t.name, tuple(_canon_term(a, env, depth) for a in t.args))


def _canon(f: Formula, env: dict, depth: int):
    # de Bruijn style key; bound variables become binder distances
    if isinstance(f, Atom):
        return ("P", f.pred, tuple(_canon_term(a, env, depth) for a in f.args))
    if isinstance(f, Bot):
        return ("bot",)
    if isinstance(f, Top):
        return ("top",)
    if isinstance(f, Not):
        if not env:
            return ("not", f.body.canon)
        return ("not", _canon(f.body, env, depth))
    if isinstance(f, BINARY):
        tag = type(f).__name__
        if not env:
            return (tag, f.left.canon, f.right.canon)
        return (tag, _canon(f.left, env, depth), _canon(f.right, env, depth))
    if isinstance(f, QUANTIFIERS):
        inner = dict(env)
        inner[f.var] = depth + 1
        return (type(f).__name__, _canon(f.body, inner, depth + 1))
    raise TypeError(f"not a formula: {f!r}")


def _free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        out: frozenset[str] = frozenset()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, (Bot, Top)):
        return frozenset()
    if isinstance(f, Not):
        return f.body.free_vars
    if isinstance(f, BINARY):
        return f.left.free_vars | f.right.free_vars
    if isinstance(f, QUANTIFIERS):
        return f.body.free_vars - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def free_vars(f: Formula) -> frozenset[str]:
    return f.free_vars


def all_vars(f: Formula) -> frozenset[str]:
    """Every variable name occurring in f, free or bound."""
    if isinstance(f, Atom):
        out: frozenset[str] = frozenset()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, (Bot, Top)):
        return frozenset()
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, BINARY):
        return all_vars(f.left) | all_vars(f.right)
    return all_vars(f.body) | {f.var}


def fresh_var(base: str, avoid) -> str:
    if base not in avoid:
        return base
    stem = base.rstrip("0123456789") or "v"
    for i in itertools.count(1):
        cand = f"{stem}{i}"
        if cand not in avoid:
            return cand


def subst(f: Formula, var: str, t: Term) -> Formula:
    """Capture-avoiding substitution of t for the free occurrences of var."""
    if var not in f.free_vars:
        return f
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(subst_term(a, var, t) for a in f.args))
    if isinstance(f, Not):
        return Not(subst(f.body, var, t))
    if isinstance(f, BINARY):
        return type(f)(subst(f.left, var, t), subst(f.right, var, t))
    if isinstance(f, QUANTIFIERS):
        tv = term_vars(t)
        if f.var in tv:
            new = fresh_var(f.var, tv | all_vars(f.body) | {var})
            body = subst(f.body, f.var, Var(new))
            return type(f)(new, subst(body, var, t))
        return type(f)(f.var, subst(f.body, var, t))
    return f


def alpha_eq(a: Formula, b: Formula) -> bool:
    return a.canon == b.canon


def rename_free(f: Formula, old: str, new: str) -> Formula:
    return subst(f, old, Var(new))


def contains(f: Formula, kinds) -> bool:
    """True if a node of one of the given classes occurs in f."""
    if isinstance(f, kinds):
        return True
    if isinstance(f, Not):
        return contains(f.body, kinds)
    if isinstance(f, BINARY):
        return contains(f.left, kinds) or contains(f.right, kinds)
    if isinstance(f, QUANTIFIERS):
        return contains(f.body, kinds)
    return False


def is_propositional(f: Formula) -> bool:
    if isinstance(f, Atom):
        return not f.args
    if isinstance(f, (Bot, Top)):
        return True
    if isinstance(f, Not):
        return is_propositional(f.body)
    if isinstance(f, BINARY):
        return is_propositional(f.left) and is_propositional(f.right)
    return False


def size(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + size(f.body)
    if isinstance(f, BINARY):
        return 1 + size(f.left) + size(f.right)
    if isinstance(f, QUANTIFIERS):
        return 1 + size(f.body)
    return 1


# ---------------------------------------------------------------- printing

_PREC = {Imp: 1, Or: 2, And: 3}

_SYMBOLS = {
    True: {"bot": "⊥", "top": "⊤", "not": "¬", And: " ∧ ", Or: " ∨ ", Imp: " → ",
           Forall: "∀", Exists: "∃"},
    False: {"bot": "_|_", "top": "T", "not": "~", And: " & ", Or: " | ", Imp: " -> ",
            Forall: "A", Exists: "E"},
}


def pretty(f: Formula, unicode: bool = True) -> str:
    return _pretty(f, _SYMBOLS[unicode], 0)


def _pretty(f, sym, ctx):
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({', '.join(map(str, f.args))})"
    if isinstance(f, Bot):
        return sym["bot"]
    if isinstance(f, Top):
        return sym["top"]
    if isinstance(f, Not):
        return sym["not"] + _pretty(f.body, sym, 4)
    if isinstance(f, QUANTIFIERS):
        s = f"{sym[type(f)]}{f.var}." + _pretty(f.body, sym, 4)
        return f"({s})" if ctx > 0 and ctx < 4 else s
    p = _PREC[type(f)]
    # implication associates to the right, the others are parenthesised
    lp = p + 1
    rp = p if isinstance(f, Imp) else p + 1
    s = _pretty(f.left, sym, lp) + sym[type(f)] + _pretty(f.right, sym, rp)
    return f"({s})" if ctx > p else s
