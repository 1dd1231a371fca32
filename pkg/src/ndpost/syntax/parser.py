"""S-expression reader for formulas (.ndf) and derivations (.nd).

Comments run from ';' to the end of the line.  Error spans are byte
offsets into the UTF-8 encoded input.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..kernel.derivation import (
    Assume, Derivation, Inference, Rule, leaves,
)
from ..kernel.formula import (
    BOT, TOP, And, Atom, Exists, Forall, Formula, Fun, Imp, Not, Or, Term, Var,
    subst,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start after end")

    def __str__(self):
        return f"{self.start}..{self.end}"


class ParseError(Exception):
    def __init__(self, span: SourceSpan, message: str):
        self.span = span
        self.message = message
        super().__init__(f"{message} at bytes {span}")


class ArityMismatch(ParseError):
    pass


@dataclass
class _Atom:
    text: str
    span: SourceSpan


@dataclass
class _List:
    items: list
    span: SourceSpan


def _read(text: str):
    """Read exactly one s-expression from text."""
    data = text.encode("utf-8")
    # work on bytes so that spans are byte offsets
    pos = 0
    stack: list[tuple[int, list]] = []
    result = None
    while pos < len(data):
        m = _TOKEN.match(data, pos)
        start, end = m.start(), m.end()
        chunk = m.group()
        pos = end
        if chunk[:1].isspace() or chunk.startswith(b";"):
            continue
        if chunk == b"(":
            stack.append((start, []))
            continue
        if chunk == b")":
            if not stack:
                raise ParseError(SourceSpan(start, end), "unbalanced ')'")
            s, items = stack.pop()
            node = _List(items, SourceSpan(s, end))
        else:
            node = _Atom(chunk.decode("utf-8"), SourceSpan(start, end))
        if stack:
            stack[-1][1].append(node)
        elif result is None:
            result = node
        else:
            raise ParseError(node.span, "trailing input after the first expression")
    if stack:
        s, _ = stack[-1]
        raise ParseError(SourceSpan(s, len(data)), "unclosed '('")
    if result is None:
        raise ParseError(SourceSpan(len(data), len(data)), "empty input")
    return result


_TOKEN = re.compile(rb"\s+|;[^\n]*|\(|\)|[^\s();]+")
_LABEL = re.compile(r"[0-9]+\Z")


class _Reader:
    def __init__(self):
        self.preds: dict[str, int] = {}
        self.funs: dict[str, int] = {}

    # -- helpers
    def _head(self, node, what):
        if not isinstance(node, _List) or not node.items:
            raise ParseError(node.span, f"expected {what}")
        head = node.items[0]
        if not isinstance(head, _Atom):
            raise ParseError(head.span, f"expected a keyword for {what}")
        return head.text, node.items[1:]

    def _name(self, node, what):
        if not isinstance(node, _Atom) or _LABEL.match(node.text):
            raise ParseError(node.span, f"expected {what}")
        return node.text

    def _label(self, node):
        if not isinstance(node, _Atom) or not _LABEL.match(node.text):
            raise ParseError(node.span, "expected a discharge label")
        return int(node.text)

    def _arity(self, table, name, n, span, kind):
        old = table.setdefault(name, n)
        if old != n:
            raise ArityMismatch(span, f"{kind} {name} used with arity {n} and {old}")

    def _count(self, node, args, n, what):
        if len(args) != n:
            raise ParseError(node.span, f"{what} expects {n} arguments, got {len(args)}")

    # -- terms and formulas
    def term(self, node) -> Term:
        if isinstance(node, _Atom):
            return Var(self._name(node, "a variable"))
        head, args = self._head(node, "a term")
        if head != "fun" or not args:
            raise ParseError(node.span, "expected a variable or (fun NAME term*)")
        name = self._name(args[0], "a function symbol")
        ts = tuple(self.term(a) for a in args[1:])
        self._arity(self.funs, name, len(ts), node.span, "function")
        return Fun(name, ts)

    def formula(self, node) -> Formula:
        if isinstance(node, _Atom):
            if node.text == "bot":
                return BOT
            if node.text == "top":
                return TOP
            raise ParseError(node.span, f"unexpected token {node.text!r} where a formula was expected")
        head, args = self._head(node, "a formula")
        if head == "pred":
            if not args:
                raise ParseError(node.span, "pred needs a name")
            name = self._name(args[0], "a predicate symbol")
            ts = tuple(self.term(a) for a in args[1:])
            self._arity(self.preds, name, len(ts), node.span, "predicate")
            return Atom(name, ts)
        if head == "not":
            self._count(node, args, 1, "not")
            return Not(self.formula(args[0]))
        if head in ("and", "or", "imp"):
            self._count(node, args, 2, head)
            cls = {"and": And, "or": Or, "imp": Imp}[head]
            return cls(self.formula(args[0]), self.formula(args[1]))
        if head in ("forall", "exists"):
            self._count(node, args, 2, head)
            var = self._name(args[0], "a bound variable")
            cls = Forall if head == "forall" else Exists
            return cls(var, self.formula(args[1]))
        raise ParseError(node.items[0].span, f"unknown formula keyword {head!r}")

    # -- derivations
    def deriv(self, node) -> Derivation:
        head, args = self._head(node, "a derivation")
        if head == "assume":
            if len(args) == 2:
                return Assume(self.formula(args[1]), self._label(args[0]))
            self._count(node, args, 1, "assume")
            return Assume(self.formula(args[0]))
        if head in ("raa", "not-i"):
            if len(args) not in (2, 3):
                raise ParseError(node.span, f"{head} expects a label, an optional formula and a derivation")
            label = self._label(args[0])
            given = self.formula(args[1]) if len(args) == 3 else None
            d = self.deriv(args[-1])
            found = next((a.formula for a in leaves(d) if a.label == label), None)
            if head == "raa":
                if given is None:
                    if not isinstance(found, Not):
                        raise ParseError(node.span, "raa binding no ¬-assumption needs its conclusion")
                    given = found.body
                return Inference(Rule.RAA, (d,), given, label)
            if given is None:
                if found is None:
                    raise ParseError(node.span, "vacuous not-i needs the discharged formula")
                given = found
            return Inference(Rule.NOT_I, (d,), Not(given), label)
        if head == "top-i":
            self._count(node, args, 0, "top-i")
            return Inference(Rule.TOP_I, (), TOP)
        if head in ("not-e", "and-i", "imp-e"):
            self._count(node, args, 2, head)
            a, b = self.deriv(args[0]), self.deriv(args[1])
            if head == "not-e":
                return Inference(Rule.NOT_E, (a, b), BOT)
            if head == "and-i":
                return Inference(Rule.AND_I, (a, b), And(a.conclusion, b.conclusion))
            c = a.conclusion
            if not isinstance(c, Imp):
                raise ParseError(args[0].span, f"imp-e major premise concludes {c}, not an implication")
            return Inference(Rule.IMP_E, (a, b), c.right)
        if head in ("and-e1", "and-e2"):
            self._count(node, args, 1, head)
            a = self.deriv(args[0])
            c = a.conclusion
            if not isinstance(c, And):
                raise ParseError(args[0].span, f"{head} premise concludes {c}, not a conjunction")
            rule = Rule.AND_E1 if head == "and-e1" else Rule.AND_E2
            return Inference(rule, (a,), c.left if head == "and-e1" else c.right)
        if head in ("or-i1", "or-i2"):
            self._count(node, args, 2, head)
            other = self.formula(args[0])
            a = self.deriv(args[1])
            if head == "or-i1":
                return Inference(Rule.OR_I1, (a,), Or(a.conclusion, other))
            return Inference(Rule.OR_I2, (a,), Or(other, a.conclusion))
        if head == "or-e":
            self._count(node, args, 4, head)
            label = self._label(args[0])
            ds = tuple(self.deriv(x) for x in args[1:])
            return Inference(Rule.OR_E, ds, ds[1].conclusion, label)
        if head == "imp-i":
            self._count(node, args, 3, head)
            label = self._label(args[0])
            ante = self.formula(args[1])
            a = self.deriv(args[2])
            return Inference(Rule.IMP_I, (a,), Imp(ante, a.conclusion), label)
        if head == "forall-i":
            self._count(node, args, 2, head)
            var = self._name(args[0], "an eigenvariable")
            a = self.deriv(args[1])
            return Inference(Rule.FORALL_I, (a,), Forall(var, a.conclusion), var=var)
        if head == "forall-e":
            self._count(node, args, 2, head)
            t = self.term(args[0])
            a = self.deriv(args[1])
            c = a.conclusion
            if not isinstance(c, Forall):
                raise ParseError(args[1].span, f"forall-e premise concludes {c}, not a universal")
            return Inference(Rule.FORALL_E, (a,), subst(c.body, c.var, t), term=t)
        if head == "exists-i":
            self._count(node, args, 3, head)
            target = self.formula(args[0])
            t = self.term(args[1])
            a = self.deriv(args[2])
            return Inference(Rule.EXISTS_I, (a,), target, term=t, target=target)
        if head == "exists-e":
            self._count(node, args, 4, head)
            label = self._label(args[0])
            var = self._name(args[1], "an eigenvariable")
            major, minor = self.deriv(args[2]), self.deriv(args[3])
            return Inference(Rule.EXISTS_E, (major, minor), minor.conclusion, label, var=var)
        raise ParseError(node.items[0].span, f"unknown rule keyword {head!r}")


def parse_formula(text: str) -> Formula:
    return _Reader().formula(_read(text))


def parse_term(text: str) -> Term:
    return _Reader().term(_read(text))


def parse_derivation(text: str) -> Derivation:
    return _Reader().deriv(_read(text))
