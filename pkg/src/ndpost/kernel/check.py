"""Validation of derivations against the rule schemas."""
from __future__ import annotations

from dataclasses import dataclass

from .derivation import (
    Assume, Derivation, Inference, Path, Rule, exists_instance, format_path,
)
from .formula import (
    And, Bot, Exists, Forall, Formula, Imp, Not, Or, Top, subst,
)


class CheckError(Exception):
    """A derivation violates a rule; ``position`` is the offending node."""

    def __init__(self, position: Path, message: str):
        self.position = tuple(position)
        self.message = message
        super().__init__(f"{message} (at {format_path(self.position)})")


class SchemaMismatch(CheckError):
    pass


class BadDischarge(CheckError):
    pass


class EigenvariableViolation(CheckError):
    pass


class UnboundLabel(CheckError):
    pass


class AnnotationMismatch(CheckError):
    pass


@dataclass(frozen=True)
class Judgment:
    assumptions: frozenset
    conclusion: Formula

    def __str__(self):
        gamma = ", ".join(sorted(str(a) for a in self.assumptions))
        return f"{gamma} ⊢ {self.conclusion}" if gamma else f"⊢ {self.conclusion}"

    def within(self, other: "Judgment") -> bool:
        """Same conclusion and assumptions included in ``other``'s."""
        return self.conclusion == other.conclusion and self.assumptions <= other.assumptions


def check(d: Derivation) -> Judgment:
    """Validate every node of d and return its exact judgment."""
    open_leaves = _Checker().walk(d, (), frozenset())
    return Judgment(frozenset(a.formula for a in open_leaves), d.conclusion)


def is_valid(d: Derivation) -> bool:
    try:
        check(d)
    except CheckError:
        return False
    return True


def _expect(cond: bool, path, message, exc=SchemaMismatch):
    """Raise ``exc`` unless cond; ``message`` may be a thunk, built only on failure."""
    if not cond:
        raise exc(path, message() if callable(message) else message)


def _shape(f, kind, path, what):
    if not isinstance(f, kind):
        raise SchemaMismatch(path, lambda: f"{what} must be {kind.__name__}, got {f}")
    return f


_ARITY = {
    Rule.RAA: 1, Rule.TOP_I: 0, Rule.NOT_I: 1, Rule.NOT_E: 2, Rule.AND_I: 2,
    Rule.AND_E1: 1, Rule.AND_E2: 1, Rule.OR_I1: 1, Rule.OR_I2: 1, Rule.OR_E: 3,
    Rule.IMP_I: 1, Rule.IMP_E: 2, Rule.FORALL_I: 1, Rule.FORALL_E: 1,
    Rule.EXISTS_I: 1, Rule.EXISTS_E: 2,
}


class _Checker:
    def __init__(self):
        self.seen: set[int] = set()

    def walk(self, d: Derivation, path: Path, bound: frozenset) -> list[Assume]:
        """Check d; return its leaves not discharged inside d."""
        if isinstance(d, Assume):
            if d.label is not None and d.label not in bound:
                raise UnboundLabel(path, f"label {d.label} is not bound by an enclosing rule")
            return [d]
        if not isinstance(d, Inference):
            raise TypeError(f"not a derivation node: {d!r}")
        r = d.rule
        _expect(len(d.premises) == _ARITY[r], path,
                lambda: f"{r} takes {_ARITY[r]} premises, got {len(d.premises)}")
        label = d.label
        if label is not None:
            if r not in (Rule.RAA, Rule.NOT_I, Rule.IMP_I, Rule.OR_E, Rule.EXISTS_E):
                raise SchemaMismatch(path, f"{r} does not discharge")
            if label in self.seen:
                raise BadDischarge(path, f"label {label} is bound twice")
            self.seen.add(label)
        inner = bound | {label} if label is not None else bound
        p = d.premises
        c = d.conclusion

        if r is Rule.OR_E:
            major = self.walk(p[0], path + (0,), bound)
            left = self.walk(p[1], path + (1,), inner)
            right = self.walk(p[2], path + (2,), inner)
        elif r is Rule.EXISTS_E:
            major = self.walk(p[0], path + (0,), bound)
            minor = self.walk(p[1], path + (1,), inner)
        else:
            subs = [self.walk(q, path + (i,), inner) for i, q in enumerate(p)]

        def discharge(leaves, formula, where):
            kept = []
            for a in leaves:
                if label is not None and a.label == label:
                    if a.formula != formula:
                        raise BadDischarge(
                            path, f"{r} discharges {formula} but {where} assumption is {a.formula}")
                else:
                    kept.append(a)
            return kept

        if r is Rule.RAA:
            _shape(p[0].conclusion, Bot, path, "raa premise")
            return discharge(subs[0], Not(c), "an")
        if r is Rule.TOP_I:
            _shape(c, Top, path, "top_i conclusion")
            return []
        if r is Rule.NOT_I:
            _shape(p[0].conclusion, Bot, path, "not_i premise")
            _shape(c, Not, path, "not_i conclusion")
            return discharge(subs[0], c.body, "an")
        if r is Rule.NOT_E:
            maj = _shape(p[0].conclusion, Not, path, "not_e major premise")
            _expect(maj.body == p[1].conclusion, path,
                    lambda: f"not_e minor {p[1].conclusion} is not the body of major {maj}")
            _shape(c, Bot, path, "not_e conclusion")
            return subs[0] + subs[1]
        if r is Rule.AND_I:
            _expect(c == And(p[0].conclusion, p[1].conclusion), path,
                    lambda: f"and_i conclusion {c} does not match premises")
            return subs[0] + subs[1]
        if r in (Rule.AND_E1, Rule.AND_E2):
            f = _shape(p[0].conclusion, And, path, f"{r} premise")
            want = f.left if r is Rule.AND_E1 else f.right
            _expect(c == want, path, lambda: f"{r} conclusion {c} should be {want}")
            return subs[0]
        if r in (Rule.OR_I1, Rule.OR_I2):
            f = _shape(c, Or, path, f"{r} conclusion")
            part = f.left if r is Rule.OR_I1 else f.right
            _expect(part == p[0].conclusion, path,
                    lambda: f"{r} premise {p[0].conclusion} is not a disjunct of {c}")
            return subs[0]
        if r is Rule.OR_E:
            f = _shape(p[0].conclusion, Or, path, "or_e major premise")
            _expect(p[1].conclusion == c and p[2].conclusion == c, path,
                    "or_e minor premises must both conclude the conclusion")
            return (major + discharge(left, f.left, "a left")
                    + discharge(right, f.right, "a right"))
        if r is Rule.IMP_I:
            f = _shape(c, Imp, path, "imp_i conclusion")
            _expect(f.right == p[0].conclusion, path,
                    lambda: f"imp_i premise {p[0].conclusion} should be {f.right}")
            return discharge(subs[0], f.left, "an")
        if r is Rule.IMP_E:
            f = _shape(p[0].conclusion, Imp, path, "imp_e major premise")
            _expect(f.left == p[1].conclusion, path,
                    lambda: f"imp_e minor {p[1].conclusion} should be {f.left}")
            _expect(f.right == c, path, lambda: f"imp_e conclusion {c} should be {f.right}")
            return subs[0] + subs[1]
        if r is Rule.FORALL_I:
            _expect(d.var is not None, path, "forall_i needs an eigenvariable", AnnotationMismatch)
            _expect(c == Forall(d.var, p[0].conclusion), path,
                    lambda: f"forall_i conclusion {c} should be ∀{d.var}.{p[0].conclusion}",
                    AnnotationMismatch)
            for a in subs[0]:
                if d.var in a.formula.free_vars:
                    raise EigenvariableViolation(
                        path, f"{d.var} is free in open assumption {a.formula}")
            return subs[0]
        if r is Rule.FORALL_E:
            f = _shape(p[0].conclusion, Forall, path, "forall_e premise")
            _expect(d.term is not None, path, "forall_e needs a witness term", AnnotationMismatch)
            _expect(c == subst(f.body, f.var, d.term), path,
                    lambda: f"forall_e conclusion {c} is not the instance at {d.term}",
                    AnnotationMismatch)
            return subs[0]
        if r is Rule.EXISTS_I:
            _expect(d.term is not None and d.target is not None, path,
                    "exists_i needs a target and a witness", AnnotationMismatch)
            t = _shape(d.target, Exists, path, "exists_i target")
            _expect(c == t, path, lambda: f"exists_i conclusion {c} differs from target {t}",
                    AnnotationMismatch)
            _expect(p[0].conclusion == subst(t.body, t.var, d.term), path,
                    lambda: f"exists_i premise {p[0].conclusion} is not the instance at {d.term}",
                    AnnotationMismatch)
            return subs[0]
        if r is Rule.EXISTS_E:
            f = _shape(p[0].conclusion, Exists, path, "exists_e major premise")
            _expect(d.var is not None, path, "exists_e needs an eigenvariable", AnnotationMismatch)
            _expect(p[1].conclusion == c, path, "exists_e minor must conclude the conclusion")
            y = d.var
            if y in c.free_vars:
                raise EigenvariableViolation(path, lambda: f"{y} is free in the conclusion {c}")
            if y in f.free_vars:
                raise EigenvariableViolation(path, f"{y} is free in {f}")
            rest = discharge(minor, exists_instance(f, y), "an")
            for a in rest:
                if y in a.formula.free_vars:
                    raise EigenvariableViolation(
                        path, f"{y} is free in open assumption {a.formula}")
            return major + rest
        raise SchemaMismatch(path, f"unknown rule {r}")
