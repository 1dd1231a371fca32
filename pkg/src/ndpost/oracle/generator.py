"""Seeded, goal-directed random derivations (propositional).

A goal formula is drawn first; each node then picks a rule able to
conclude its goal, introducing subgoals and, for binders, hypotheses
that leaves higher up may use.  At the depth limit a leaf is closed by a
matching hypothesis if one is in scope, else by an open assumption.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..kernel.check import check
from ..kernel.derivation import (
    Derivation, Rule, and_e1, and_e2, and_i, assume, imp_e, imp_i, not_e,
    not_i, or_e, or_i1, or_i2, raa, top_i,
)
from ..kernel.formula import BOT, TOP, And, Bot, Formula, Imp, Not, Or, Top, prop
from ..kernel.measure import raa_entries

NK_RULES = frozenset(Rule)
PROPOSITIONAL = frozenset(r for r in Rule if not r.value.startswith(("forall", "exists")))


class GenerationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorProfile:
    max_depth: int = 4
    atoms: tuple = ("P", "Q")
    rules: frozenset = field(default_factory=lambda: NK_RULES - {Rule.FORALL_I})
    raa_density: float = 0.3
    seed: int = 0
    min_raa: int | None = None
    discharging_raa: bool = True
    attempts: int = 200

    def __post_init__(self):
        object.__setattr__(self, "rules", frozenset(Rule(r) for r in self.rules))
        if not 0.0 <= self.raa_density <= 1.0:
            raise ValueError("raa_density must lie in [0, 1]")

    def required_raa(self) -> int:
        if self.min_raa is not None:
            return self.min_raa
        return 1 if Rule.RAA in self.rules and self.raa_density > 0 else 0

    @classmethod
    def parse(cls, spec: str, seed: int = 0) -> "GeneratorProfile":
        """Read ``key=value,...``: depth, atoms (P+Q), system (NM|NJ|NK),
        without (rule+rule), density, min_raa."""
        kw: dict = {"seed": seed}
        system, without = "NK", {Rule.FORALL_I}
        for part in filter(None, (p.strip() for p in spec.split(","))):
            key, _, value = part.partition("=")
            if key == "depth":
                kw["max_depth"] = int(value)
            elif key == "atoms":
                kw["atoms"] = tuple(value.split("+"))
            elif key == "system":
                system = value.upper()
            elif key == "without":
                without |= {Rule(v.replace("-", "_")) for v in value.split("+") if v}
            elif key == "density":
                kw["raa_density"] = float(value)
            elif key == "min_raa":
                kw["min_raa"] = int(value)
            else:
                raise ValueError(f"unknown profile key {key!r}")
        rules = set(NK_RULES) - without
        if system == "NM":
            rules.discard(Rule.RAA)
        elif system == "NJ":
            kw["discharging_raa"] = False
        elif system != "NK":
            raise ValueError(f"unknown system {system!r}")
        return cls(rules=frozenset(rules), **kw)


class _Gen:
    def __init__(self, profile: GeneratorProfile, rng: random.Random):
        self.p = profile
        self.rng = rng
        self.next_label = 1
        self.atoms = [prop(a) for a in profile.atoms]

    def label(self) -> int:
        k = self.next_label
        self.next_label += 1
        return k

    def allowed(self, r: Rule) -> bool:
        return r in self.p.rules

    def formula(self, depth: int) -> Formula:
        rng = self.rng
        if depth <= 0 or rng.random() < 0.35:
            return rng.choice(self.atoms + [BOT, TOP] if rng.random() < 0.15 else self.atoms)
        kind = rng.choice(("not", "and", "or", "imp"))
        if kind == "not":
            return Not(self.formula(depth - 1))
        cls = {"and": And, "or": Or, "imp": Imp}[kind]
        return cls(self.formula(depth - 1), self.formula(depth - 1))

    def leaf(self, goal, hyps):
        matching = [k for f, k in hyps if f == goal]
        if matching and self.rng.random() < 0.9:
            return assume(goal, self.rng.choice(matching))
        return assume(goal)

    def build(self, goal: Formula, depth: int, hyps: list) -> Derivation:
        if depth <= 0:
            return self.leaf(goal, hyps)
        rng = self.rng
        if any(f == goal for f, _ in hyps) and rng.random() < 0.25:
            return self.leaf(goal, hyps)
        if self.allowed(Rule.RAA) and not isinstance(goal, Bot) and rng.random() < self.p.raa_density:
            k = self.label()
            inner = hyps + [(Not(goal), k)] if self.p.discharging_raa else hyps
            return raa(k, self.build(BOT, depth - 1, inner), goal)
        options = self.options(goal, hyps)
        rng.shuffle(options)
        options.sort(key=lambda o: -o[0])
        for _, make in options:
            if rng.random() < 0.8:
                return make(depth - 1)
        if options:
            return options[0][1](depth - 1)
        return self.leaf(goal, hyps)

    def options(self, goal, hyps):
        """(priority, builder) pairs for every allowed rule fitting the goal."""
        rng, b, out = self.rng, self.build, []
        a = self.allowed
        if isinstance(goal, Top) and a(Rule.TOP_I):
            out.append((2, lambda d: top_i()))
        if isinstance(goal, Not) and a(Rule.NOT_I):
            def mk(d, g=goal):
                k = self.label()
                return not_i(k, b(BOT, d, hyps + [(g.body, k)]), g.body)
            out.append((2, mk))
        if isinstance(goal, And) and a(Rule.AND_I):
            out.append((2, lambda d, g=goal: and_i(b(g.left, d, hyps), b(g.right, d, hyps))))
        if isinstance(goal, Or):
            if a(Rule.OR_I1):
                out.append((1, lambda d, g=goal: or_i1(b(g.left, d, hyps), g.right)))
            if a(Rule.OR_I2):
                out.append((1, lambda d, g=goal: or_i2(g.left, b(g.right, d, hyps))))
        if isinstance(goal, Imp) and a(Rule.IMP_I):
            def mk(d, g=goal):
                k = self.label()
                return imp_i(k, g.left, b(g.right, d, hyps + [(g.left, k)]))
            out.append((2, mk))
        if isinstance(goal, Bot) and a(Rule.NOT_E):
            def mk(d):
                negs = [f.body for f, _ in hyps if isinstance(f, Not)]
                x = rng.choice(negs) if negs and rng.random() < 0.8 else self.formula(1)
                return not_e(b(Not(x), d, hyps), b(x, d, hyps))
            out.append((2, mk))
        if a(Rule.AND_E1):
            out.append((0, lambda d: and_e1(b(And(goal, self.formula(1)), d, hyps))))
        if a(Rule.AND_E2):
            out.append((0, lambda d: and_e2(b(And(self.formula(1), goal), d, hyps))))
        if a(Rule.IMP_E):
            def mk(d):
                x = self.formula(1)
                return imp_e(b(Imp(x, goal), d, hyps), b(x, d, hyps))
            out.append((0, mk))
        if a(Rule.OR_E):
            def mk(d):
                x, y = self.formula(1), self.formula(1)
                k = self.label()
                return or_e(k, b(Or(x, y), d, hyps),
                            b(goal, d, hyps + [(x, k)]), b(goal, d, hyps + [(y, k)]))
            out.append((0, mk))
        return out


def gen_derivation(profile: GeneratorProfile) -> Derivation:
    """A checked derivation drawn deterministically from ``profile``."""
    rng = random.Random(profile.seed)
    need = profile.required_raa()
    for _ in range(profile.attempts):
        g = _Gen(profile, rng)
        d = g.build(g.formula(2), profile.max_depth, [])
        if sum(1 for _ in raa_entries(d)) < need:
            continue
        check(d)
        return d
    raise GenerationExhausted(f"no derivation after {profile.attempts} attempts")
