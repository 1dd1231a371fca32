"""Driving the reductions to a standard derivation, with traces."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .kernel.check import check
from .kernel.derivation import Derivation, Labels, format_path
from .kernel.measure import maximal_raa, raa_entries, raa_report, uses_rule
from .rewrite.steps import find_redex, reduce_at


class PreconditionError(Exception):
    pass


class PreconditionForallIntro(PreconditionError):
    def __init__(self):
        super().__init__("precondition: forall_i present")


class PreconditionImpIntro(PreconditionError):
    def __init__(self):
        super().__init__("precondition: imp_i present")


class InvariantBreach(AssertionError):
    """A reduction broke one of its guarantees.  Indicates a bug."""


@dataclass(frozen=True)
class TraceStep:
    index: int
    case: str
    anchor: tuple
    size_raa: tuple
    size_raa_plus: tuple

    def __str__(self):
        a, b = self.size_raa
        c, d = self.size_raa_plus
        return (f"step {self.index}: case {self.case} at {format_path(self.anchor)}; "
                f"size_raa {a}→{b}; size_raa+ {c}→{d}")


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    final: Derivation | None = None

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "\n".join(str(s) for s in self.steps)


def _require(d: Derivation, no_imp: bool):
    check(d)
    if uses_rule(d, "forall_i"):
        raise PreconditionForallIntro()
    if no_imp and uses_rule(d, "imp_i"):
        raise PreconditionImpIntro()


def _run(d: Derivation, mode: str, verify: bool,
         labels: Labels | None) -> tuple[Derivation, ReductionTrace]:
    tracked = "discharging" if mode == "j" else "all"
    labels = labels or Labels.above(d)
    trace = ReductionTrace()
    judgment = check(d) if verify else None
    rep = raa_report(d)
    while (rep.size_raa_plus if mode == "j" else rep.size_raa) > 0:
        pos = maximal_raa(d, tracked)
        redex = find_redex(d, pos)
        d = reduce_at(d, redex, labels)
        new = raa_report(d)
        trace.steps.append(TraceStep(
            len(trace.steps) + 1, redex.case.value, redex.anchor,
            (rep.size_raa, new.size_raa), (rep.size_raa_plus, new.size_raa_plus)))
        if verify:
            before = rep.size_raa_plus if mode == "j" else rep.size_raa
            after = new.size_raa_plus if mode == "j" else new.size_raa
            if after >= before:
                raise InvariantBreach(f"tracked size did not decrease: {trace.steps[-1]}")
            if not check(d).within(judgment):
                raise InvariantBreach(f"judgment not preserved: {trace.steps[-1]}")
        rep = new
    trace.final = d
    return d, trace


def postpone_j(d: Derivation, verify: bool = True,
               labels: Labels | None = None) -> tuple[Derivation, ReductionTrace]:
    """Reduce until at most one discharging raa remains, as the last rule.

    Pass ``labels`` when the caller keeps drawing from the same source
    afterwards; by default a fresh one above d's labels is used.
    """
    _require(d, no_imp=False)
    return _run(d, "j", verify, labels)


def postpone_m(d: Derivation, verify: bool = True,
               labels: Labels | None = None) -> tuple[Derivation, ReductionTrace]:
    """Reduce until at most one raa remains, as the last rule.

    Needs a derivation without imp_i and forall_i.
    """
    _require(d, no_imp=True)
    return _run(d, "m", verify, labels)


@dataclass(frozen=True)
class ExploreResult:
    terminated: bool
    steps: int
    size_raa: int
    size_raa_plus: int
    final: Derivation

    def __str__(self):
        if self.terminated:
            return f"terminated({self.steps})"
        return f"fuel_exhausted(size_raa={self.size_raa}, size_raa+={self.size_raa_plus})"


def explore(d: Derivation, strategy: str = "maximal", fuel: int = 1000,
            seed: int = 0) -> ExploreResult:
    """Fire redexes at discharging raas until j-standard or out of fuel.

    ``maximal`` always picks a deepest one (leftmost on ties),
    ``innermost`` the leftmost one with no discharging raa above it, and
    ``random`` any of them, seeded.  This is an experiment: only the
    maximal strategy is known to terminate.
    """
    _require(d, no_imp=False)
    rng = random.Random(seed)
    labels = Labels.above(d)
    steps = 0
    while True:
        cands = [e for e in raa_entries(d) if e.discharging and e.position]
        if not cands:
            rep = raa_report(d)
            return ExploreResult(True, steps, rep.size_raa, rep.size_raa_plus, d)
        if steps >= fuel:
            rep = raa_report(d)
            return ExploreResult(False, steps, rep.size_raa, rep.size_raa_plus, d)
        if strategy == "maximal":
            pos = maximal_raa(d, "discharging")
        elif strategy == "innermost":
            pos = next(e.position for e in cands
                       if not any(o.position[:len(e.position)] == e.position
                                  and o.position != e.position for o in cands))
        elif strategy == "random":
            pos = rng.choice(cands).position
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        d = reduce_at(d, find_redex(d, pos), labels)
        check(d)
        steps += 1
