"""Property checks for postponement over generated derivations."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .kernel.check import check
from .kernel.derivation import Rule
from .kernel.formula import is_propositional
from .kernel.measure import standard_form
from .oracle.decide import classical_valid
from .oracle.generator import GeneratorProfile, gen_derivation
from .strategy import postpone_j, postpone_m


@dataclass
class StressSummary:
    mode: str
    count: int
    passed: int = 0
    steps: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.count

    def __str__(self):
        head = (f"mode {self.mode}: {self.passed}/{self.count} passed, "
                f"{self.steps} reduction steps")
        return "\n".join([head] + [f"  seed {s}: {m}" for s, m in self.failures])


def postponement_failure(d, mode: str, stats: dict | None = None) -> str | None:
    """None when postponement of d meets every guarantee, else a reason."""
    before = check(d)
    run = postpone_j if mode == "j" else postpone_m
    out, trace = run(d, verify=False)
    if stats is not None:
        stats["steps"] = stats.get("steps", 0) + len(trace)
    after = check(out)
    if after.conclusion != before.conclusion:
        return "conclusion changed"
    if not after.assumptions <= before.assumptions:
        return "assumptions grew"
    sf = standard_form(out)
    if not (sf.j_standard if mode == "j" else sf.m_standard):
        return f"output is not {mode}-standard"
    for s in trace.steps:
        a, b = s.size_raa_plus if mode == "j" else s.size_raa
        if b >= a:
            return f"size did not decrease at {s}"
    if not before.assumptions and is_propositional(before.conclusion):
        if not classical_valid(before.conclusion):
            return "closed conclusion is not a tautology"
    return None


def split_profile(spec: str) -> tuple[str, str]:
    """Pull ``mode=j|m`` out of a profile spec."""
    mode, rest = "j", []
    for part in filter(None, (p.strip() for p in spec.split(","))):
        if part.startswith("mode="):
            mode = part.split("=", 1)[1]
        else:
            rest.append(part)
    if mode not in ("j", "m"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode, ",".join(rest)


def profile_for(mode: str, spec: str, seed: int) -> GeneratorProfile:
    p = GeneratorProfile.parse(spec, seed)
    if mode == "m":
        p = replace(p, rules=p.rules - {Rule.IMP_I})
    return p


def run_stress(seed: int, count: int, spec: str = "") -> StressSummary:
    mode, rest = split_profile(spec)
    summary = StressSummary(mode, count)
    stats: dict = {}
    for s in range(seed, seed + count):
        d = gen_derivation(profile_for(mode, rest, s))
        try:
            reason = postponement_failure(d, mode, stats)
        except Exception as e:  # report, do not stop the run
            reason = f"{type(e).__name__}: {e}"
        if reason is None:
            summary.passed += 1
        else:
            summary.failures.append((s, reason))
    summary.steps = stats.get("steps", 0)
    return summary
