"""Distances, raa sizes, standard forms and system membership."""
from __future__ import annotations

from dataclasses import dataclass, field

from .derivation import Assume, Derivation, Path, Rule, label_counts, nodes


@dataclass(frozen=True)
class RaaEntry:
    position: Path
    distance: int
    discharging: bool


@dataclass(frozen=True)
class RaaReport:
    entries: tuple
    size_raa: int
    size_raa_plus: int

    def __str__(self):
        lines = [f"size_raa = {self.size_raa}", f"size_raa+ = {self.size_raa_plus}"]
        for e in self.entries:
            kind = "raa" if e.discharging else "efq"
            where = ".".join(map(str, e.position)) or "root"
            lines.append(f"  {kind} at {where}, distance {e.distance}")
        return "\n".join(lines)


def raa_entries(d: Derivation) -> list[RaaEntry]:
    counts = label_counts(d)
    out = []
    for path, n in nodes(d):
        if not isinstance(n, Assume) and n.rule is Rule.RAA:
            hits = counts.get(n.label, 0) if n.label is not None else 0
            out.append(RaaEntry(path, len(path), hits > 0))
    return out


def raa_report(d: Derivation) -> RaaReport:
    entries = raa_entries(d)
    return RaaReport(
        tuple(entries),
        sum(e.distance for e in entries),
        sum(e.distance for e in entries if e.discharging),
    )


def size_raa(d: Derivation) -> int:
    return raa_report(d).size_raa


def size_raa_plus(d: Derivation) -> int:
    return raa_report(d).size_raa_plus


@dataclass(frozen=True)
class StandardForm:
    j_standard: bool
    m_standard: bool


def standard_form(d: Derivation) -> StandardForm:
    rep = raa_report(d)
    return StandardForm(rep.size_raa_plus == 0, rep.size_raa == 0)


def standard_form_structural(d: Derivation) -> StandardForm:
    """Same flags computed from the definition rather than from sizes."""
    entries = raa_entries(d)
    rest = [e for e in entries if e.position != ()]
    m = not rest
    j = not any(e.discharging for e in rest)
    return StandardForm(j, m)


def maximal_raa(d: Derivation, mode: str = "all") -> Path | None:
    """Position of a maximal raa; ties go to the leftmost in premise order."""
    if mode not in ("all", "discharging"):
        raise ValueError(f"unknown mode {mode!r}")
    best = None
    for e in raa_entries(d):
        if mode == "discharging" and not e.discharging:
            continue
        # pre-order visits left branches first, so strict > keeps the leftmost
        if best is None or e.distance > best.distance:
            best = e
    return None if best is None else best.position


def uses_rule(d: Derivation, r) -> bool:
    if r == "discharging_raa":
        return any(e.discharging for e in raa_entries(d))
    r = Rule(r)
    return any(not isinstance(n, Assume) and n.rule is r for _, n in nodes(d))


_ALL = frozenset(Rule)


@dataclass(frozen=True)
class System:
    """NM, NJ or NK, possibly with some rules removed."""
    base: str
    without: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.base not in ("NM", "NJ", "NK"):
            raise ValueError(f"unknown system {self.base!r}")
        object.__setattr__(self, "without", frozenset(Rule(r) for r in self.without))

    def minus(self, *rules) -> "System":
        return System(self.base, self.without | {Rule(r) for r in rules})

    def __str__(self):
        if not self.without:
            return self.base
        return f"{self.base}∖{{{', '.join(sorted(r.value for r in self.without))}}}"

    def contains(self, d: Derivation) -> bool:
        counts = label_counts(d)
        for _, n in nodes(d):
            if isinstance(n, Assume):
                continue
            if n.rule in self.without:
                return False
            if n.rule is Rule.RAA:
                if self.base == "NM":
                    return False
                if self.base == "NJ" and n.label is not None and counts.get(n.label, 0):
                    return False
        return True


NM = System("NM")
NJ = System("NJ")
NK = System("NK")


def in_system(d: Derivation, system: System) -> bool:
    return system.contains(d)
