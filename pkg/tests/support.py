"""Shared helpers for the test suite."""
from pathlib import Path

from hypothesis import strategies as st

from ndpost.kernel.formula import (
    BOT, TOP, And, Atom, Exists, Forall, Fun, Imp, Not, Or, Var,
)
from ndpost.syntax import parse_derivation, parse_formula

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def load(rel: str):
    return parse_derivation((CORPUS / rel).read_text(encoding="utf-8"))


def corpus_files(sub: str):
    return sorted((CORPUS / sub).glob("*.nd"))


def f(text: str):
    return parse_formula(text)


def expected_error(path: Path) -> str:
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("; expect:"):
            return line.split(":", 1)[1].strip()
    raise ValueError(f"{path} has no expect line")


# hypothesis strategies for first-order formulas over x, y, z
names = st.sampled_from(["x", "y", "z"])
terms = st.recursive(
    names.map(Var) | st.just(Fun("c", ())),
    lambda t: st.builds(lambda a: Fun("f", (a,)), t),
    max_leaves=3,
)
atoms = st.one_of(
    st.builds(lambda t: Atom("P", (t,)), terms),
    st.builds(lambda a, b: Atom("R", (a, b)), terms, terms),
    st.just(BOT), st.just(TOP),
)
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(And, sub, sub), st.builds(Or, sub, sub), st.builds(Imp, sub, sub),
        st.builds(Forall, names, sub), st.builds(Exists, names, sub),
    ),
    max_leaves=8,
)


# ---------------------------------------------------------------- fuzzing

def _instantiate(fm, table):
    """Uniformly replace 0-ary atoms by the first-order atoms in ``table``."""
    from dataclasses import replace
    if isinstance(fm, Atom):
        return table.get(fm.pred, fm) if not fm.args else fm
    if isinstance(fm, Not):
        return Not(_instantiate(fm.body, table))
    if isinstance(fm, (And, Or, Imp)):
        return type(fm)(_instantiate(fm.left, table), _instantiate(fm.right, table))
    if isinstance(fm, (Forall, Exists)):
        return replace(fm, body=_instantiate(fm.body, table))
    return fm


def instantiate_derivation(d, table):
    from dataclasses import replace
    from ndpost.kernel import Assume
    if isinstance(d, Assume):
        return replace(d, formula=_instantiate(d.formula, table))
    return replace(
        d,
        premises=tuple(instantiate_derivation(p, table) for p in d.premises),
        conclusion=_instantiate(d.conclusion, table),
        target=_instantiate(d.target, table) if d.target is not None else None,
    )


def fuzz_derivation(seed: int):
    """A checked derivation for round-trip fuzzing: a generated propositional
    derivation, its atoms instantiated by first-order atoms, then wrapped in
    quantifier rules when the conclusion allows it."""
    import random

    from ndpost.kernel import check, exists_i, forall_i, open_assumptions
    from ndpost.oracle.generator import GeneratorProfile, gen_derivation

    rng = random.Random(seed)
    system = rng.choice(["NK", "NJ", "NM"])
    prof = GeneratorProfile.parse(f"system={system},depth={rng.randint(1, 5)}", seed)
    d = gen_derivation(prof)
    if rng.random() < 0.5:
        c = Fun("c", ())
        pool = [Var("x"), c, Fun("f", (Var("x"),)), Fun("g", (c, Var("y")))]
        table = {"P": Atom("P", (rng.choice(pool),)),
                 "Q": Atom("R", (rng.choice(pool), rng.choice(pool)))}
        d = instantiate_derivation(d, table)
        if rng.random() < 0.5:
            d = exists_i(Exists("z", d.conclusion), c, d)
        hyps = set().union(*(a.formula.free_vars for a in open_assumptions(d)))
        if "x" not in hyps and rng.random() < 0.7:
            d = forall_i("x", d)
    check(d)
    return d
