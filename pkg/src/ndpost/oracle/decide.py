"""Propositional decision procedures for NK, NJ and NM."""
from __future__ import annotations

from ..kernel.formula import And, Atom, Bot, Formula, Imp, Not, Or, Top
from . import _backend


class NotPropositional(ValueError):
    pass


def _atoms(f: Formula, out: dict) -> dict:
    if isinstance(f, Atom):
        if f.args:
            raise NotPropositional(f"atom {f} has arguments")
        out.setdefault(f.pred, len(out))
    elif isinstance(f, (Bot, Top)):
        pass
    elif isinstance(f, Not):
        _atoms(f.body, out)
    elif isinstance(f, (And, Or, Imp)):
        _atoms(f.left, out)
        _atoms(f.right, out)
    else:
        raise NotPropositional(f"{f} is not propositional")
    return out


# ---------------------------------------------------------------- classical

def _table(f: Formula, cols: dict, full: int) -> int:
    if isinstance(f, Atom):
        return cols[f.pred]
    if isinstance(f, Bot):
        return 0
    if isinstance(f, Top):
        return full
    if isinstance(f, Not):
        return full & ~_table(f.body, cols, full)
    a = _table(f.left, cols, full)
    b = _table(f.right, cols, full)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    return (full & ~a) | b


def truth_table(f: Formula, atoms=None) -> int:
    """The truth table of f as a bitmask, one bit per valuation."""
    names = list(atoms) if atoms is not None else sorted(_atoms(f, {}))
    _atoms(f, {})
    n = len(names)
    rows = 1 << n
    full = (1 << rows) - 1
    cols = {}
    for i, name in enumerate(names):
        mask = 0
        for r in range(rows):
            if r >> i & 1:
                mask |= 1 << r
        cols[name] = mask
    return _table(f, cols, full)


def classical_valid(f: Formula) -> bool:
    names = sorted(_atoms(f, {}))
    full = (1 << (1 << len(names))) - 1
    return truth_table(f, names) == full


# ---------------------------------------------------------------- G4ip

class Decider:
    """A reusable prover with memo shared between queries.

    ``minimal`` reads ⊥ as a fresh atom and ¬A as A → ⊥-atom.
    """

    def __init__(self, minimal: bool = False, memo_limit: int = 2_000_000):
        self.minimal = minimal
        self.memo_limit = memo_limit
        self._p = _backend.Prover()
        self._atoms: dict[str, int] = {}
        self._codes: dict[Formula, int] = {}
        self._falsum = self._atom_code("\0falsum") if minimal else self._p.bot
        self.queries = 0

    def _atom_code(self, name):
        i = self._atoms.setdefault(name, len(self._atoms))
        return self._p.make(_backend.ATOM, i, -1)

    def encode(self, f: Formula) -> int:
        c = self._codes.get(f)
        if c is not None:
            return c
        p = self._p
        if isinstance(f, Atom):
            if f.args:
                raise NotPropositional(f"atom {f} has arguments")
            c = self._atom_code(f.pred)
        elif isinstance(f, Bot):
            c = self._falsum
        elif isinstance(f, Top):
            c = p.top
        elif isinstance(f, Not):
            c = p.make(_backend.IMP, self.encode(f.body), self._falsum)
        elif isinstance(f, And):
            c = p.make(_backend.AND, self.encode(f.left), self.encode(f.right))
        elif isinstance(f, Or):
            c = p.make(_backend.OR, self.encode(f.left), self.encode(f.right))
        elif isinstance(f, Imp):
            c = p.make(_backend.IMP, self.encode(f.left), self.encode(f.right))
        else:
            raise NotPropositional(f"{f} is not propositional")
        if len(self._codes) < self.memo_limit:
            self._codes[f] = c
        return c

    def provable(self, f: Formula, assumptions=()) -> bool:
        goal = self.encode(f)
        ctx = frozenset(self.encode(a) for a in assumptions)
        self.queries += 1
        if self._p.memo_size() > self.memo_limit:
            self._p.clear()
        return self._p.prove(ctx, goal)

    def clear(self):
        self._p.clear()


def intuitionistic_provable(f: Formula, assumptions=()) -> bool:
    return Decider(minimal=False).provable(f, assumptions)


def minimal_provable(f: Formula, assumptions=()) -> bool:
    return Decider(minimal=True).provable(f, assumptions)
