"""Exhaustive enumeration of small propositional formulas."""
from __future__ import annotations

from functools import lru_cache

from ..kernel.formula import BOT, TOP, And, Formula, Imp, Not, Or, prop

_BINARY = {"and": And, "or": Or, "imp": Imp}


def leaves_for(atoms=("P", "Q"), constants=True) -> list[Formula]:
    out = [prop(a) for a in atoms]
    if constants:
        out += [BOT, TOP]
    return out


def _binary(connectives):
    return [_BINARY[c] for c in connectives if c in _BINARY]


def formulas_by_connectives(n: int, atoms=("P", "Q"), connectives=("not", "and", "or"),
                            constants=True):
    """Every formula with exactly n connective nodes (¬ counts as one)."""
    leaves = leaves_for(atoms, constants)
    binary = _binary(connectives)
    unary = "not" in connectives

    def gen(k):
        if k == 0:
            yield from leaves
            return
        if unary:
            for a in gen(k - 1):
                yield Not(a)
        for cls in binary:
            for i in range(k):
                for a in gen(i):
                    for b in gen(k - 1 - i):
                        yield cls(a, b)

    yield from gen(n)


def count_by_connectives(n: int, n_leaves: int = 4, n_binary: int = 2, unary: bool = True) -> int:
    @lru_cache(maxsize=None)
    def c(k):
        if k == 0:
            return n_leaves
        total = c(k - 1) if unary else 0
        total += n_binary * sum(c(i) * c(k - 1 - i) for i in range(k))
        return total
    return c(n)


def formulas_by_size(n: int, atoms=("P", "Q"), connectives=("not", "and", "or"),
                     constants=True) -> list[Formula]:
    """Every formula with exactly n nodes, leaves included."""
    leaves = leaves_for(atoms, constants)
    binary = _binary(connectives)
    unary = "not" in connectives
    table: list[list[Formula]] = [[], list(leaves)]
    for k in range(2, n + 1):
        row = []
        if unary:
            row += [Not(a) for a in table[k - 1]]
        for cls in binary:
            for i in range(1, k - 1):
                for a in table[i]:
                    for b in table[k - 1 - i]:
                        row.append(cls(a, b))
        table.append(row)
    return table[n] if n < len(table) else []


def formulas_up_to_size(n: int, **kw):
    for k in range(1, n + 1):
        yield from formulas_by_size(k, **kw)
