"""Propositional decision procedures and a random derivation generator."""
from ._backend import NAME as BACKEND
from .decide import (
    Decider, NotPropositional, classical_valid, intuitionistic_provable,
    minimal_provable, truth_table,
)
from .enumerate import (
    count_by_connectives, formulas_by_connectives, formulas_by_size,
    formulas_up_to_size,
)

__all__ = [
    "BACKEND", "Decider", "NotPropositional", "classical_valid",
    "intuitionistic_provable", "minimal_provable", "truth_table",
    "count_by_connectives", "formulas_by_connectives", "formulas_by_size",
    "formulas_up_to_size",
]
