"""Reduction steps for pushing raa downwards."""
from .steps import (
    DISPATCH, SYMMETRIC, Case, ForallIntroBlock, InternalShapeError, NotAnRaa,
    Redex, RewriteError, RootRaa, all_redexes, find_redex, reduce_at,
)
from .negative import (
    NotNegative, ShapeMismatch, dne_for_negative, is_negative, negative_formulas,
    reduce_at_negative,
)
