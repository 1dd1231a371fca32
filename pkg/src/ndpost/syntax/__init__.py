"""Reading and writing formulas and derivations."""
from .parser import (
    ArityMismatch, ParseError, SourceSpan, parse_derivation, parse_formula,
    parse_term,
)
from .render import (
    formula_latex, formula_sexpr, render, render_ascii, render_formula,
    render_latex, render_text,
)
