"""Terms, formulas, derivations, the checker and the raa measures."""
from .formula import (
    BOT, TOP, And, Atom, Bot, Exists, Forall, Formula, Fun, Imp, Not, Or, Term,
    Top, Var, all_vars, alpha_eq, contains, free_vars, fresh_var,
    is_propositional, pretty, prop, size, subst,
)
from .derivation import (
    Assume, Derivation, Inference, Labels, Rule, and_e1, and_e2, and_i, assume,
    canonical_labels, count_label, exists_e, exists_i, forall_e, forall_i,
    format_path, graft, imp_e, imp_i, is_efq, nodes, not_e, not_i,
    open_assumptions, or_e, or_i1, or_i2, raa, relabel, rules_used,
    same_up_to_labels, subtree, top_i,
)
from .check import (
    AnnotationMismatch, BadDischarge, CheckError, EigenvariableViolation,
    Judgment, SchemaMismatch, UnboundLabel, check, is_valid,
)
from .measure import (
    NJ, NK, NM, RaaEntry, RaaReport, StandardForm, System, in_system,
    maximal_raa, raa_report, size_raa, size_raa_plus, standard_form,
    standard_form_structural, uses_rule,
)
