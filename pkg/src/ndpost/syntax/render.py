"""Text, ASCII-tree and LaTeX renderings of formulas and derivations."""
from __future__ import annotations

from ..kernel.derivation import (
    Assume, Derivation, Rule, count_label, leaves, max_label,
)
from ..kernel.formula import (
    And, Atom, Bot, Exists, Forall, Formula, Imp, Not, Or, Term, Top,
    Var, pretty,
)


# ---------------------------------------------------------------- text

def term_sexpr(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    return "(fun " + " ".join([t.name] + [term_sexpr(a) for a in t.args]) + ")"


def formula_sexpr(f: Formula) -> str:
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Atom):
        return "(pred " + " ".join([f.pred] + [term_sexpr(a) for a in f.args]) + ")"
    if isinstance(f, Not):
        return f"(not {formula_sexpr(f.body)})"
    if isinstance(f, (And, Or, Imp)):
        tag = {And: "and", Or: "or", Imp: "imp"}[type(f)]
        return f"({tag} {formula_sexpr(f.left)} {formula_sexpr(f.right)})"
    tag = "forall" if isinstance(f, Forall) else "exists"
    return f"({tag} {f.var} {formula_sexpr(f.body)})"


_KEYWORD = {r: r.value.replace("_", "-") for r in Rule}


def render_text(d: Derivation) -> str:
    spare = [max_label(d)]

    def label_of(n):
        if n.label is not None:
            return n.label
        spare[0] += 1
        return spare[0]

    lines: list[str] = []
    _text(d, 0, lines, label_of)
    return "\n".join(lines) + "\n"


def _text(d, indent, lines, label_of):
    pad = "  " * indent
    if isinstance(d, Assume):
        lab = f"{d.label} " if d.label is not None else ""
        lines.append(f"{pad}(assume {lab}{formula_sexpr(d.formula)})")
        return
    r = d.rule
    head = [_KEYWORD[r]]
    if r in (Rule.RAA, Rule.NOT_I):
        head.append(str(label_of(d)))
        found = next((a.formula for a in leaves(d.premises[0])
                      if d.label is not None and a.label == d.label), None)
        if r is Rule.RAA:
            if not (isinstance(found, Not) and found.body == d.conclusion):
                head.append(formula_sexpr(d.conclusion))
        elif found is None or Not(found) != d.conclusion:
            head.append(formula_sexpr(d.conclusion.body))
    elif r in (Rule.OR_E, Rule.EXISTS_E):
        head.append(str(label_of(d)))
        if r is Rule.EXISTS_E:
            head.append(d.var)
    elif r is Rule.IMP_I:
        head.append(str(label_of(d)))
        head.append(formula_sexpr(d.conclusion.left))
    elif r is Rule.OR_I1:
        head.append(formula_sexpr(d.conclusion.right))
    elif r is Rule.OR_I2:
        head.append(formula_sexpr(d.conclusion.left))
    elif r is Rule.FORALL_I:
        head.append(d.var)
    elif r is Rule.FORALL_E:
        head.append(term_sexpr(d.term))
    elif r is Rule.EXISTS_I:
        head.append(formula_sexpr(d.target))
        head.append(term_sexpr(d.term))
    if not d.premises:
        lines.append(f"{pad}({' '.join(head)})")
        return
    lines.append(f"{pad}({' '.join(head)}")
    for p in d.premises:
        _text(p, indent + 1, lines, label_of)
    lines[-1] += ")"


# ---------------------------------------------------------------- ascii tree

def rule_name(d: Derivation) -> str:
    if d.rule is Rule.RAA and count_label(d.premises[0], d.label) == 0:
        return "efq"
    return d.rule.value


def render_ascii(d: Derivation) -> str:
    lines: list[str] = []
    _ascii(d, "", "", lines)
    return "\n".join(lines) + "\n"


def _ascii(d, first, rest, lines):
    if isinstance(d, Assume):
        f = pretty(d.formula, unicode=False)
        lines.append(first + (f"[{f}]^{d.label}" if d.label is not None else f))
        return
    name = rule_name(d)
    if d.label is not None and name != "efq":
        name += f"^{d.label}"
    extra = ""
    if d.var is not None:
        extra = f" {d.var}"
    elif d.term is not None:
        extra = f" {d.term}"
    lines.append(f"{first}{pretty(d.conclusion, unicode=False)}    by {name}{extra}")
    for i, p in enumerate(d.premises):
        last = i == len(d.premises) - 1
        _ascii(p, rest + ("`-- " if last else "|-- "), rest + ("    " if last else "|   "), lines)


# ---------------------------------------------------------------- latex

def formula_latex(f: Formula, ctx: int = 0) -> str:
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({', '.join(_term_latex(a) for a in f.args)})"
    if isinstance(f, Bot):
        return r"\bot"
    if isinstance(f, Top):
        return r"\top"
    if isinstance(f, Not):
        return r"\lnot " + formula_latex(f.body, 4)
    if isinstance(f, (Forall, Exists)):
        q = r"\forall" if isinstance(f, Forall) else r"\exists"
        s = f"{q} {f.var}\\, {formula_latex(f.body, 4)}"
        return f"({s})" if 0 < ctx < 4 else s
    p = {Imp: 1, Or: 2, And: 3}[type(f)]
    op = {Imp: r"\to", Or: r"\lor", And: r"\land"}[type(f)]
    right_ctx = p if isinstance(f, Imp) else p + 1
    s = f"{formula_latex(f.left, p + 1)} {op} {formula_latex(f.right, right_ctx)}"
    return f"({s})" if ctx > p else s


def _term_latex(t: Term) -> str:
    if isinstance(t, Var) or not t.args:
        return t.name
    return f"{t.name}({', '.join(_term_latex(a) for a in t.args)})"


_LATEX_RULE = {
    Rule.RAA: r"\mathsf{raa}", Rule.TOP_I: r"\top_{\mathsf{i}}",
    Rule.NOT_I: r"\lnot_{\mathsf{i}}", Rule.NOT_E: r"\lnot_{\mathsf{e}}",
    Rule.AND_I: r"\land_{\mathsf{i}}", Rule.AND_E1: r"\land_{\mathsf{e}_1}",
    Rule.AND_E2: r"\land_{\mathsf{e}_2}", Rule.OR_I1: r"\lor_{\mathsf{i}_1}",
    Rule.OR_I2: r"\lor_{\mathsf{i}_2}", Rule.OR_E: r"\lor_{\mathsf{e}}",
    Rule.IMP_I: r"\to_{\mathsf{i}}", Rule.IMP_E: r"\to_{\mathsf{e}}",
    Rule.FORALL_I: r"\forall_{\mathsf{i}}", Rule.FORALL_E: r"\forall_{\mathsf{e}}",
    Rule.EXISTS_I: r"\exists_{\mathsf{i}}", Rule.EXISTS_E: r"\exists_{\mathsf{e}}",
}

_INFER = {0: r"\UnaryInfC", 1: r"\UnaryInfC", 2: r"\BinaryInfC", 3: r"\TrinaryInfC"}


def render_latex(d: Derivation) -> str:
    """A bussproofs ``prooftree`` block, one inference line per rule."""
    out = [r"\begin{prooftree}"]
    _latex(d, out)
    out.append(r"\end{prooftree}")
    return "\n".join(out) + "\n"


def _latex(d, out):
    if isinstance(d, Assume):
        f = formula_latex(d.formula)
        out.append(rf"\AxiomC{{$[{f}]^{{{d.label}}}$}}" if d.label is not None
                   else rf"\AxiomC{{${f}$}}")
        return
    if not d.premises:
        out.append(r"\AxiomC{}")
    for p in d.premises:
        _latex(p, out)
    if rule_name(d) == "efq":
        name = r"\mathsf{efq}"
    else:
        name = _LATEX_RULE[d.rule]
        if d.label is not None:
            name += f"^{{{d.label}}}"
    out.append(rf"\RightLabel{{${name}$}}")
    out.append(rf"{_INFER[len(d.premises)]}{{${formula_latex(d.conclusion)}$}}")


def render(d: Derivation, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(d)
    if fmt in ("ascii", "ascii_tree"):
        return render_ascii(d)
    if fmt == "latex":
        return render_latex(d)
    raise ValueError(f"unknown format {fmt!r}")


def render_formula(f: Formula, fmt: str = "text") -> str:
    if fmt == "text":
        return formula_sexpr(f)
    if fmt in ("ascii", "ascii_tree"):
        return pretty(f, unicode=False)
    if fmt == "latex":
        return formula_latex(f)
    if fmt == "unicode":
        return pretty(f)
    raise ValueError(f"unknown format {fmt!r}")
