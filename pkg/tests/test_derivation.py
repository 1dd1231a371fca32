from ndpost.kernel import (
    Forall, Imp, Labels, Not, Var, and_i, assume, canonical_labels, check,
    forall_e, forall_i, graft, imp_e, imp_i, not_e, not_i, raa, relabel,
    same_up_to_labels,
)
from ndpost.kernel.derivation import (
    count_label, discharge_none, format_path, label_counts, max_label,
    open_assumptions, parse_path, rename_label,
)
from ndpost.kernel.formula import Atom, prop

p, q = prop("P"), prop("Q")
y = Var("y")


def Py(t):
    return Atom("P", (t,))


def test_labels_counter():
    d = imp_i(7, p, assume(p, 7))
    lab = Labels.above(d)
    assert lab() == 8 and lab.fresh() == 9
    assert max_label(d) == 7


def test_graft_copies_get_fresh_labels():
    host = and_i(assume(Not(Not(p)), 1), assume(Not(Not(p)), 1))
    repl = not_i(3, not_e(assume(Not(p), 3), assume(p)), Not(p))
    out = graft(host, 1, repl, Labels(10))
    assert count_label(out, 3) == 0
    counts = label_counts(out)
    assert sorted(counts.values()) == [1, 1] and len(counts) == 2
    assert all(a.formula == p for a in open_assumptions(out))


def test_graft_renames_capturing_eigenvariable():
    # ∀y over a leaf [Q]^1 that is replaced by a derivation with P(y) open
    law = Forall("x", Imp(q, Py(Var("x"))))
    host = imp_i(1, q, forall_i("y", imp_e(forall_e(assume(law), y), assume(q, 1))))
    check(host)
    repl = imp_e(assume(Imp(Py(y), q)), assume(Py(y)))
    inner = host.premises[0]
    out = graft(inner, 1, repl, Labels(20))
    assert out.var != "y"
    j = check(out)
    assert Py(y) in j.assumptions


def test_graft_leaves_unrelated_subtrees_alone():
    left = not_e(assume(Not(p)), assume(p))
    host = and_i(left, assume(q, 1))
    out = graft(host, 1, assume(q), Labels(5))
    assert out.premises[0] is left


def test_relabel_and_canonical():
    d = raa(5, not_e(assume(Not(p), 5), assume(p)), p)
    r = relabel(d, Labels(40))
    assert r.label == 40 and same_up_to_labels(r, d)
    assert canonical_labels(r) == canonical_labels(d)
    moved = rename_label(d, 5, 6)
    assert moved.label == 5 and count_label(moved, 6) == 1 and count_label(moved, 5) == 0


def test_discharge_none_opens_leaves():
    body = not_e(assume(Not(p), 2), assume(p))
    j = check(discharge_none(body, 2))
    assert j.assumptions == {Not(p), p}


def test_same_up_to_labels_is_structural():
    a = imp_i(1, p, assume(p, 1))
    b = imp_i(2, p, assume(p, 2))
    c = imp_i(2, p, assume(p))
    assert same_up_to_labels(a, b)
    assert not same_up_to_labels(a, c)


def test_paths():
    assert parse_path(format_path((0, 1, 2))) == (0, 1, 2)
    assert format_path(()) == "root"
    assert forall_e(assume(Forall("x", Py(Var("x")))), y).conclusion == Py(y)
