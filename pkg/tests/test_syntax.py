import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cmproof import CaptureError, SortError
from cmproof.surface import parse_formula as P, parse_term as T
from cmproof.syntax import (
    BOT, ZERO, Eq, Exists, Forall, FormulaClass, Imp, MemNP, MemSN, Not, Sort, Succ, Var,
    alpha_equal, classify, free_for, free_vars, rename_bound, substitute, to_bot_form, to_neg_form,
)

from strategies import any_var, closed_terms, formulas, num_vars, terms

n, m, k = Var("n"), Var("m"), Var("k")
X = Var("X", Sort.SECOND)
A3 = Var("@A", Sort.THIRD)


def test_free_vars_examples():
    assert free_vars(Forall(n, MemSN(n, X))) == {X}
    assert free_vars(Eq(n, ZERO)) == {n}
    assert free_vars(Exists(X, MemNP(X, A3))) == {A3}


def test_substitute_examples():
    assert substitute(Eq(n, ZERO), n, Succ(m)) == Eq(Succ(m), ZERO)
    phi = P("forall m. n = m")
    with pytest.raises(CaptureError):
        substitute(phi, n, m)
    with pytest.raises(SortError):
        substitute(P("0 in X"), X, ZERO)


def test_substitute_leaves_bound_occurrences_alone():
    phi = P("n = 0 /\\ forall n. n = 0")
    assert substitute(phi, n, k) == P("k = 0 /\\ forall n. n = 0")


def test_free_for_examples():
    assert not free_for(m, n, P("forall m. n = m"))
    assert free_for(ZERO, n, P("forall m. n = m"))
    assert not free_for(T("m + k"), n, P("(exists k. n = k) /\\ k = 0"))
    # an occurrence outside every binder is harmless
    assert free_for(T("m + k"), n, P("k = 0 -> n = 0"))


def test_classify_examples():
    assert classify(MemNP(X, A3)) is FormulaClass.ATOMIC
    assert classify(P("forall n. n in X <-> n = n")) is FormulaClass.ARITHMETICAL
    assert classify(P("exists X. 0 in X")) is FormulaClass.GENERAL
    assert classify(P("forall @C. X in @C")) is FormulaClass.GENERAL
    # free higher-sort variables do not matter
    assert classify(P("~(0 in X) \\/ X in @A")) is FormulaClass.ARITHMETICAL


def test_alpha_equal_examples():
    assert alpha_equal(P("forall n. n = n"), P("forall m. m = m"))
    assert not alpha_equal(P("forall n. n = k"), P("forall m. m = j"))
    assert not alpha_equal(P("forall n. forall m. n = m"), P("forall n. forall m. m = n"))
    assert alpha_equal(P("exists X. forall n. n in X"), P("exists Y. forall m. m in Y"))
    # a bound variable must not be confused with a free one of the same name
    assert not alpha_equal(P("forall n. n = m"), P("forall m. m = m"))


def test_bot_and_neg_forms():
    assert to_bot_form(Not(Eq(n, ZERO))) == Imp(Eq(n, ZERO), BOT)
    assert to_neg_form(Imp(Eq(n, ZERO), BOT)) == Not(Eq(n, ZERO))
    phi = P("forall n. n = 0 -> 0 in X")
    assert to_bot_form(phi) == phi


# -- properties ------------------------------------------------------------


@given(formulas, num_vars)
def test_identity_substitution(phi, x):
    assert substitute(phi, x, x) == phi


@given(formulas, closed_terms, num_vars)
def test_closed_terms_are_free_for_everything(phi, t, x):
    assert free_for(t, x, phi)


@given(formulas)
def test_classify_ignores_negation_form(phi):
    assert classify(to_bot_form(phi)) == classify(phi)
    assert classify(to_neg_form(phi)) == classify(phi)


@given(formulas)
def test_bot_and_neg_forms_are_inverse_on_images(phi):
    b = to_bot_form(phi)
    assert alpha_equal(to_bot_form(to_neg_form(b)), b)
    ng = to_neg_form(phi)
    assert alpha_equal(to_neg_form(to_bot_form(ng)), ng)


@given(formulas, formulas, formulas)
def test_alpha_equal_is_an_equivalence(a, b, c):
    assert alpha_equal(a, a)
    assert alpha_equal(a, b) == alpha_equal(b, a)
    if alpha_equal(a, b) and alpha_equal(b, c):
        assert alpha_equal(a, c)


@given(formulas)
def test_renaming_bound_variables_preserves_alpha_class(phi):
    renamed = rename_bound(phi)
    assert alpha_equal(phi, renamed)
    assert alpha_equal(renamed, phi)
    assert free_vars(renamed) == free_vars(phi)


@settings(max_examples=200)
@given(formulas, num_vars, terms)
def test_substitution_respects_alpha_equality(phi, x, t):
    psi = rename_bound(phi, avoid=free_vars(phi))
    assume(free_for(t, x, phi) and free_for(t, x, psi))
    assert alpha_equal(substitute(phi, x, t), substitute(psi, x, t))


@given(formulas, num_vars, terms)
def test_free_vars_after_substitution(phi, x, t):
    assume(free_for(t, x, phi))
    out = substitute(phi, x, t)
    fv = free_vars(phi)
    if x in fv:
        from cmproof.syntax import term_vars
        assert free_vars(out) == (fv - {x}) | term_vars(t)
    else:
        assert out == phi


@given(formulas, st.sampled_from([X, A3]))
def test_substitute_rejects_higher_sorts(phi, v):
    with pytest.raises(SortError):
        substitute(phi, v, ZERO)
