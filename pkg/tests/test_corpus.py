import shutil

import pytest
from hypothesis import given, settings

from cmproof import ArityError, NotArithmetical, ProvisoViolation, SortError
from cmproof.axioms import Template
from cmproof.corpus import (
    CORPUS_DIR, ENTRIES, build_entry, check_entry, check_script, gen_arith_comprehension, load_corpus,
    numerical_omniscience_entry, run_corpus, write_corpus,
)
from cmproof.kernel_nd import LogicMode, check_nd, expand_derived
from cmproof.surface import parse_formula as P
from cmproof.syntax import FormulaClass, Sort, Var, alpha_equal, classify, free_vars, size, to_bot_form

from strategies import arithmetical_formulas

n = Var("n")
Xs = Var("X", Sort.SECOND)

MANDATORY = {
    "contraposition": "minimal",
    "neg_or_iff_and_neg": "minimal",
    "neg_or_to_neg_and": "minimal",
    "disjunctive_syllogism": "int",
    "forall_neg_iff_neg_exists": "minimal",
    "exists_neg_to_neg_forall": "minimal",
    "numerical_omniscience": "cm",
    **{f"hilbert_scheme_{k:02d}": "minimal" for k in range(1, 12)},
    "hilbert_scheme_12": "int",
}


def test_full_run_passes():
    report = run_corpus()
    assert report.passed, report.format()
    names = [name for name, _ in report.results]
    assert names == sorted(names)
    assert set(MANDATORY) <= set(names)
    assert len(names) == len(ENTRIES)


@pytest.mark.parametrize("name, mode", sorted(MANDATORY.items()))
def test_mandatory_entries_declare_their_mode(name, mode):
    entry = next(e for e in load_corpus() if e.name == name)
    assert entry.mode is LogicMode.parse(mode)


def test_every_entry_proves_its_claim():
    for entry in load_corpus():
        assert entry.claim is not None
        last = entry.script.steps[-1].statement
        assert alpha_equal(to_bot_form(last), to_bot_form(entry.claim)), entry.name
        assert check_entry(entry).accepted


def test_stated_claims_of_the_propositional_exercises():
    claims = {
        "neg_or_iff_and_neg": "~(0 in A \\/ 0 in B) <-> ~(0 in A) /\\ ~(0 in B)",
        "neg_or_to_neg_and": "~(0 in A) \\/ ~(0 in B) -> ~(0 in A /\\ 0 in B)",
        "disjunctive_syllogism": "(0 in A \\/ 0 in B) /\\ ~(0 in A) -> 0 in B",
        "contraposition": "(0 in A -> 0 in B) -> ~(0 in B) -> ~(0 in A)",
    }
    for name, text in claims.items():
        assert alpha_equal(build_entry(name).claim, to_bot_form(P(text))), name


def test_each_entry_fails_in_the_next_weaker_mode():
    for entry in load_corpus():
        if entry.mode is LogicMode.MINIMAL:
            continue
        weaker = LogicMode(entry.mode - 1)
        assert not check_entry(entry, weaker).accepted, entry.name
    ds = next(e for e in load_corpus() if e.name == "disjunctive_syllogism")
    assert "ExFalsoInMinimal" in check_entry(ds, LogicMode.MINIMAL).codes


def test_corrupting_one_entry_isolates_the_failure(tmp_path):
    for p in CORPUS_DIR.glob("*.cmp"):
        shutil.copy(p, tmp_path / p.name)
    target = tmp_path / "neg_or_to_neg_and.cmp"
    text = target.read_text()
    target.write_text(text.replace("by and_e1", "by and_e2", 1))
    report = run_corpus(tmp_path)
    assert report.failures == ["neg_or_to_neg_and"]
    # an unparsable file is reported, not raised
    (tmp_path / "contraposition.cmp").write_text("name: contraposition\nmode: minimal\n1. 0 in A  by reit 5\n")
    assert run_corpus(tmp_path).failures == ["contraposition", "neg_or_to_neg_and"]


def test_empty_directory(tmp_path):
    report = run_corpus(tmp_path)
    assert report.passed and report.results == ()


def test_stored_files_match_builders(tmp_path):
    written = write_corpus(tmp_path)
    assert len(written) == len(ENTRIES)
    for path in written:
        assert path.read_text() == (CORPUS_DIR / path.name).read_text(), path.name


def test_expanding_derived_rules_keeps_entries_valid():
    for entry in load_corpus():
        if entry.kernel != "nd":
            continue
        flat = expand_derived(entry.script)
        assert not any(type(s.justification).__name__ == "Derived" for s in flat.steps)
        assert check_nd(flat, entry.mode).accepted, entry.name


# -- arithmetical comprehension ---------------------------------------------


def test_comprehension_on_reflexivity():
    script = gen_arith_comprehension(Template((n,), P("n = n")), "second")
    assert check_nd(script, LogicMode.CM).accepted
    assert alpha_equal(script.conclusion, to_bot_form(P("exists X. forall n. n in X <-> n = n")))
    assert not check_nd(script, LogicMode.INTUITIONISTIC).accepted


def test_comprehension_third_level():
    script = gen_arith_comprehension(Template((Xs,), P("0 in X")), "third")
    assert check_nd(script, LogicMode.CM).accepted
    assert alpha_equal(script.conclusion, to_bot_form(P("exists @X. forall X. X in @X <-> 0 in X")))


def test_comprehension_errors():
    with pytest.raises(NotArithmetical):
        gen_arith_comprehension(Template((n,), P("exists Y. n in Y")), "second")
    with pytest.raises(ProvisoViolation):
        gen_arith_comprehension(Template((n,), P("n in X")), "second")
    with pytest.raises(ProvisoViolation):
        gen_arith_comprehension(Template((Xs,), P("X in @X")), "third")
    with pytest.raises(SortError):
        gen_arith_comprehension(Template((n,), P("n = n")), "third")
    with pytest.raises(ArityError):
        gen_arith_comprehension(Template((n, Var("m")), P("n = m")), "second")


@settings(max_examples=40, deadline=None)
@given(arithmetical_formulas)
def test_comprehension_property(body):
    if Xs in free_vars(body):
        with pytest.raises(ProvisoViolation):
            gen_arith_comprehension(Template((n,), body), "second")
        return
    script = gen_arith_comprehension(Template((n,), body), "second")
    assert check_nd(script, LogicMode.CM).accepted
    # output length is linear in the template size
    assert len(script.steps) <= 4 * size(body) + 4


# -- numerical omniscience ---------------------------------------------------


def test_numerical_omniscience():
    entry = numerical_omniscience_entry()
    assert entry.mode is LogicMode.CM
    assert check_entry(entry).accepted
    r = check_entry(entry, LogicMode.INTUITIONISTIC)
    assert not r.accepted
    assert {"EMNotAllowed", "NonLogicalNotAllowed"} & set(r.codes)
    display = P("(forall n. n in A \\/ ~(n in A)) -> (forall n. n in A) \\/ exists n. ~(n in A)")
    assert alpha_equal(entry.script.conclusion, to_bot_form(display))
    assert len(entry.script.steps) >= 90


def test_numerical_omniscience_uses_em_on_arithmetical_formulas_only():
    entry = numerical_omniscience_entry()
    uses = {type(s.justification).__name__ for s in entry.script.steps}
    assert {"EM", "NonLogical", "OrE", "ExistsE"} <= uses
    for s in entry.script.steps:
        if type(s.justification).__name__ == "EM":
            assert classify(s.statement) is not FormulaClass.GENERAL


def test_em_corollary():
    script = build_entry("numerical_omniscience_em")
    assert check_script(script).accepted
    assert alpha_equal(script.conclusion, to_bot_form(P("(forall n. n in A \\/ ~(n in A)) -> (forall n. n in A) \\/ ~forall n. n in A")))
