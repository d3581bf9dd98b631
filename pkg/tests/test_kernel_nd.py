import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmproof import UnknownDerivedRule
from cmproof import kripke as K
from cmproof.corpus import build_entry, load_corpus
from cmproof.generate import random_nd_script, weaken
from cmproof.kernel_nd import (
    LogicMode, ProofScript, check_derived_rule, check_nd, expand_derived,
)
from cmproof.surface import parse_formula as P, parse_proof
from cmproof.syntax import alpha_equal, rename_bound, to_bot_form

MODES = list(LogicMode)


def nd(body: str, mode: str = "minimal"):
    return check_nd(parse_proof("kernel: nd\n" + body), mode)


def test_contraposition_is_accepted_in_minimal():
    r = check_nd(build_entry("contraposition"), LogicMode.MINIMAL)
    assert r.accepted and r.diagnostics == ()


def test_ex_falso_needs_intuitionistic_logic():
    text = """
    1. | 0 = 1          by assume
    2. | 0 in A         by ex_falso 1
    3. 0 = 1 -> 0 in A  by imp_i 1-2
    """
    r = nd(text, "minimal")
    assert not r.accepted
    assert r.diagnostics[0].code == "ExFalsoInMinimal" and r.diagnostics[0].index == 2
    assert nd(text, "int").accepted


def test_em_gate():
    general = "1. (exists X. 0 in X) \\/ ~(exists X. 0 in X)  by em"
    r = nd(general, "cm")
    assert r.codes == ["EMNotArithmetical"]
    arith = "1. (forall n. n = n) \\/ ~(forall n. n = n)  by em"
    assert nd(arith, "cm").accepted
    assert nd(arith, "cm-plus").accepted
    assert nd(arith, "int").codes == ["EMNotAllowed"]
    assert nd(arith, "minimal").codes == ["EMNotAllowed"]


def test_em_with_free_set_variables_is_allowed():
    assert nd("1. 0 in X \\/ ~(0 in X)  by em", "cm").accepted


def test_nonlogical_axioms_need_cm():
    text = "1. ~(n' = 0)  by axiom Num1"
    assert nd(text, "cm").accepted
    assert nd(text, "int").codes == ["NonLogicalNotAllowed"]


def test_citing_into_a_closed_block_is_a_scope_violation():
    text = """
    1. | 0 in A                by assume
    2. 0 in A -> 0 in A        by imp_i 1-1
    3. 0 in A                  by reit 1
    """
    r = nd(text)
    assert r.codes[0] == "ScopeViolation"


def test_reiteration_into_deeper_blocks():
    text = """
    1. | 0 in A                          by assume
    2. | | 0 in B                        by assume
    3. | | 0 in A                        by reit 1
    4. | 0 in B -> 0 in A                by imp_i 2-3
    5. 0 in A -> 0 in B -> 0 in A        by imp_i 1-4
    """
    assert nd(text).accepted


def test_unfinished_block_is_rejected():
    r = nd("1. | 0 in A  by assume")
    assert not r.accepted
    assert r.codes == ["OpenAssumption"]


def test_wrong_conclusion_is_a_rule_mismatch():
    text = """
    1. | 0 in A /\\ 0 in B        by assume
    2. | 0 in B                   by and_e1 1
    3. 0 in A /\\ 0 in B -> 0 in B by imp_i 1-2
    """
    r = nd(text)
    assert r.codes[0] == "RuleMismatch" and r.diagnostics[0].index == 2


def test_forall_intro_eigenvariable_condition():
    text = """
    1. | n = 0                        by assume
    2. | forall n. n = 0              by forall_i 1 n
    3. n = 0 -> forall n. n = 0       by imp_i 1-2
    """
    r = nd(text)
    assert r.codes[0] == "EigenvariableViolation" and r.diagnostics[0].index == 2
    ok = """
    1. | forall m. m = 0              by assume
    2. | n = 0                        by forall_e 1 n
    3. | forall n. n = 0              by forall_i 2 n
    4. (forall m. m = 0) -> forall n. n = 0  by imp_i 1-3
    """
    assert nd(ok).accepted


def test_exists_elim_eigenvariable_conditions():
    good = """
    1. | exists n. n = 0 /\\ 0 in A        by assume
    2. | | n = 0 /\\ 0 in A                by assume
    3. | | 0 in A                          by and_e2 2
    4. | 0 in A                            by exists_e 1, 2-3 n
    5. (exists n. n = 0 /\\ 0 in A) -> 0 in A  by imp_i 1-4
    """
    assert nd(good).accepted
    leaks = """
    1. | exists n. n = 0                   by assume
    2. | | n = 0                           by assume
    3. | n = 0                             by exists_e 1, 2-2 n
    4. (exists n. n = 0) -> n = 0          by imp_i 1-3
    """
    r = nd(leaks)
    assert r.codes[0] == "EigenvariableViolation" and r.diagnostics[0].index == 3


def test_forall_elim_requires_free_for():
    text = """
    1. | forall n. exists m. n = m    by assume
    2. | exists m. m = m              by forall_e 1 m
    3. (forall n. exists m. n = m) -> exists m. m = m  by imp_i 1-2
    """
    r = nd(text)
    assert r.codes[0] == "CaptureError"


def test_derived_rules():
    assert check_derived_rule("contraposition", P("0 in A -> 0 in B")).accepted
    r = check_derived_rule("dne_arithmetical", P("n = 0"))
    assert r.accepted and r.mode is LogicMode.CM
    with pytest.raises(UnknownDerivedRule):
        check_derived_rule("no_such_rule", P("n = 0"))
    assert nd("1. 0 in A  by derived no_such_rule 0 in A").codes == ["UnknownDerivedRule"]


def test_dne_expansion_is_a_tautology():
    """The conclusion of the expansion, as a propositional shape, is a classical tautology."""
    from cmproof.kernel_nd import DERIVED_RULES

    script = DERIVED_RULES["dne_arithmetical"].expand(P("n = 0"))
    concl = script.conclusion
    assert alpha_equal(concl, to_bot_form(P("~~(n = 0) -> n = 0")))
    prop, _ = K.to_prop(concl)

    def value(f, env):
        if isinstance(f, K.Atom):
            return env[f.name]
        if isinstance(f, K.Bot):
            return False
        a, b = value(f.left, env), value(f.right, env)
        return {K.And: a and b, K.Or: a or b, K.Imp: (not a) or b}[type(f)]

    names = sorted(K.atoms(prop))
    for bits in itertools.product([False, True], repeat=len(names)):
        assert value(prop, dict(zip(names, bits)))


def test_derived_step_in_a_script():
    text = """
    1. (0 in A -> 0 in B) -> ~(0 in B) -> ~(0 in A)  by derived contraposition 0 in A -> 0 in B
    """
    assert nd(text).accepted
    assert nd("1. 0 in A  by derived contraposition 0 in A -> 0 in B").codes[0] == "RuleMismatch"


def test_cm_derived_rule_is_gated_by_mode():
    text = "1. ~~(n = 0) -> n = 0  by derived dne_arithmetical n = 0"
    assert nd(text, "cm").accepted
    assert not nd(text, "int").accepted


def test_accept_iff_no_diagnostics_and_depth_zero():
    for entry in load_corpus():
        for mode in MODES:
            r = check_nd(entry.script, mode) if entry.kernel == "nd" else None
            if r is None:
                continue
            assert r.accepted == (not r.diagnostics)
            if r.accepted:
                assert entry.script.steps[-1].depth == 0


# -- properties ------------------------------------------------------------


def test_determinism_across_threads():
    scripts = [e.script for e in load_corpus() if e.kernel == "nd"]
    expected = [check_nd(s, LogicMode.MINIMAL) for s in scripts]
    with ThreadPoolExecutor(max_workers=8) as pool:
        for _ in range(3):
            assert list(pool.map(lambda s: check_nd(s, LogicMode.MINIMAL), scripts)) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_mode_monotonicity(seed):
    script = random_nd_script(random.Random(seed))
    verdicts = [check_nd(script, m).accepted for m in MODES]
    assert verdicts == sorted(verdicts)
    assert verdicts[0]


def test_mode_monotonicity_on_corpus():
    for entry in load_corpus():
        if entry.kernel != "nd":
            continue
        verdicts = [check_nd(entry.script, m).accepted for m in MODES]
        assert verdicts == sorted(verdicts), entry.name
        assert verdicts[entry.mode]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["0 in C", "forall n. n in X", "exists Y. 0 in Y"]))
def test_weakening_stability(seed, extra):
    script = random_nd_script(random.Random(seed))
    w = weaken(script, to_bot_form(P(extra)))
    assert check_nd(w, LogicMode.MINIMAL).accepted


def test_weakening_stability_on_corpus():
    for entry in load_corpus():
        if entry.kernel != "nd":
            continue
        w = weaken(entry.script, P("0 in Unused"))
        assert check_nd(w, entry.mode).accepted, entry.name


def test_alpha_robustness_on_corpus():
    for entry in load_corpus():
        if entry.kernel != "nd":
            continue
        steps = list(entry.script.steps)
        for i, s in enumerate(steps):
            variant = rename_bound(s.statement)
            if variant == s.statement:
                continue
            mutated = replace(entry.script, steps=tuple(steps[:i] + [replace(s, statement=variant)] + steps[i + 1:]))
            assert check_nd(mutated, entry.mode).accepted, (entry.name, s.index)


def test_expanded_derived_steps_still_check():
    for entry in load_corpus():
        if entry.kernel != "nd":
            continue
        flat = expand_derived(entry.script)
        assert check_nd(flat, entry.mode).accepted, entry.name


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_minimal_theorems_have_no_minimal_countermodel(seed):
    script = random_nd_script(random.Random(seed), max_steps=20)
    prop, _ = K.to_prop(script.conclusion)
    assert K.search_countermodel(prop, 3, "minimal") is None
