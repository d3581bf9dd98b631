import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmproof import UnsupportedRule
from cmproof.axioms import Template
from cmproof.corpus import build_entry
from cmproof.generate import random_hilbert_proof, with_step
from cmproof.hilbert import (
    AxiomScheme, ExRule, Gen, HilbertLine, MP, check_hilbert, scheme_instance, translate_hilbert_to_nd,
)
from cmproof.kernel_nd import LogicMode, ProofScript, check_nd
from cmproof.surface import parse_formula as P, parse_proof
from cmproof.syntax import Imp, And, MemSN, Sort, Var, ZERO, alpha_equal, to_bot_form
from dataclasses import replace

A = P("0 in A")
n = Var("n")


def identity_proof(a=A) -> list[HilbertLine]:
    """a -> a from schemes 1 and 2, worked out by hand."""
    aa = Imp(a, a)
    return [
        HilbertLine(1, Imp(a, Imp(aa, a)), AxiomScheme(1, {"phi": a, "psi": aa})),
        HilbertLine(2, Imp(Imp(a, aa), Imp(Imp(a, Imp(aa, a)), aa)), AxiomScheme(2, {"phi": a, "psi": aa, "sigma": a})),
        HilbertLine(3, Imp(a, aa), AxiomScheme(1, {"phi": a, "psi": a})),
        HilbertLine(4, Imp(Imp(a, Imp(aa, a)), aa), MP(2, 3)),
        HilbertLine(5, aa, MP(4, 1)),
    ]


def test_identity_proof_is_accepted():
    r = check_hilbert(identity_proof(), LogicMode.MINIMAL)
    assert r.accepted, r.diagnostics


def test_bundled_identity_proof_matches_hand_version():
    bundled = build_entry("hilbert_identity")
    assert check_hilbert(bundled, LogicMode.MINIMAL).accepted
    assert alpha_equal(bundled.steps[-1].statement, P("0 in A -> 0 in A"))


def test_scheme_13_needs_arithmetical_instance():
    phi = P("forall X. 0 in X")
    line = HilbertLine(1, P("(forall X. 0 in X) \\/ ~(forall X. 0 in X)"), AxiomScheme(13, {"phi": phi}))
    assert check_hilbert([line], LogicMode.CM).codes == ["ModeViolation"]
    ok = HilbertLine(1, P("0 in A \\/ ~(0 in A)"), AxiomScheme(13, {"phi": A}))
    assert check_hilbert([ok], LogicMode.CM).accepted
    assert check_hilbert([ok], LogicMode.INTUITIONISTIC).codes == ["ModeViolation"]


def test_scheme_12_needs_intuitionistic_logic():
    line = HilbertLine(1, P("0 in A -> ~(0 in A) -> 0 in B"), AxiomScheme(12, {"phi": A, "psi": P("0 in B")}))
    assert check_hilbert([line], LogicMode.MINIMAL).codes == ["ModeViolation"]
    assert check_hilbert([line], LogicMode.INTUITIONISTIC).accepted


def test_gen_proviso():
    # from n = 0 -> n = 0 one must not infer n = 0 -> forall n. n = 0
    lines = identity_proof(P("n = 0"))
    lines.append(HilbertLine(6, P("n = 0 -> forall n. n = 0"), Gen(5, n)))
    r = check_hilbert(lines, LogicMode.MINIMAL)
    assert r.codes == ["SideConditionViolation"] and r.diagnostics[0].index == 6


def test_gen_and_exists_rule_when_allowed():
    text = """kernel: hilbert
1. 0 in A -> 0 in A -> 0 in A  by ax 1 phi := 0 in A; psi := 0 in A
2. 0 in A -> forall n. 0 in A -> 0 in A  by gen 1 n
3. (exists n. 0 in A) -> 0 in A -> 0 in A  by ex_rule 1 n
"""
    assert check_hilbert(parse_proof(text), LogicMode.MINIMAL).accepted


def test_schemes_10_and_11_check_free_for():
    phi = Template((n,), P("exists m. n = m"))
    good = scheme_instance(11, {"phi": phi, "t": ZERO})
    assert alpha_equal(good, P("(forall n. exists m. n = m) -> exists m. 0 = m"))
    good = scheme_instance(10, {"phi": phi, "t": ZERO})
    assert alpha_equal(good, P("(exists m. 0 = m) -> exists n. exists m. n = m"))
    line = HilbertLine(1, P("(forall n. exists m. n = m) -> exists m. m = m"),
                       AxiomScheme(11, {"phi": phi, "t": Var("m")}))
    assert not check_hilbert([line], LogicMode.MINIMAL).accepted


def test_translate_identity():
    script = translate_hilbert_to_nd(identity_proof(), LogicMode.MINIMAL)
    assert 20 <= len(script.steps) <= 40
    assert check_nd(script, LogicMode.MINIMAL).accepted
    assert alpha_equal(script.conclusion, P("0 in A -> 0 in A"))


def test_translate_single_scheme_4_line():
    phi = P("0 in A /\\ 0 in B -> 0 in A")
    line = HilbertLine(1, phi, AxiomScheme(4, {"phi": A, "psi": P("0 in B")}))
    script = translate_hilbert_to_nd([line], LogicMode.MINIMAL)
    assert check_nd(script, LogicMode.MINIMAL).accepted
    assert alpha_equal(script.conclusion, phi)
    assert {type(s.justification).__name__ for s in script.steps} == {"Assume", "AndE1", "ImpI"}


def test_translate_rejects_quantifier_rules():
    lines = [
        HilbertLine(1, P("0 in A -> 0 in A -> 0 in A"), AxiomScheme(1, {"phi": A, "psi": A})),
        HilbertLine(2, P("0 in A -> forall n. 0 in A -> 0 in A"), Gen(1, n)),
    ]
    with pytest.raises(UnsupportedRule):
        translate_hilbert_to_nd(lines, LogicMode.MINIMAL)
    lines[1] = HilbertLine(2, P("(exists n. 0 in A) -> 0 in A -> 0 in A"), ExRule(1, n))
    with pytest.raises(UnsupportedRule):
        translate_hilbert_to_nd(lines, LogicMode.MINIMAL)


def test_translation_concludes_bot_form():
    lines = [HilbertLine(1, P("0 in A -> ~(0 in A) -> 0 in B"), AxiomScheme(12, {"phi": A, "psi": P("0 in B")}))]
    script = translate_hilbert_to_nd(lines, LogicMode.INTUITIONISTIC)
    assert script.conclusion == to_bot_form(lines[0].statement)
    assert check_nd(script, LogicMode.INTUITIONISTIC).accepted


# -- properties ------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([LogicMode.MINIMAL, LogicMode.INTUITIONISTIC, LogicMode.CM]))
def test_round_trip_soundness(seed, mode):
    proof = random_hilbert_proof(random.Random(seed), max_lines=20, mode=min(mode, LogicMode.INTUITIONISTIC))
    assert check_hilbert(proof, mode).accepted
    nd = translate_hilbert_to_nd(proof, mode)
    assert check_nd(nd, mode).accepted
    assert nd.conclusion == to_bot_form(proof.steps[-1].statement)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_proofs_are_monotone_in_mode(seed):
    proof = random_hilbert_proof(random.Random(seed), max_lines=15)
    assert all(check_hilbert(proof, m).accepted for m in LogicMode)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.data())
def test_mutating_any_line_is_rejected(seed, data):
    proof = random_hilbert_proof(random.Random(seed), max_lines=15)
    i = data.draw(st.integers(1, len(proof.steps)))
    step = proof.steps[i - 1]
    marker = MemSN(ZERO, Var("Mutant", Sort.SECOND))
    mutated = with_step(proof, i, replace(step, statement=And(step.statement, marker)))
    r = check_hilbert(mutated, LogicMode.MINIMAL)
    assert not r.accepted
    assert r.diagnostics[0].index == i


@settings(max_examples=60)
@given(st.integers(1, 9), st.data())
def test_scheme_disjointness(k, data):
    """A scheme line is accepted exactly when its statement is the instance of its bindings."""
    from cmproof.generate import random_formula

    rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
    metas = {1: "phi psi", 2: "phi psi sigma", 8: "phi psi sigma"}.get(k, "phi psi").split()
    bindings = {m: random_formula(rng, 2, negation="neg") for m in metas}
    other = random_formula(rng, 3, negation="neg")
    inst = scheme_instance(k, bindings)
    r = check_hilbert([HilbertLine(1, other, AxiomScheme(k, bindings))], LogicMode.MINIMAL)
    assert r.accepted == alpha_equal(other, inst)
    assert check_hilbert([HilbertLine(1, inst, AxiomScheme(k, bindings))], LogicMode.MINIMAL).accepted
