"""Authored proofs, proof generators and the bundled derived rules.

The ``.cmp`` files under ``v1/`` are produced from the builders here by
:func:`write_corpus`; the test suite checks that they stay in sync.
"""
from __future__ import annotations

from pathlib import Path
from typing import Callable

from ..axioms import SchemeId, SchemeInstance, Template
from ..errors import ArityError, KernelError, NotArithmetical, ProvisoViolation, SortError
from ..hilbert import AxiomScheme, HilbertLine, MP, nd_scheme_derivation, scheme_instance
from ..kernel_nd import DerivedRule, LogicMode, ProofScript, register_derived_rule
from ..surface import format_proof, parse_formula, parse_term
from ..syntax import (
    BOT, ZERO, And, Eq, Exists, Forall, Formula, Imp, MemSN, Not, Or, Pair, Sort, Succ,
    Var, all_vars, fresh_var, free_vars, iff, instantiate_bound, is_arithmetical,
    numeral, to_bot_form,
)
from .builder import ScriptBuilder

P, T = parse_formula, parse_term

# propositional placeholders used throughout the corpus
PHI, PSI, SIGMA = P("0 in A"), P("0 in B"), P("0 in C")
n = Var("n")
A = Var("A", Sort.SECOND)
PHI_N = MemSN(n, A)  # phi(n) := n in A


def _neg(f: Formula) -> Formula:
    return Imp(f, BOT)


# -- the worked example and the exercises ------------------------------------


def contraposition(a: Formula = PHI, c: Formula = PSI) -> ProofScript:
    b = ScriptBuilder()
    s1 = b.assume(Imp(a, c))
    s2 = b.assume(_neg(c))
    s3 = b.assume(a)
    s4 = b.imp_e(s1, s3)
    b.imp_e(s2, s4)
    b.imp_i(b.close())
    b.imp_i(b.close())
    b.imp_i(b.close())
    claim = Imp(Imp(a, c), Imp(_neg(c), _neg(a)))
    return b.script(LogicMode.MINIMAL, "contraposition", claim, "worked example of natural deduction")


def neg_or_iff_and_neg() -> ProofScript:
    b = ScriptBuilder()
    left, right = _neg(Or(PHI, PSI)), And(_neg(PHI), _neg(PSI))
    h = b.assume(left)
    a = b.assume(PHI)
    b.imp_e(h, b.or_i1(a, PSI))
    nphi = b.imp_i(b.close())
    a = b.assume(PSI)
    b.imp_e(h, b.or_i2(a, PHI))
    npsi = b.imp_i(b.close())
    b.and_i(nphi, npsi)
    forward = b.imp_i(b.close())
    h = b.assume(right)
    d = b.assume(Or(PHI, PSI))
    n1, n2 = b.and_e1(h), b.and_e2(h)
    a = b.assume(PHI)
    b.imp_e(n1, a)
    left_case = b.close()
    a = b.assume(PSI)
    b.imp_e(n2, a)
    right_case = b.close()
    b.or_e(d, left_case, right_case)
    b.imp_i(b.close())
    backward = b.imp_i(b.close())
    b.and_i(forward, backward)
    return b.script(LogicMode.MINIMAL, "neg_or_iff_and_neg", iff(left, right), "exercise: De Morgan law for disjunction")


def neg_or_to_neg_and() -> ProofScript:
    b = ScriptBuilder()
    d = b.assume(Or(_neg(PHI), _neg(PSI)))
    c = b.assume(And(PHI, PSI))
    a = b.assume(_neg(PHI))
    b.imp_e(a, b.and_e1(c))
    left_case = b.close()
    a = b.assume(_neg(PSI))
    b.imp_e(a, b.and_e2(c))
    right_case = b.close()
    b.or_e(d, left_case, right_case)
    b.imp_i(b.close())
    b.imp_i(b.close())
    claim = Imp(Or(_neg(PHI), _neg(PSI)), _neg(And(PHI, PSI)))
    return b.script(LogicMode.MINIMAL, "neg_or_to_neg_and", claim, "exercise: weak De Morgan law for conjunction")


def disjunctive_syllogism() -> ProofScript:
    b = ScriptBuilder()
    h = b.assume(And(Or(PHI, PSI), _neg(PHI)))
    d, nphi = b.and_e1(h), b.and_e2(h)
    a = b.assume(PHI)
    b.ex_falso(b.imp_e(nphi, a), PSI)
    left_case = b.close()
    b.assume(PSI)
    right_case = b.close()
    b.or_e(d, left_case, right_case)
    b.imp_i(b.close())
    claim = Imp(And(Or(PHI, PSI), _neg(PHI)), PSI)
    return b.script(LogicMode.INTUITIONISTIC, "disjunctive_syllogism", claim, "basic law that needs ex falso")


def forall_neg_iff_neg_exists() -> ProofScript:
    b = ScriptBuilder()
    all_neg, no_ex = Forall(n, _neg(PHI_N)), _neg(Exists(n, PHI_N))
    h = b.assume(all_neg)
    e = b.assume(Exists(n, PHI_N))
    w = b.assume(PHI_N)
    b.imp_e(b.forall_e(h, n), w)
    b.exists_e(e, b.close(), n)
    b.imp_i(b.close())
    forward = b.imp_i(b.close())
    h = b.assume(no_ex)
    a = b.assume(PHI_N)
    b.imp_e(h, b.exists_i(a, n, Exists(n, PHI_N)))
    b.forall_i(b.imp_i(b.close()), n)
    backward = b.imp_i(b.close())
    b.and_i(forward, backward)
    return b.script(LogicMode.MINIMAL, "forall_neg_iff_neg_exists", iff(all_neg, no_ex), "quantifier exercise")


def exists_neg_to_neg_forall() -> ProofScript:
    b = ScriptBuilder()
    e = b.assume(Exists(n, _neg(PHI_N)))
    f = b.assume(Forall(n, PHI_N))
    w = b.assume(_neg(PHI_N))
    b.imp_e(w, b.forall_e(f, n))
    b.exists_e(e, b.close(), n)
    b.imp_i(b.close())
    b.imp_i(b.close())
    claim = Imp(Exists(n, _neg(PHI_N)), _neg(Forall(n, PHI_N)))
    return b.script(LogicMode.MINIMAL, "exists_neg_to_neg_forall", claim, "quantifier exercise")


def modus_tollens() -> ProofScript:
    b = ScriptBuilder()
    h = b.assume(And(Imp(PHI, PSI), _neg(PSI)))
    imp, npsi = b.and_e1(h), b.and_e2(h)
    c = b.derived("contraposition", Imp(PHI, PSI))
    b.imp_e(b.imp_e(c, imp), npsi)
    b.imp_i(b.close())
    claim = Imp(And(Imp(PHI, PSI), _neg(PSI)), _neg(PHI))
    return b.script(LogicMode.MINIMAL, "modus_tollens", claim, "use of the contraposition derived rule")


# -- Hilbert schemes as natural deduction ------------------------------------

SCHEME_BINDINGS: dict[int, dict[str, object]] = {
    **{k: {"phi": PHI, "psi": PSI} for k in (1, 3, 4, 5, 6, 7, 9, 12)},
    2: {"phi": PHI, "psi": PSI, "sigma": SIGMA},
    8: {"phi": PHI, "psi": PSI, "sigma": SIGMA},
    10: {"phi": Template((n,), PHI_N), "t": ZERO},
    11: {"phi": Template((n,), PHI_N), "t": ZERO},
    13: {"phi": PHI},
}


def scheme_mode(k: int) -> LogicMode:
    return LogicMode.MINIMAL if k <= 11 else LogicMode.INTUITIONISTIC if k == 12 else LogicMode.CM


def hilbert_scheme_entry(k: int) -> ProofScript:
    bindings = SCHEME_BINDINGS[k]
    steps = tuple(nd_scheme_derivation(k, bindings))
    claim = to_bot_form(scheme_instance(k, bindings))
    return ProofScript(steps, "nd", scheme_mode(k), claim, f"hilbert_scheme_{k:02d}", f"logical axiom scheme {k} derived in natural deduction")


def hilbert_identity() -> ProofScript:
    pp = Imp(PHI, PHI)
    lines = (
        HilbertLine(1, Imp(PHI, Imp(pp, PHI)), AxiomScheme(1, {"phi": PHI, "psi": pp})),
        HilbertLine(2, scheme_instance(2, {"phi": PHI, "psi": pp, "sigma": PHI}), AxiomScheme(2, {"phi": PHI, "psi": pp, "sigma": PHI})),
        HilbertLine(3, Imp(PHI, pp), AxiomScheme(1, {"phi": PHI, "psi": PHI})),
        HilbertLine(4, Imp(Imp(PHI, Imp(pp, PHI)), pp), MP(2, 3)),
        HilbertLine(5, pp, MP(4, 1)),
    )
    return ProofScript(lines, "hilbert", LogicMode.MINIMAL, pp, "hilbert_identity", "identity law from schemes 1 and 2")


def hilbert_em() -> ProofScript:
    phi = Forall(n, PHI_N)
    lines = (HilbertLine(1, Or(phi, Not(phi)), AxiomScheme(13, {"phi": phi})),)
    return ProofScript(lines, "hilbert", LogicMode.CM, Or(phi, Not(phi)), "hilbert_em", "excluded middle for an arithmetical formula")


# -- arithmetical comprehension ------------------------------------------------


def gen_arith_comprehension(template: Template, level: str | int = "second", bound: Var | None = None) -> ProofScript:
    """CM proof of ``exists X. forall n. n in X <-> phi(n)`` (or the class analogue).

    ``phi`` must have no set or class quantifiers.  Excluded middle for
    ``phi(n)`` discharges the decidability premise of the comprehension axiom.
    """
    level = {2: "second", 3: "third"}.get(level, level)  # type: ignore[arg-type]
    if level not in ("second", "third"):
        raise ValueError(f"level must be 'second' or 'third', not {level!r}")
    if len(template.slots) != 1:
        raise ArityError(f"comprehension needs a template with one slot, not {len(template.slots)}")
    x = template.slots[0]
    want = Sort.FIRST if level == "second" else Sort.SECOND
    if x.sort != want:
        raise SortError(f"{level}-level comprehension needs a {'number' if want == Sort.FIRST else 'set'} slot, not {x.name}")
    if not is_arithmetical(template.body):
        raise NotArithmetical(f"{template.body} quantifies over sets or classes")
    if bound is None:
        bound = Var("X", Sort.SECOND) if level == "second" else Var("@X", Sort.THIRD)
    if bound in free_vars(template.body):
        raise ProvisoViolation(f"{bound.name} occurs free in the comprehension formula")
    sid, role = (SchemeId.Compr2, "X") if level == "second" else (SchemeId.Compr3, "@X")
    b = ScriptBuilder()
    em = b.em(template.body)
    gen = b.forall_i(em, x)
    ax = b.axiom(SchemeInstance(sid, template, {role: bound}))
    b.imp_e(ax, gen)
    return b.script(LogicMode.CM, claim=b.stmt(b.last))


def arith_comprehension_entry(name: str, template: Template, level: str, source: str) -> ProofScript:
    s = gen_arith_comprehension(template, level)
    return ProofScript(s.steps, "nd", LogicMode.CM, s.conclusion, name, source)


# -- numerical omniscience -----------------------------------------------------


def _fresh(sort: Sort, avoid: set, base: str) -> Var:
    v = fresh_var(sort, avoid, base)
    avoid.add(v)
    return v


def numerical_omniscience_proof(h: Formula) -> ProofScript:
    """CM proof of ``h -> (forall n. phi(n)) \\/ (exists n. psi(n))`` for
    ``h = forall n. phi(n) \\/ psi(n)``.

    Dependent choice picks, for each ``n``, a set recording which disjunct
    holds; comprehension turns that record into a set ``Y`` with
    ``n in Y`` exactly when the left disjunct was chosen, and excluded
    middle for the arithmetical ``forall n. n in Y`` decides the result.
    """
    h = to_bot_form(h)
    if not (isinstance(h, Forall) and h.var.sort == Sort.FIRST and isinstance(h.body, Or)):
        raise KernelError("RuleMismatch", "numerical omniscience needs an input of the form forall n. A \\/ B")
    n = h.var
    phi, psi = h.body.left, h.body.right
    avoid = set(all_vars(h))
    W = _fresh(Sort.SECOND, avoid, "W")
    X = _fresh(Sort.SECOND, avoid, "X")
    Y = _fresh(Sort.SECOND, avoid, "Y")
    Z = _fresh(Sort.SECOND, avoid, "Z")
    m = _fresh(Sort.FIRST, avoid, "m")
    conclusion = Or(Forall(n, phi), Exists(n, psi))

    zero_in = MemSN(ZERO, Y)
    delta = Or(And(phi, zero_in), And(psi, _neg(zero_in)))  # delta(n, X, Y)
    step = Exists(Y, delta)
    in_y = MemSN(n, Y)
    marked = MemSN(Pair(Succ(n), ZERO), Z)  # 0 in Z_(n')
    all_y, some_not_y = Forall(n, in_y), Exists(n, _neg(in_y))

    b = ScriptBuilder()
    hyp = b.assume(h)
    full = b.include(gen_arith_comprehension(Template((m,), _neg(BOT)), "second", W))
    empty = b.include(gen_arith_comprehension(Template((m,), Eq(m, numeral(1))), "second", W))

    # for each n there is a set Y with delta(n, X, Y)
    case = b.forall_e(hyp, n)
    a = b.assume(phi)
    w = b.assume(Forall(m, iff(MemSN(m, W), _neg(BOT))))
    back = b.and_e2(b.forall_e(w, ZERO))
    top = b.assume(BOT)
    top = b.imp_i(b.close())
    pair = b.and_i(a, b.imp_e(back, top))
    b.exists_i(b.or_i1(pair, And(psi, _neg(MemSN(ZERO, W)))), W, step)
    b.exists_e(full, b.close(), W)
    left = b.close()
    a = b.assume(psi)
    w = b.assume(Forall(m, iff(MemSN(m, W), Eq(m, numeral(1)))))
    out = b.and_e1(b.forall_e(w, ZERO))
    pair = b.and_i(a, out)
    b.exists_i(b.or_i2(pair, And(phi, MemSN(ZERO, W))), W, step)
    b.exists_e(empty, b.close(), W)
    right = b.close()
    total = b.forall_i(b.forall_i(b.or_e(case, left, right), X), n)

    # dependent choice, applied from an arbitrary starting set
    dc = b.axiom(SchemeInstance(SchemeId.DependentChoice, Template((n, X, Y), delta), {"Z": Z, "m": m}))
    seq = b.forall_e(b.imp_e(dc, total), X)
    zb = b.assume(b.stmt(seq).body)
    chain = b.and_e2(zb)

    # Y collects the n whose successor stage contains 0
    compr = b.include(gen_arith_comprehension(Template((n,), marked), "second", Y))
    yb = b.assume(Forall(n, iff(in_y, marked)))

    # forall n. n in Y  \/  exists n. ~(n in Y), by excluded middle
    em1 = b.em(all_y)
    a = b.assume(all_y)
    b.or_i1(a, some_not_y)
    c1 = b.close()
    no_all = b.assume(_neg(all_y))
    em2 = b.em(some_not_y)
    a = b.assume(some_not_y)
    b.or_i2(a, all_y)
    c2 = b.close()
    no_some = b.assume(_neg(some_not_y))
    em3 = b.em(in_y)
    b.assume(in_y)
    d1 = b.close()
    a = b.assume(_neg(in_y))
    b.ex_falso(b.imp_e(no_some, b.exists_i(a, n, some_not_y)), in_y)
    d2 = b.close()
    every = b.forall_i(b.or_e(em3, d1, d2), n)
    b.ex_falso(b.imp_e(no_all, every), Or(all_y, some_not_y))
    c3 = b.close()
    b.or_e(em2, c2, c3)
    c4 = b.close()
    decided = b.or_e(em1, c1, c4)

    # read the answer off Y
    a = b.assume(all_y)
    mark = b.imp_e(b.and_e1(b.forall_e(yb, n)), b.forall_e(a, n))
    at_n = b.forall_e(chain, n)
    k = b.assume(And(phi, marked))
    b.and_e1(k)
    k1 = b.close()
    k = b.assume(And(psi, _neg(marked)))
    b.ex_falso(b.imp_e(b.and_e2(k), mark), phi)
    k2 = b.close()
    b.or_i1(b.forall_i(b.or_e(at_n, k1, k2), n), Exists(n, psi))
    e1 = b.close()
    a = b.assume(some_not_y)
    w = b.assume(_neg(in_y))
    at_n = b.forall_e(chain, n)
    unmark = b.and_e2(b.forall_e(yb, n))
    k = b.assume(And(phi, marked))
    b.ex_falso(b.imp_e(w, b.imp_e(unmark, b.and_e2(k))), psi)
    k1 = b.close()
    k = b.assume(And(psi, _neg(marked)))
    b.and_e1(k)
    k2 = b.close()
    b.or_i2(b.exists_i(b.or_e(at_n, k1, k2), n, Exists(n, psi)), Forall(n, phi))
    b.exists_e(a, b.close(), n)
    e2 = b.close()
    b.or_e(decided, e1, e2)

    b.exists_e(compr, b.close(), Y)
    b.exists_e(seq, b.close(), Z)
    b.imp_i(b.close())
    return b.script(LogicMode.CM, claim=Imp(h, conclusion))


NO_HYPOTHESIS = Forall(n, Or(PHI_N, _neg(PHI_N)))


def numerical_omniscience_statement() -> Formula:
    """The concrete instance: phi(n) := n in A, psi(n) := ~(n in A)."""
    return Imp(NO_HYPOTHESIS, Or(Forall(n, PHI_N), Exists(n, _neg(PHI_N))))


def numerical_omniscience() -> ProofScript:
    s = numerical_omniscience_proof(NO_HYPOTHESIS)
    return ProofScript(s.steps, "nd", LogicMode.CM, numerical_omniscience_statement(), "numerical_omniscience",
                       "numerical omniscience via dependent choice and arithmetical comprehension")


def omniscience_em_corollary() -> ProofScript:
    b = ScriptBuilder()
    all_phi = Forall(n, PHI_N)
    h = b.assume(NO_HYPOTHESIS)
    split = b.imp_e(b.derived("numerical_omniscience", NO_HYPOTHESIS), h)
    a = b.assume(all_phi)
    b.or_i1(a, _neg(all_phi))
    left = b.close()
    e = b.assume(Exists(n, _neg(PHI_N)))
    f = b.assume(all_phi)
    w = b.assume(_neg(PHI_N))
    b.imp_e(w, b.forall_e(f, n))
    b.exists_e(e, b.close(), n)
    b.or_i2(b.imp_i(b.close()), all_phi)
    right = b.close()
    b.or_e(split, left, right)
    b.imp_i(b.close())
    claim = Imp(NO_HYPOTHESIS, Or(all_phi, _neg(all_phi)))
    return b.script(LogicMode.CM, "numerical_omniscience_em", claim, "special case of numerical omniscience: excluded middle for forall n. n in A")


# -- arithmetic ------------------------------------------------------------------


def zero_left_identity() -> ProofScript:
    """``forall n. 0 + n = n`` by induction."""
    m, a, c, d = Var("m"), Var("a"), Var("c"), Var("d")
    body = Eq(T("0 + n"), n)
    b = ScriptBuilder()
    base = b.forall_e(b.forall_i(b.axiom(SchemeInstance(SchemeId.Num3, variables={"m": m})), m), ZERO)
    ih = b.assume(body)
    num4 = b.forall_e(b.forall_i(b.axiom(SchemeInstance(SchemeId.Num4, variables={"m": m, "n": n})), m), ZERO)
    cong = b.axiom(SchemeInstance(SchemeId.EqCongSucc, variables={"m": a, "n": c}))
    succ = b.imp_e(b.forall_e(b.forall_e(cong, T("0 + n")), n), ih)
    trans = b.axiom(SchemeInstance(SchemeId.EqTrans, variables={"k": a, "m": c, "n": d}))
    t = b.forall_e(b.forall_e(b.forall_e(trans, T("0 + n'")), T("(0 + n)'")), T("n'"))
    b.imp_e(b.imp_e(t, num4), succ)
    stepcase = b.forall_i(b.imp_i(b.close()), n)
    both = b.and_i(base, stepcase)
    ind = b.axiom(SchemeInstance(SchemeId.Induction, Template((n,), body)))
    b.imp_e(ind, both)
    return b.script(LogicMode.CM, "zero_left_identity", Forall(n, body), "induction example: 0 is a left identity for +")


def dne_proof(phi: Formula) -> ProofScript:
    """``~~phi -> phi`` from excluded middle; needs ``phi`` arithmetical."""
    b = ScriptBuilder()
    h = b.assume(_neg(_neg(phi)))
    em = b.em(phi)
    b.assume(phi)
    yes = b.close()
    a = b.assume(_neg(phi))
    b.ex_falso(b.imp_e(h, a), phi)
    no = b.close()
    b.or_e(em, yes, no)
    b.imp_i(b.close())
    return b.script(LogicMode.CM)


def dne_forall() -> ProofScript:
    phi = Forall(n, PHI_N)
    b = ScriptBuilder()
    b.derived("dne_arithmetical", phi)
    return b.script(LogicMode.CM, "dne_forall", Imp(_neg(_neg(phi)), phi), "double negation elimination for an arithmetical formula")


# -- registry ----------------------------------------------------------------------

def _contraposition_rule(f: Formula) -> ProofScript:
    f = to_bot_form(f)
    if not isinstance(f, Imp):
        raise KernelError("RuleMismatch", "contraposition needs an implication A -> B")
    return contraposition(f.left, f.right)


register_derived_rule(DerivedRule(
    "contraposition", LogicMode.MINIMAL, _contraposition_rule, "for A -> B, the theorem (A -> B) -> (~B -> ~A)",
))
register_derived_rule(DerivedRule("dne_arithmetical", LogicMode.CM, dne_proof, "the theorem ~~A -> A for arithmetical A"))
register_derived_rule(DerivedRule(
    "numerical_omniscience", LogicMode.CM, numerical_omniscience_proof,
    "from forall n. A(n) \\/ B(n), the theorem (forall n. A(n) \\/ B(n)) -> (forall n. A(n)) \\/ exists n. B(n)",
))

ENTRIES: dict[str, Callable[[], ProofScript]] = {
    "contraposition": contraposition,
    "neg_or_iff_and_neg": neg_or_iff_and_neg,
    "neg_or_to_neg_and": neg_or_to_neg_and,
    "disjunctive_syllogism": disjunctive_syllogism,
    "forall_neg_iff_neg_exists": forall_neg_iff_neg_exists,
    "exists_neg_to_neg_forall": exists_neg_to_neg_forall,
    "modus_tollens": modus_tollens,
    **{f"hilbert_scheme_{k:02d}": (lambda k=k: hilbert_scheme_entry(k)) for k in range(1, 14)},
    "hilbert_identity": hilbert_identity,
    "hilbert_em": hilbert_em,
    "arith_comprehension_refl": lambda: arith_comprehension_entry(
        "arith_comprehension_refl", Template((n,), P("n = n")), "second", "arithmetical comprehension for n = n"),
    "arith_comprehension_class": lambda: arith_comprehension_entry(
        "arith_comprehension_class", Template((Var("X", Sort.SECOND),), P("0 in X")), "third",
        "arithmetical comprehension at the class level for 0 in X"),
    "numerical_omniscience": numerical_omniscience,
    "numerical_omniscience_em": omniscience_em_corollary,
    "zero_left_identity": zero_left_identity,
    "dne_forall": dne_forall,
}


def build_entry(name: str) -> ProofScript:
    return ENTRIES[name]()


def write_corpus(directory: str | Path) -> list[Path]:
    """Regenerate the ``.cmp`` files from the builders."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in sorted(ENTRIES):
        path = directory / f"{name}.cmp"
        path.write_text(format_proof(build_entry(name)), encoding="utf-8")
        out.append(path)
    return out
