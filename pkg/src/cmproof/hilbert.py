"""Hilbert-style proofs: three rules and axiom schemes 1-13.

Statements use primitive negation.  Each axiom line carries explicit
bindings for the scheme's metavariables and is checked by building the
instance and comparing, never by matching.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .axioms import CMPLUS_IDS, Template, instantiate
from .errors import CMError, KernelError, UnsupportedRule
from .kernel_nd import (
    EM, AndE1, AndE2, AndI, Assume, CheckResult, Diagnostic, ExFalso, ExistsI,
    ForallE, ImpE, ImpI, LogicMode, NonLogical, OrE, OrI1, OrI2, ProofScript,
    ProofStep, Reiterate, make_result, renumber_justification,
)
from .syntax import (
    BOT, And, Exists, Forall, Formula, FormulaClass, Imp, Not, Or, Sort, Var,
    alpha_equal, classify, free_for, free_vars, instantiate_bound, is_term,
    to_bot_form, to_neg_form,
)

SCHEME_METAS: dict[int, tuple[str, ...]] = {
    1: ("phi", "psi"),
    2: ("phi", "psi", "sigma"),
    3: ("phi", "psi"),
    4: ("phi", "psi"),
    5: ("phi", "psi"),
    6: ("phi", "psi"),
    7: ("phi", "psi"),
    8: ("phi", "psi", "sigma"),
    9: ("phi", "psi"),
    10: ("phi", "t"),
    11: ("phi", "t"),
    12: ("phi", "psi"),
    13: ("phi",),
}


@dataclass(frozen=True)
class AxiomScheme:
    """Scheme ``k`` with bindings: ``phi``/``psi``/``sigma`` map to templates
    (one slot for schemes 10 and 11, none otherwise) and ``t`` to a term."""

    k: int
    bindings: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class MP:
    i: int
    j: int


@dataclass(frozen=True)
class Gen:
    i: int
    x: Var


@dataclass(frozen=True)
class ExRule:
    i: int
    x: Var


HilbertJustification = Union[AxiomScheme, NonLogical, MP, Gen, ExRule]


@dataclass(frozen=True)
class HilbertLine:
    index: int
    statement: Formula
    justification: HilbertJustification


def _formula(bindings: Mapping[str, object], name: str) -> Formula:
    b = bindings.get(name)
    if isinstance(b, Template):
        if b.slots:
            raise KernelError("SchemeMismatch", f"{name} takes no arguments in this scheme")
        return b.body
    if b is None:
        raise KernelError("SchemeMismatch", f"missing binding for {name}")
    return b  # type: ignore[return-value]


def scheme_instance(k: int, bindings: Mapping[str, object]) -> Formula:
    """The instance of logical axiom scheme ``k`` (negation-primitive form)."""
    if k not in SCHEME_METAS:
        raise KernelError("SchemeMismatch", f"there is no axiom scheme {k}")
    extra = set(bindings) - set(SCHEME_METAS[k])
    if extra:
        raise KernelError("SchemeMismatch", f"scheme {k} has no metavariable(s) {sorted(extra)}")
    if k in (10, 11):
        phi = bindings.get("phi")
        t = bindings.get("t")
        if not isinstance(phi, Template) or len(phi.slots) != 1:
            raise KernelError("SchemeMismatch", f"scheme {k} needs phi with one argument, e.g. phi(n) := ...")
        x = phi.slots[0]
        if t is None:
            raise KernelError("SchemeMismatch", f"scheme {k} needs a binding for t")
        if not (is_term(t) if x.sort == Sort.FIRST else isinstance(t, Var) and t.sort == x.sort):
            raise KernelError("SortError", f"{t} cannot be substituted for {x.name}")
        if not free_for(t, x, phi.body):
            raise KernelError("SideConditionViolation", f"{t} is not free for {x.name} in {phi.body}")
        inst = instantiate_bound(phi.body, x, t)
        if k == 10:
            return Imp(inst, Exists(x, phi.body))
        return Imp(Forall(x, phi.body), inst)
    f = {name: _formula(bindings, name) for name in SCHEME_METAS[k]}
    p, q, s = f.get("phi"), f.get("psi"), f.get("sigma")
    match k:
        case 1:
            return Imp(p, Imp(q, p))
        case 2:
            return Imp(Imp(p, q), Imp(Imp(p, Imp(q, s)), Imp(p, s)))
        case 3:
            return Imp(p, Imp(q, And(p, q)))
        case 4:
            return Imp(And(p, q), p)
        case 5:
            return Imp(And(p, q), q)
        case 6:
            return Imp(p, Or(p, q))
        case 7:
            return Imp(q, Or(p, q))
        case 8:
            return Imp(Imp(p, s), Imp(Imp(q, s), Imp(Or(p, q), s)))
        case 9:
            return Imp(Imp(p, q), Imp(Imp(p, Not(q)), Not(p)))
        case 12:
            return Imp(p, Imp(Not(p), q))
        case 13:
            return Or(p, Not(p))
    raise AssertionError(k)


def _ref(lines: dict[int, Formula], here: int, i: int) -> Formula:
    if i >= here or i not in lines:
        raise KernelError("ScopeViolation", f"line {i} is not an earlier line")
    return lines[i]


def _check_line(lines: dict[int, Formula], idx: int, phi: Formula, j: HilbertJustification, mode: LogicMode) -> None:
    match j:
        case AxiomScheme(k, bindings):
            if k == 12 and mode < LogicMode.INTUITIONISTIC:
                raise KernelError("ModeViolation", "scheme 12 is not part of minimal logic")
            if k == 13 and mode < LogicMode.CM:
                raise KernelError("ModeViolation", f"scheme 13 is not available in {mode.label} mode")
            inst = scheme_instance(k, bindings)
            if k == 13 and classify(_formula(bindings, "phi")) == FormulaClass.GENERAL:
                raise KernelError("ModeViolation", "scheme 13 only applies to formulas without set or class quantifiers")
            if not alpha_equal(to_neg_form(inst), phi):
                raise KernelError("SchemeMismatch", f"statement is not the instance of scheme {k}")
        case NonLogical(inst):
            if mode < LogicMode.CM or (inst.id in CMPLUS_IDS and mode < LogicMode.CMPLUS):
                raise KernelError("ModeViolation", f"axiom {inst.id.value} is not available in {mode.label} mode")
            try:
                ax = instantiate(inst)
            except CMError as exc:
                raise KernelError(exc.code, str(exc)) from None
            if not alpha_equal(to_neg_form(ax), phi):
                raise KernelError("SchemeMismatch", f"statement is not the {inst.id.value} instance")
        case MP(i, k):
            a, b = _ref(lines, idx, i), _ref(lines, idx, k)
            if not any(isinstance(f, Imp) and alpha_equal(f.left, g) and alpha_equal(f.right, phi)
                       for f, g in ((a, b), (b, a))):
                raise KernelError("SchemeMismatch", f"lines {i} and {k} do not give the statement by modus ponens")
        case Gen(i, x):
            a = _ref(lines, idx, i)
            if not isinstance(a, Imp):
                raise KernelError("SchemeMismatch", f"line {i} is not an implication")
            if not alpha_equal(phi, Imp(a.left, Forall(x, a.right))):
                raise KernelError("SchemeMismatch", f"statement is not line {i} generalized over {x.name}")
            if x in free_vars(a.left):
                raise KernelError("SideConditionViolation", f"{x.name} occurs free in the antecedent")
        case ExRule(i, x):
            a = _ref(lines, idx, i)
            if not isinstance(a, Imp):
                raise KernelError("SchemeMismatch", f"line {i} is not an implication")
            if not alpha_equal(phi, Imp(Exists(x, a.left), a.right)):
                raise KernelError("SchemeMismatch", f"statement is not line {i} with {x.name} bound in the antecedent")
            if x in free_vars(a.right):
                raise KernelError("SideConditionViolation", f"{x.name} occurs free in the consequent")
        case _:
            raise KernelError("SchemeMismatch", f"unknown justification {j!r}")


def _lines_of(proof: ProofScript | Sequence[HilbertLine]) -> tuple[Sequence[HilbertLine], str | None]:
    if isinstance(proof, ProofScript):
        return proof.steps, proof.name
    return proof, None


def check_hilbert(proof: ProofScript | Sequence[HilbertLine], mode: LogicMode | str) -> CheckResult:
    mode = LogicMode.parse(mode)
    lines_in, name = _lines_of(proof)
    lines: dict[int, Formula] = {}
    diags: list[Diagnostic] = []
    if not lines_in:
        diags.append(Diagnostic(0, "EmptyScript", "the proof has no lines"))
    for n, line in enumerate(lines_in, 1):
        if line.index != n:
            diags.append(Diagnostic(line.index, "ScopeViolation", f"expected line number {n}"))
        phi = to_neg_form(line.statement)
        lines[n] = phi
        try:
            _check_line(lines, n, phi, line.justification, mode)
        except CMError as exc:
            diags.append(Diagnostic(n, exc.code, str(exc)))
    if isinstance(proof, ProofScript) and proof.claim is not None and lines_in:
        if not alpha_equal(to_neg_form(proof.claim), lines[len(lines_in)]):
            diags.append(Diagnostic(len(lines_in), "ClaimMismatch", "the final line is not the declared claim"))
    return make_result(diags, mode, name)


# -- translation to natural deduction ----------------------------------------


def _nd(rows: list[tuple[int, Formula, object]]) -> list[ProofStep]:
    return [ProofStep(i + 1, f, j, d) for i, (d, f, j) in enumerate(rows)]


def nd_scheme_derivation(k: int, bindings: Mapping[str, object]) -> list[ProofStep]:
    """A closed natural-deduction derivation of the scheme ``k`` instance.

    Schemes 1-11 use only minimal rules, 12 needs ex falso, 13 is excluded middle.
    """
    inst = to_bot_form(scheme_instance(k, bindings))
    if k in (10, 11):
        phi = bindings["phi"]
        x, t = phi.slots[0], bindings["t"]
        body = to_bot_form(phi.body)
        if k == 10:
            return _nd([
                (1, inst.left, Assume()),
                (1, Exists(x, body), ExistsI(1, t, x)),
                (0, inst, ImpI((1, 2))),
            ])
        return _nd([
            (1, inst.left, Assume()),
            (1, inst.right, ForallE(1, t)),
            (0, inst, ImpI((1, 2))),
        ])
    f = {name: to_bot_form(_formula(bindings, name)) for name in SCHEME_METAS[k]}
    p, q, s = f.get("phi"), f.get("psi"), f.get("sigma")
    match k:
        case 1:
            return _nd([
                (1, p, Assume()),
                (2, q, Assume()),
                (2, p, Reiterate(1)),
                (1, Imp(q, p), ImpI((2, 3))),
                (0, inst, ImpI((1, 4))),
            ])
        case 2:
            return _nd([
                (1, Imp(p, q), Assume()),
                (2, Imp(p, Imp(q, s)), Assume()),
                (3, p, Assume()),
                (3, q, ImpE(1, 3)),
                (3, Imp(q, s), ImpE(2, 3)),
                (3, s, ImpE(5, 4)),
                (2, Imp(p, s), ImpI((3, 6))),
                (1, inst.right, ImpI((2, 7))),
                (0, inst, ImpI((1, 8))),
            ])
        case 3:
            return _nd([
                (1, p, Assume()),
                (2, q, Assume()),
                (2, And(p, q), AndI(1, 2)),
                (1, inst.right, ImpI((2, 3))),
                (0, inst, ImpI((1, 4))),
            ])
        case 4 | 5:
            return _nd([
                (1, And(p, q), Assume()),
                (1, p if k == 4 else q, AndE1(1) if k == 4 else AndE2(1)),
                (0, inst, ImpI((1, 2))),
            ])
        case 6 | 7:
            return _nd([
                (1, p if k == 6 else q, Assume()),
                (1, Or(p, q), OrI1(1) if k == 6 else OrI2(1)),
                (0, inst, ImpI((1, 2))),
            ])
        case 8:
            return _nd([
                (1, Imp(p, s), Assume()),
                (2, Imp(q, s), Assume()),
                (3, Or(p, q), Assume()),
                (4, p, Assume()),
                (4, s, ImpE(1, 4)),
                (4, q, Assume()),
                (4, s, ImpE(2, 6)),
                (3, s, OrE(3, (4, 5), (6, 7))),
                (2, Imp(Or(p, q), s), ImpI((3, 8))),
                (1, inst.right, ImpI((2, 9))),
                (0, inst, ImpI((1, 10))),
            ])
        case 9:
            return _nd([
                (1, Imp(p, q), Assume()),
                (2, Imp(p, Imp(q, BOT)), Assume()),
                (3, p, Assume()),
                (3, q, ImpE(1, 3)),
                (3, Imp(q, BOT), ImpE(2, 3)),
                (3, BOT, ImpE(5, 4)),
                (2, Imp(p, BOT), ImpI((3, 6))),
                (1, inst.right, ImpI((2, 7))),
                (0, inst, ImpI((1, 8))),
            ])
        case 12:
            return _nd([
                (1, p, Assume()),
                (2, Imp(p, BOT), Assume()),
                (2, BOT, ImpE(2, 1)),
                (2, q, ExFalso(3)),
                (1, inst.right, ImpI((2, 4))),
                (0, inst, ImpI((1, 5))),
            ])
        case 13:
            return _nd([(0, inst, EM())])
    raise AssertionError(k)


def translate_hilbert_to_nd(proof: ProofScript | Sequence[HilbertLine], mode: LogicMode | str) -> ProofScript:
    """Natural-deduction script proving the same conclusion as ``proof``.

    Axiom lines become closed derivations of their instances, modus ponens
    becomes implication elimination.  The quantifier rules are not supported.
    """
    mode = LogicMode.parse(mode)
    lines, name = _lines_of(proof)
    steps: list[ProofStep] = []
    where: dict[int, int] = {}
    for line in lines:
        j = line.justification
        base = len(steps)
        if isinstance(j, (Gen, ExRule)):
            raise UnsupportedRule(f"line {line.index}: {type(j).__name__} has no translation")
        if isinstance(j, AxiomScheme):
            for s in nd_scheme_derivation(j.k, j.bindings):
                steps.append(ProofStep(s.index + base, s.statement, _shift(s.justification, base), s.depth))
        elif isinstance(j, NonLogical):
            steps.append(ProofStep(base + 1, to_bot_form(line.statement), j, 0))
        elif isinstance(j, MP):
            steps.append(ProofStep(base + 1, to_bot_form(line.statement), ImpE(where[j.i], where[j.j]), 0))
        else:
            raise UnsupportedRule(f"line {line.index}: cannot translate {j!r}")
        where[line.index] = len(steps)
    claim = proof.claim if isinstance(proof, ProofScript) else None
    return ProofScript(tuple(steps), "nd", mode, None if claim is None else to_bot_form(claim), name)


def _shift(j: object, base: int) -> object:
    return renumber_justification(j, lambda k: k + base)
