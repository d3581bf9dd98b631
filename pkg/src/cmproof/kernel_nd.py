"""Fitch-style natural deduction checker.

A script is a numbered list of :class:`ProofStep` values.  Each step has a
depth (the number of open assumption blocks it sits in); an ``Assume`` step
always opens a new block, closing any sibling block at the same depth.
Rules cite earlier lines that are still in scope, or closed blocks by their
``(first, last)`` range.

Statements are compared up to :func:`~cmproof.syntax.alpha_equal` after
rewriting ``~A`` to ``A -> bot``.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .axioms import CMPLUS_IDS, SchemeInstance, instantiate
from .errors import CMError, KernelError, UnknownDerivedRule
from .syntax import (
    BOT, And, Exists, Forall, Formula, FormulaClass, Imp, Or, Var, alpha_equal,
    Sort, classify, contains_prec, free_for, free_vars, instantiate_bound, is_term,
    to_bot_form,
)


class LogicMode(enum.IntEnum):
    """Nested rule sets: each mode admits everything the previous one does."""

    MINIMAL = 0
    INTUITIONISTIC = 1
    CM = 2
    CMPLUS = 3

    @property
    def label(self) -> str:
        return _MODE_LABELS[self]

    @classmethod
    def parse(cls, value: "LogicMode | str") -> "LogicMode":
        if isinstance(value, LogicMode):
            return value
        key = value.strip().lower().replace("_", "-")
        try:
            return _MODE_NAMES[key]
        except KeyError:
            raise ValueError(f"unknown logic mode {value!r}") from None


_MODE_LABELS = {
    LogicMode.MINIMAL: "minimal",
    LogicMode.INTUITIONISTIC: "int",
    LogicMode.CM: "cm",
    LogicMode.CMPLUS: "cm-plus",
}
_MODE_NAMES = {
    "minimal": LogicMode.MINIMAL,
    "int": LogicMode.INTUITIONISTIC,
    "intuitionistic": LogicMode.INTUITIONISTIC,
    "cm": LogicMode.CM,
    "cm-plus": LogicMode.CMPLUS,
    "cmplus": LogicMode.CMPLUS,
}

Block = tuple[int, int]


# -- justifications ----------------------------------------------------------


@dataclass(frozen=True)
class Assume:
    pass


@dataclass(frozen=True)
class Reiterate:
    i: int


@dataclass(frozen=True)
class AndI:
    i: int
    j: int


@dataclass(frozen=True)
class AndE1:
    i: int


@dataclass(frozen=True)
class AndE2:
    i: int


@dataclass(frozen=True)
class OrI1:
    i: int


@dataclass(frozen=True)
class OrI2:
    i: int


@dataclass(frozen=True)
class OrE:
    i: int
    left: Block
    right: Block


@dataclass(frozen=True)
class ImpI:
    block: Block


@dataclass(frozen=True)
class ImpE:
    i: int
    j: int


@dataclass(frozen=True)
class ForallI:
    i: int
    x: Var


@dataclass(frozen=True)
class ForallE:
    i: int
    t: object


@dataclass(frozen=True)
class ExistsI:
    i: int
    t: object
    x: Var | None = None


@dataclass(frozen=True)
class ExistsE:
    i: int
    block: Block
    y: Var


@dataclass(frozen=True)
class ExFalso:
    i: int


@dataclass(frozen=True)
class EM:
    pass


@dataclass(frozen=True)
class NonLogical:
    instance: SchemeInstance


@dataclass(frozen=True)
class EqAx:
    instance: SchemeInstance


@dataclass(frozen=True)
class Derived:
    name: str
    input: Formula


Justification = Union[
    Assume, Reiterate, AndI, AndE1, AndE2, OrI1, OrI2, OrE, ImpI, ImpE, ForallI,
    ForallE, ExistsI, ExistsE, ExFalso, EM, NonLogical, EqAx, Derived,
]


def cited_lines(j: Justification) -> list[int]:
    """Every line number a justification refers to, block ends included."""
    out: list[int] = []
    for name in ("i", "j"):
        if hasattr(j, name):
            out.append(getattr(j, name))
    for name in ("block", "left", "right"):
        if isinstance(getattr(j, name, None), tuple):
            out.extend(getattr(j, name))
    return out


@dataclass(frozen=True)
class ProofStep:
    index: int
    statement: Formula
    justification: Justification
    depth: int = 0


@dataclass(frozen=True)
class ProofScript:
    steps: tuple
    kernel: str = "nd"
    mode: LogicMode | None = None
    claim: Formula | None = None
    name: str | None = None
    source: str | None = None

    @property
    def conclusion(self) -> Formula | None:
        return self.steps[-1].statement if self.steps else None


@dataclass(frozen=True)
class Diagnostic:
    index: int
    code: str
    message: str

    def as_dict(self) -> dict:
        return {"index": self.index, "code": self.code, "message": self.message}


@dataclass(frozen=True)
class CheckResult:
    verdict: str
    diagnostics: tuple[Diagnostic, ...]
    mode: LogicMode
    entry: str | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict == "accept"

    @property
    def codes(self) -> list[str]:
        return [d.code for d in self.diagnostics]

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "diagnostics": [d.as_dict() for d in self.diagnostics],
            "mode": self.mode.label,
            "entry": self.entry,
        }


def make_result(diags: list[Diagnostic], mode: LogicMode, entry: str | None) -> CheckResult:
    return CheckResult("reject" if diags else "accept", tuple(diags), mode, entry)


# -- derived rules -----------------------------------------------------------


@dataclass(frozen=True)
class DerivedRule:
    """A macro whose expansion is a closed ND script proving a theorem about its input."""

    name: str
    mode: LogicMode
    expand: Callable[[Formula], ProofScript]
    doc: str = ""


DERIVED_RULES: dict[str, DerivedRule] = {}
_expansion_cache: dict[tuple[str, Formula], tuple[ProofScript, CheckResult]] = {}
_cache_lock = threading.Lock()


def register_derived_rule(rule: DerivedRule) -> DerivedRule:
    DERIVED_RULES[rule.name] = rule
    return rule


def _lookup_rule(name: str) -> DerivedRule:
    if name not in DERIVED_RULES:
        from . import corpus  # noqa: F401  registers the bundled rules

    try:
        return DERIVED_RULES[name]
    except KeyError:
        raise UnknownDerivedRule(f"no derived rule named {name!r}") from None


def _expand_checked(rule: DerivedRule, inp: Formula) -> tuple[ProofScript, CheckResult]:
    key = (rule.name, inp)
    with _cache_lock:
        hit = _expansion_cache.get(key)
    if hit is not None:
        return hit
    script = rule.expand(inp)
    result = check_nd(script, rule.mode)
    with _cache_lock:
        _expansion_cache[key] = (script, result)
    return script, result


def check_derived_rule(name: str, inputs: Formula) -> CheckResult:
    """Expand a registered derived rule on ``inputs`` and check the expansion."""
    rule = _lookup_rule(name)
    try:
        _, result = _expand_checked(rule, inputs)
    except CMError as exc:
        return make_result([Diagnostic(0, exc.code, str(exc))], rule.mode, name)
    return CheckResult(result.verdict, result.diagnostics, rule.mode, name)


def expand_derived(script: ProofScript) -> ProofScript:
    """Splice every derived-rule step's expansion in place, renumbering citations."""
    out: list[ProofStep] = []
    renumber: dict[int, int] = {}

    for step in script.steps:
        if isinstance(step.justification, Derived):
            rule = _lookup_rule(step.justification.name)
            sub = expand_derived(rule.expand(step.justification.input))
            base = len(out)
            for s in sub.steps:
                moved = renumber_justification(s.justification, lambda k: k + base)
                out.append(ProofStep(s.index + base, s.statement, moved, s.depth + step.depth))
            renumber[step.index] = len(out)
        else:
            moved = renumber_justification(step.justification, renumber.__getitem__)
            out.append(ProofStep(len(out) + 1, step.statement, moved, step.depth))
            renumber[step.index] = len(out)
    return ProofScript(tuple(out), script.kernel, script.mode, script.claim, script.name, script.source)


def renumber_justification(j: Justification, f: Callable[[int], int]) -> Justification:
    rb = lambda b: (f(b[0]), f(b[1]))  # noqa: E731
    match j:
        case Reiterate(i):
            return Reiterate(f(i))
        case AndI(i, k):
            return AndI(f(i), f(k))
        case ImpE(i, k):
            return ImpE(f(i), f(k))
        case AndE1(i) | AndE2(i) | OrI1(i) | OrI2(i) | ExFalso(i):
            return type(j)(f(i))
        case OrE(i, left, right):
            return OrE(f(i), rb(left), rb(right))
        case ImpI(b):
            return ImpI(rb(b))
        case ForallI(i, x):
            return ForallI(f(i), x)
        case ForallE(i, t):
            return ForallE(f(i), t)
        case ExistsI(i, t, x):
            return ExistsI(f(i), t, x)
        case ExistsE(i, b, y):
            return ExistsE(f(i), rb(b), y)
    return j


# -- checker -----------------------------------------------------------------


@dataclass
class _Line:
    statement: Formula
    path: tuple[int, ...]


@dataclass
class _BlockInfo:
    start: int
    path: tuple[int, ...]  # enclosing blocks, outermost first
    end: int = 0


@dataclass
class _State:
    mode: LogicMode
    lines: dict[int, _Line] = field(default_factory=dict)
    blocks: dict[int, _BlockInfo] = field(default_factory=dict)
    stack: list[int] = field(default_factory=list)


def _fail(code: str, message: str) -> KernelError:
    return KernelError(code, message)


def _same(a: Formula, b: Formula) -> bool:
    return alpha_equal(a, b)


def _visible(st: _State, here: int, j: int) -> Formula:
    line = st.lines.get(j)
    if line is None or j >= here:
        raise _fail("ScopeViolation", f"line {j} is not an earlier line")
    path = tuple(st.stack)
    if line.path != path[: len(line.path)]:
        raise _fail("ScopeViolation", f"line {j} sits inside a closed assumption block")
    return line.statement


def _closed_block(st: _State, here: int, block: Block) -> tuple[Formula, Formula]:
    start, end = block
    info = st.blocks.get(start)
    if info is None or start >= here:
        raise _fail("ScopeViolation", f"no assumption block starts at line {start}")
    if start in st.stack:
        raise _fail("ScopeViolation", f"block {start}-{end} is still open")
    if info.end != end:
        raise _fail("ScopeViolation", f"block starting at {start} ends at line {info.end}, not {end}")
    if st.lines[end].path[-1:] != (start,):
        raise _fail("ScopeViolation", f"block {start}-{end} ends inside a nested block")
    path = tuple(st.stack)
    if info.path != path[: len(info.path)]:
        raise _fail("ScopeViolation", f"block {start}-{end} is not reachable from line {here}")
    return st.lines[start].statement, st.lines[end].statement


def _open_assumptions(st: _State) -> list[Formula]:
    return [st.lines[s].statement for s in st.stack]


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise _fail("RuleMismatch", message)


def _check_term_arg(t: object, x: Var) -> None:
    ok = is_term(t) if x.sort == Sort.FIRST else isinstance(t, Var) and t.sort == x.sort
    if not ok:
        raise _fail("SortError", f"cannot instantiate {x.name} with {t}")


def _instantiate(body: Formula, x: Var, t: object) -> Formula:
    _check_term_arg(t, x)
    if not free_for(t, x, body):
        raise _fail("CaptureError", f"{t} is not free for {x.name} in {body}")
    return instantiate_bound(body, x, t)


def _check_step(st: _State, idx: int, phi: Formula, j: Justification) -> None:
    mode = st.mode
    match j:
        case Assume():
            return
        case Reiterate(i):
            _expect(_same(_visible(st, idx, i), phi), f"line {i} is not the reiterated statement")
        case AndI(i, k):
            a, b = _visible(st, idx, i), _visible(st, idx, k)
            _expect(isinstance(phi, And) and _same(phi.left, a) and _same(phi.right, b),
                    f"statement is not the conjunction of lines {i} and {k}")
        case AndE1(i) | AndE2(i):
            a = _visible(st, idx, i)
            _expect(isinstance(a, And), f"line {i} is not a conjunction")
            part = a.left if isinstance(j, AndE1) else a.right
            _expect(_same(part, phi), f"statement is not the {'left' if isinstance(j, AndE1) else 'right'} conjunct of line {i}")
        case OrI1(i) | OrI2(i):
            a = _visible(st, idx, i)
            _expect(isinstance(phi, Or), "statement is not a disjunction")
            part = phi.left if isinstance(j, OrI1) else phi.right
            _expect(_same(part, a), f"line {i} is not the {'left' if isinstance(j, OrI1) else 'right'} disjunct")
        case OrE(i, left, right):
            a = _visible(st, idx, i)
            _expect(isinstance(a, Or), f"line {i} is not a disjunction")
            h1, c1 = _closed_block(st, idx, left)
            h2, c2 = _closed_block(st, idx, right)
            _expect(_same(h1, a.left), f"block {left[0]}-{left[1]} does not assume the left disjunct")
            _expect(_same(h2, a.right), f"block {right[0]}-{right[1]} does not assume the right disjunct")
            _expect(_same(c1, phi) and _same(c2, phi), "both cases must end with the statement")
        case ImpI(block):
            h, c = _closed_block(st, idx, block)
            _expect(isinstance(phi, Imp) and _same(phi.left, h) and _same(phi.right, c),
                    f"statement is not assumption -> conclusion of block {block[0]}-{block[1]}")
        case ImpE(i, k):
            a, b = _visible(st, idx, i), _visible(st, idx, k)
            ok = any(isinstance(f, Imp) and _same(f.left, g) and _same(f.right, phi) for f, g in ((a, b), (b, a)))
            _expect(ok, f"lines {i} and {k} do not give the statement by modus ponens")
        case ForallI(i, x):
            a = _visible(st, idx, i)
            _expect(isinstance(phi, Forall), "statement is not universally quantified")
            _expect(phi.var.sort == x.sort, f"{x.name} has the wrong sort for {phi.var.name}")
            if x in free_vars(phi):
                raise _fail("EigenvariableViolation", f"{x.name} is still free in the generalization")
            for h in _open_assumptions(st):
                if x in free_vars(h):
                    raise _fail("EigenvariableViolation", f"{x.name} is free in the open assumption {h}")
            _expect(_same(_instantiate(phi.body, phi.var, x), a), f"line {i} is not the statement's body at {x.name}")
        case ForallE(i, t):
            a = _visible(st, idx, i)
            _expect(isinstance(a, Forall), f"line {i} is not universally quantified")
            _expect(_same(_instantiate(a.body, a.var, t), phi), f"statement is not line {i} instantiated at {t}")
        case ExistsI(i, t, _):
            a = _visible(st, idx, i)
            _expect(isinstance(phi, Exists), "statement is not existentially quantified")
            _expect(_same(_instantiate(phi.body, phi.var, t), a), f"line {i} is not the statement's body at {t}")
        case ExistsE(i, block, y):
            a = _visible(st, idx, i)
            _expect(isinstance(a, Exists), f"line {i} is not existentially quantified")
            h, c = _closed_block(st, idx, block)
            _expect(a.var.sort == y.sort, f"{y.name} has the wrong sort for {a.var.name}")
            for f, what in ((phi, "the conclusion"), (a, f"line {i}")):
                if y in free_vars(f):
                    raise _fail("EigenvariableViolation", f"{y.name} occurs free in {what}")
            for f in _open_assumptions(st):
                if y in free_vars(f):
                    raise _fail("EigenvariableViolation", f"{y.name} is free in the open assumption {f}")
            _expect(_same(_instantiate(a.body, a.var, y), h), f"block {block[0]}-{block[1]} does not assume the witness case")
            _expect(_same(c, phi), f"block {block[0]}-{block[1]} does not end with the statement")
        case ExFalso(i):
            if mode < LogicMode.INTUITIONISTIC:
                raise _fail("ExFalsoInMinimal", "ex falso is not a rule of minimal logic")
            _expect(_same(_visible(st, idx, i), BOT), f"line {i} is not bot")
        case EM():
            if mode < LogicMode.CM:
                raise _fail("EMNotAllowed", f"excluded middle is not available in {mode.label} mode")
            _expect(isinstance(phi, Or) and _same(phi.right, Imp(phi.left, BOT)),
                    "statement is not of the form A \\/ ~A")
            if classify(phi.left) == FormulaClass.GENERAL:
                raise _fail("EMNotArithmetical", "excluded middle only holds for formulas without set or class quantifiers")
        case NonLogical(inst) | EqAx(inst):
            if mode < LogicMode.CM or (inst.id in CMPLUS_IDS and mode < LogicMode.CMPLUS):
                raise _fail("NonLogicalNotAllowed", f"axiom {inst.id.value} is not available in {mode.label} mode")
            try:
                ax = instantiate(inst)
            except CMError as exc:
                raise _fail(exc.code, str(exc)) from None
            _expect(_same(to_bot_form(ax), phi), f"statement is not the {inst.id.value} instance")
        case Derived(name, inp):
            rule = _lookup_rule(name)
            if rule.mode > mode:
                raise _fail("ModeViolation", f"derived rule {name} needs {rule.mode.label} mode")
            try:
                script, result = _expand_checked(rule, inp)
            except CMError as exc:
                raise _fail(exc.code, str(exc)) from None
            if not result.accepted:
                first = result.diagnostics[0]
                raise _fail(first.code, f"expansion of {name} does not check: {first.message}")
            _expect(_same(to_bot_form(script.conclusion), phi), f"statement is not the conclusion of {name}")
        case _:
            raise _fail("RuleMismatch", f"unknown justification {j!r}")


def _enter(st: _State, step: ProofStep, diags: list[Diagnostic]) -> None:
    """Update the block structure for ``step``; scoping errors become diagnostics."""
    d = step.depth
    if isinstance(step.justification, Assume):
        if d < 1 or d > len(st.stack) + 1:
            diags.append(Diagnostic(step.index, "ScopeViolation", f"assumption at depth {d} cannot open a block here"))
            d = len(st.stack) + 1
        del st.stack[d - 1:]
        st.blocks[step.index] = _BlockInfo(step.index, tuple(st.stack))
        st.stack.append(step.index)
    else:
        if d < 0 or d > len(st.stack):
            diags.append(Diagnostic(step.index, "ScopeViolation", f"step at depth {d} has no enclosing assumption"))
            d = len(st.stack)
        del st.stack[d:]
    for start in st.stack:
        st.blocks[start].end = step.index


def check_nd(script: ProofScript | Sequence[ProofStep], mode: LogicMode | str) -> CheckResult:
    """Check a natural-deduction script; every violated step gets a diagnostic."""
    mode = LogicMode.parse(mode)
    if not isinstance(script, ProofScript):
        script = ProofScript(tuple(script))
    st = _State(mode)
    diags: list[Diagnostic] = []
    if not script.steps:
        diags.append(Diagnostic(0, "EmptyScript", "the script has no steps"))
    for n, step in enumerate(script.steps, 1):
        if step.index != n:
            diags.append(Diagnostic(step.index, "ScopeViolation", f"expected step number {n}"))
        _enter(st, step, diags)
        phi = to_bot_form(step.statement)
        st.lines[n] = _Line(phi, tuple(st.stack))
        if mode < LogicMode.CMPLUS and contains_prec(phi):
            diags.append(Diagnostic(n, "ModeViolation", "<< is only available in cm-plus mode"))
            continue
        try:
            _check_step(st, n, phi, step.justification)
        except KernelError as exc:
            diags.append(Diagnostic(n, exc.code, str(exc)))
        except CMError as exc:
            diags.append(Diagnostic(n, exc.code, str(exc)))
    if script.steps:
        last = script.steps[-1]
        if st.stack:
            diags.append(Diagnostic(last.index, "OpenAssumption", "the final step is inside an assumption block"))
        elif script.claim is not None and not alpha_equal(to_bot_form(script.claim), st.lines[len(script.steps)].statement):
            diags.append(Diagnostic(last.index, "ClaimMismatch", "the final step is not the declared claim"))
    return make_result(diags, mode, script.name)

