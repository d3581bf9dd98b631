"""Sorted abstract syntax of third order arithmetic.

Terms are built from ``0``, first-order variables, successor, ``+``, ``*``
and a primitive pairing symbol.  Atomic formulas are ``t1 = t2``,
``t in X`` and ``X in @X`` (plus ``X << Y`` for the ordering extension).
Falsehood is not a constructor: ``BOT`` is the formula ``0 = 0'``.

All nodes are frozen dataclasses, so formulas compare and hash
structurally.  Substitution never renames bound variables; it raises
:class:`~cmproof.errors.CaptureError` instead.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import CaptureError, SortError


class Sort(enum.IntEnum):
    FIRST = 1
    SECOND = 2
    THIRD = 3


@dataclass(frozen=True)
class Var:
    name: str
    sort: Sort = Sort.FIRST

    def __str__(self) -> str:
        return self.name


class _Show:
    def __str__(self) -> str:
        from .surface import show

        return show(self)


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Succ(_Show):
    arg: "Term"

    def __post_init__(self):
        _check_term(self.arg)


@dataclass(frozen=True)
class Plus(_Show):
    left: "Term"
    right: "Term"

    def __post_init__(self):
        _check_term(self.left)
        _check_term(self.right)


@dataclass(frozen=True)
class Times(_Show):
    left: "Term"
    right: "Term"

    def __post_init__(self):
        _check_term(self.left)
        _check_term(self.right)


@dataclass(frozen=True)
class Pair(_Show):
    left: "Term"
    right: "Term"

    def __post_init__(self):
        _check_term(self.left)
        _check_term(self.right)


Term = Union[Zero, Var, Succ, Plus, Times, Pair]
_TERM_TYPES = (Zero, Var, Succ, Plus, Times, Pair)

ZERO = Zero()


def is_term(t: object) -> bool:
    if isinstance(t, Var):
        return t.sort == Sort.FIRST
    return isinstance(t, _TERM_TYPES)


def _check_term(t: object) -> None:
    if not is_term(t):
        if isinstance(t, Var):
            raise SortError(f"variable {t.name} of sort {t.sort.name.lower()} used as a numerical term")
        raise TypeError(f"not a term: {t!r}")


def _check_var(v: object, sort: Sort, role: str) -> None:
    if not isinstance(v, Var):
        raise TypeError(f"{role} must be a variable, got {v!r}")
    if v.sort != sort:
        raise SortError(f"{role} must have sort {sort.name.lower()}, got {v.name} of sort {v.sort.name.lower()}")


# -- formulas ----------------------------------------------------------------


@dataclass(frozen=True)
class Eq(_Show):
    lhs: Term
    rhs: Term

    def __post_init__(self):
        _check_term(self.lhs)
        _check_term(self.rhs)


@dataclass(frozen=True)
class MemSN(_Show):
    """``elem in set``: a number belongs to a set."""

    elem: Term
    set: Var

    def __post_init__(self):
        _check_term(self.elem)
        _check_var(self.set, Sort.SECOND, "right side of number membership")


@dataclass(frozen=True)
class MemNP(_Show):
    """``elem in cls``: a set belongs to a class."""

    elem: Var
    cls: Var

    def __post_init__(self):
        _check_var(self.elem, Sort.SECOND, "left side of set membership")
        _check_var(self.cls, Sort.THIRD, "right side of set membership")


@dataclass(frozen=True)
class Prec(_Show):
    """``left << right`` for the reserved ordering on sets."""

    left: Var
    right: Var

    def __post_init__(self):
        _check_var(self.left, Sort.SECOND, "left side of <<")
        _check_var(self.right, Sort.SECOND, "right side of <<")


@dataclass(frozen=True)
class And(_Show):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or(_Show):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp(_Show):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not(_Show):
    body: "Formula"


@dataclass(frozen=True)
class Forall(_Show):
    var: Var
    body: "Formula"


@dataclass(frozen=True)
class Exists(_Show):
    var: Var
    body: "Formula"


Formula = Union[Eq, MemSN, MemNP, Prec, And, Or, Imp, Not, Forall, Exists]
ATOMS = (Eq, MemSN, MemNP, Prec)
BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)


@dataclass(frozen=True)
class Section:
    """The set ``{s : pair(index, s) in set}``, written ``Z_(t)``.

    Only valid as the replacement of a second-order variable during
    substitution, where ``s in Z_(t)`` unfolds to ``pair(t, s) in Z``.
    """

    set: Var
    index: Term

    def __post_init__(self):
        _check_var(self.set, Sort.SECOND, "sequence variable")
        _check_term(self.index)


BOT = Eq(ZERO, Succ(ZERO))


def numeral(k: int) -> Term:
    t: Term = ZERO
    for _ in range(k):
        t = Succ(t)
    return t


def neg(phi: Formula) -> Not:
    return Not(phi)


def iff(a: Formula, b: Formula) -> And:
    return And(Imp(a, b), Imp(b, a))


def is_bot(phi: object) -> bool:
    return phi == BOT


def forall(vars_: Iterable[Var], body: Formula) -> Formula:
    for v in reversed(list(vars_)):
        body = Forall(v, body)
    return body


# -- variables ---------------------------------------------------------------


def term_vars(t: Term) -> frozenset[Var]:
    if isinstance(t, Var):
        return frozenset((t,))
    if isinstance(t, Zero):
        return frozenset()
    if isinstance(t, Succ):
        return term_vars(t.arg)
    return term_vars(t.left) | term_vars(t.right)


def _replacement_vars(r: object) -> frozenset[Var]:
    if isinstance(r, Section):
        return frozenset((r.set,)) | term_vars(r.index)
    return term_vars(r) if is_term(r) else frozenset((r,))


def free_vars(phi: Formula) -> frozenset[Var]:
    """Variables with at least one free occurrence in ``phi``."""
    match phi:
        case Eq(lhs, rhs):
            return term_vars(lhs) | term_vars(rhs)
        case MemSN(elem, s):
            return term_vars(elem) | {s}
        case MemNP(elem, cls):
            return frozenset((elem, cls))
        case Prec(left, right):
            return frozenset((left, right))
        case And(l, r) | Or(l, r) | Imp(l, r):
            return free_vars(l) | free_vars(r)
        case Not(body):
            return free_vars(body)
        case Forall(v, body) | Exists(v, body):
            return free_vars(body) - {v}
    raise TypeError(f"not a formula: {phi!r}")


def bound_vars(phi: Formula) -> frozenset[Var]:
    match phi:
        case And(l, r) | Or(l, r) | Imp(l, r):
            return bound_vars(l) | bound_vars(r)
        case Not(body):
            return bound_vars(body)
        case Forall(v, body) | Exists(v, body):
            return bound_vars(body) | {v}
    return frozenset()


def all_vars(phi: Formula) -> frozenset[Var]:
    return free_vars(phi) | bound_vars(phi)


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    match phi:
        case And(l, r) | Or(l, r) | Imp(l, r):
            yield from subformulas(l)
            yield from subformulas(r)
        case Not(body) | Forall(_, body) | Exists(_, body):
            yield from subformulas(body)


def size(phi: Formula) -> int:
    return sum(1 for _ in subformulas(phi))


def contains_prec(phi: Formula) -> bool:
    return any(isinstance(f, Prec) for f in subformulas(phi))


def is_quantifier_free(phi: Formula) -> bool:
    return not any(isinstance(f, QUANTIFIERS) for f in subformulas(phi))


_FRESH_BASES = {Sort.FIRST: "k", Sort.SECOND: "W", Sort.THIRD: "@W"}


def fresh_var(sort: Sort, avoid: Iterable[Var], base: str | None = None) -> Var:
    """A variable of ``sort`` whose name differs from every name in ``avoid``."""
    taken = {v.name for v in avoid}
    base = base or _FRESH_BASES[sort]
    if base not in taken:
        return Var(base, sort)
    for i in itertools.count(1):
        name = f"{base}{i}"
        if name not in taken:
            return Var(name, sort)
    raise AssertionError("unreachable")


# -- substitution ------------------------------------------------------------


def _check_replacement(x: Var, r: object) -> None:
    if x.sort == Sort.FIRST:
        if not is_term(r):
            raise SortError(f"cannot replace number variable {x.name} by {r!r}")
    elif isinstance(r, Section):
        if x.sort != Sort.SECOND:
            raise SortError(f"a sequence section can only replace a set variable, not {x.name}")
    elif not (isinstance(r, Var) and r.sort == x.sort):
        raise SortError(f"cannot replace {x.sort.name.lower()} order variable {x.name} by {r!r}")


def _subst_term(t: Term, m: Mapping[Var, object]) -> Term:
    match t:
        case Var():
            return m.get(t, t)
        case Zero():
            return t
        case Succ(arg):
            return Succ(_subst_term(arg, m))
        case Plus(l, r):
            return Plus(_subst_term(l, m), _subst_term(r, m))
        case Times(l, r):
            return Times(_subst_term(l, m), _subst_term(r, m))
        case Pair(l, r):
            return Pair(_subst_term(l, m), _subst_term(r, m))
    raise TypeError(f"not a term: {t!r}")


def _subst_set(v: Var, m: Mapping[Var, object], where: str) -> Var:
    r = m.get(v, v)
    if isinstance(r, Section):
        raise SortError(f"sequence section {r.set.name}_({r.index}) cannot appear {where}")
    return r


def _subst(phi: Formula, m: Mapping[Var, object]) -> Formula:
    match phi:
        case Eq(lhs, rhs):
            return Eq(_subst_term(lhs, m), _subst_term(rhs, m))
        case MemSN(elem, s):
            elem = _subst_term(elem, m)
            r = m.get(s, s)
            if isinstance(r, Section):
                return MemSN(Pair(r.index, elem), r.set)
            return MemSN(elem, r)
        case MemNP(elem, cls):
            return MemNP(_subst_set(elem, m, "inside a class membership"), m.get(cls, cls))
        case Prec(left, right):
            return Prec(_subst_set(left, m, "under <<"), _subst_set(right, m, "under <<"))
        case And(l, r):
            return And(_subst(l, m), _subst(r, m))
        case Or(l, r):
            return Or(_subst(l, m), _subst(r, m))
        case Imp(l, r):
            return Imp(_subst(l, m), _subst(r, m))
        case Not(body):
            return Not(_subst(body, m))
        case Forall(v, body) | Exists(v, body):
            fv = free_vars(body)
            inner = {k: r for k, r in m.items() if k != v and k in fv}
            if not inner:
                return phi
            for k, r in inner.items():
                if v in _replacement_vars(r):
                    raise CaptureError(
                        f"substituting for {k.name} would capture {v.name} under its quantifier"
                    )
            return type(phi)(v, _subst(body, inner))
    raise TypeError(f"not a formula: {phi!r}")


def substitute_many(phi: Formula, mapping: Mapping[Var, object]) -> Formula:
    """Simultaneously replace free variables according to ``mapping``.

    Number variables map to terms, set and class variables to variables of
    the same sort; a set variable may also map to a :class:`Section`.
    """
    m = {}
    for x, r in mapping.items():
        _check_replacement(x, r)
        if x != r:
            m[x] = r
    if not m:
        return phi
    return _subst(phi, m)


def free_for(t: object, x: Var, phi: Formula) -> bool:
    """True iff no free occurrence of ``x`` in ``phi`` is in the scope of a
    quantifier binding a variable of ``t``."""
    tv = _replacement_vars(t)
    if not tv:
        return True

    def walk(f: Formula) -> bool:
        match f:
            case And(l, r) | Or(l, r) | Imp(l, r):
                return walk(l) and walk(r)
            case Not(body):
                return walk(body)
            case Forall(v, body) | Exists(v, body):
                if v == x or x not in free_vars(body):
                    return True
                return v not in tv and walk(body)
        return True

    return walk(phi)


def substitute(phi: Formula, x: Var, t: Term) -> Formula:
    """Replace the free occurrences of number variable ``x`` by ``t``."""
    if not isinstance(x, Var) or x.sort != Sort.FIRST:
        raise SortError(f"substitute expects a number variable, got {x!r}")
    if not is_term(t):
        raise SortError(f"substitute expects a numerical term, got {t!r}")
    if not free_for(t, x, phi):
        raise CaptureError(f"{t} is not free for {x.name} in {phi}")
    return substitute_many(phi, {x: t})


def substitute_var(phi: Formula, x: Var, y: Var) -> Formula:
    """Replace free occurrences of a set or class variable by another of the same sort."""
    if not (isinstance(y, Var) and y.sort == x.sort):
        raise SortError(f"cannot replace {x.name} by {y!r}")
    if not free_for(y, x, phi):
        raise CaptureError(f"{y.name} is not free for {x.name} in {phi}")
    return substitute_many(phi, {x: y})


def instantiate_bound(phi: Formula, x: Var, t: object) -> Formula:
    """Instantiate ``x`` with ``t`` at whatever sort ``x`` has."""
    if x.sort == Sort.FIRST:
        return substitute(phi, x, t)  # type: ignore[arg-type]
    return substitute_var(phi, x, t)  # type: ignore[arg-type]


def rename_bound(phi: Formula, avoid: Iterable[Var] = ()) -> Formula:
    """Alpha-rename every bound variable to a fresh name.

    Returns a formula ``alpha_equal`` to ``phi`` whose bound variables avoid
    ``avoid`` and every variable already in ``phi``.
    """
    taken = set(avoid) | all_vars(phi)

    def go(f: Formula) -> Formula:
        match f:
            case And(l, r):
                return And(go(l), go(r))
            case Or(l, r):
                return Or(go(l), go(r))
            case Imp(l, r):
                return Imp(go(l), go(r))
            case Not(body):
                return Not(go(body))
            case Forall(v, body) | Exists(v, body):
                new = fresh_var(v.sort, taken, base=v.name.rstrip("0123456789") or None)
                taken.add(new)
                return type(f)(new, go(substitute_many(body, {v: new})))
        return f

    return go(phi)


# -- comparison and classification ------------------------------------------


def _var_eq(x: Var, y: Var, ea: dict, eb: dict) -> bool:
    ix, iy = ea.get(x), eb.get(y)
    if ix is None and iy is None:
        return x == y
    return ix == iy


def _term_alpha(s: Term, t: Term, ea: dict, eb: dict) -> bool:
    if type(s) is not type(t):
        return False
    match s:
        case Var():
            return _var_eq(s, t, ea, eb)
        case Zero():
            return True
        case Succ(arg):
            return _term_alpha(arg, t.arg, ea, eb)
    return _term_alpha(s.left, t.left, ea, eb) and _term_alpha(s.right, t.right, ea, eb)


def _alpha(a: Formula, b: Formula, ea: dict, eb: dict, depth: int) -> bool:
    if type(a) is not type(b):
        return False
    match a:
        case Eq(lhs, rhs):
            return _term_alpha(lhs, b.lhs, ea, eb) and _term_alpha(rhs, b.rhs, ea, eb)
        case MemSN(elem, s):
            return _term_alpha(elem, b.elem, ea, eb) and _var_eq(s, b.set, ea, eb)
        case MemNP(elem, cls):
            return _var_eq(elem, b.elem, ea, eb) and _var_eq(cls, b.cls, ea, eb)
        case Prec(left, right):
            return _var_eq(left, b.left, ea, eb) and _var_eq(right, b.right, ea, eb)
        case And(l, r) | Or(l, r) | Imp(l, r):
            return _alpha(l, b.left, ea, eb, depth) and _alpha(r, b.right, ea, eb, depth)
        case Not(body):
            return _alpha(body, b.body, ea, eb, depth)
        case Forall(v, body) | Exists(v, body):
            if v.sort != b.var.sort:
                return False
            return _alpha(body, b.body, {**ea, v: depth}, {**eb, b.var: depth}, depth + 1)
    raise TypeError(f"not a formula: {a!r}")


def alpha_equal(a: Formula, b: Formula) -> bool:
    """Equality up to consistent renaming of bound variables."""
    if a == b:
        return True
    return _alpha(a, b, {}, {}, 0)


class FormulaClass(enum.Enum):
    ATOMIC = "atomic"
    ARITHMETICAL = "arithmetical"
    GENERAL = "general"


def classify(phi: Formula) -> FormulaClass:
    if isinstance(phi, ATOMS):
        return FormulaClass.ATOMIC
    for f in subformulas(phi):
        if isinstance(f, QUANTIFIERS) and f.var.sort != Sort.FIRST:
            return FormulaClass.GENERAL
    return FormulaClass.ARITHMETICAL


def is_arithmetical(phi: Formula) -> bool:
    return classify(phi) != FormulaClass.GENERAL


# -- negation forms ----------------------------------------------------------


def to_bot_form(phi: Formula) -> Formula:
    """Rewrite every ``~A`` as ``A -> 0 = 0'``."""
    match phi:
        case Not(body):
            return Imp(to_bot_form(body), BOT)
        case And(l, r):
            return And(to_bot_form(l), to_bot_form(r))
        case Or(l, r):
            return Or(to_bot_form(l), to_bot_form(r))
        case Imp(l, r):
            return Imp(to_bot_form(l), to_bot_form(r))
        case Forall(v, body):
            return Forall(v, to_bot_form(body))
        case Exists(v, body):
            return Exists(v, to_bot_form(body))
    return phi


def to_neg_form(phi: Formula) -> Formula:
    """Rewrite every ``A -> 0 = 0'`` as ``~A``."""
    match phi:
        case Imp(l, r) if r == BOT:
            return Not(to_neg_form(l))
        case Not(body):
            return Not(to_neg_form(body))
        case And(l, r):
            return And(to_neg_form(l), to_neg_form(r))
        case Or(l, r):
            return Or(to_neg_form(l), to_neg_form(r))
        case Imp(l, r):
            return Imp(to_neg_form(l), to_neg_form(r))
        case Forall(v, body):
            return Forall(v, to_neg_form(body))
        case Exists(v, body):
            return Exists(v, to_neg_form(body))
    return phi
