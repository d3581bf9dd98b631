"""Non-logical axioms of CM: number axioms, induction, dependent choice,
comprehension, equality, pairing, and the ordering extension of CM+.

A :class:`SchemeInstance` names a scheme, supplies a :class:`Template` for
its formula metavariable (if it has one) and optionally renames the
scheme's own variables.  :func:`instantiate` turns it into a formula.
Instances are written with ``~`` (negation-primitive); kernels normalize.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import ArityError, ProvisoViolation, SortError
from .syntax import (
    ZERO, And, Eq, Exists, Forall, Formula, Imp, MemNP, MemSN, Not, Or, Pair,
    Plus, Prec, Section, Sort, Succ, Times, Var, contains_prec, forall,
    free_vars, iff, substitute_many,
)


class SchemeId(enum.Enum):
    Num1 = "Num1"
    Num2 = "Num2"
    Num3 = "Num3"
    Num4 = "Num4"
    Num5 = "Num5"
    Num6 = "Num6"
    Induction = "Induction"
    DependentChoice = "DependentChoice"
    Compr2 = "Compr2"
    Compr3 = "Compr3"
    EqRefl = "EqRefl"
    EqSym = "EqSym"
    EqTrans = "EqTrans"
    EqCongSucc = "EqCongSucc"
    EqCongPlus = "EqCongPlus"
    EqCongTimes = "EqCongTimes"
    EqCongPairLeft = "EqCongPairLeft"
    EqCongPairRight = "EqCongPairRight"
    EqMem = "EqMem"
    PairInj = "PairInj"
    CMPlusTotal = "CMPlusTotal"
    CMPlusProgressive = "CMPlusProgressive"
    CMPlusCountable = "CMPlusCountable"

    @classmethod
    def parse(cls, name: str) -> "SchemeId":
        try:
            return cls(name)
        except ValueError:
            raise ArityError(f"unknown axiom scheme {name!r}") from None


EQUALITY_IDS = frozenset({
    SchemeId.EqRefl, SchemeId.EqSym, SchemeId.EqTrans, SchemeId.EqCongSucc,
    SchemeId.EqCongPlus, SchemeId.EqCongTimes, SchemeId.EqCongPairLeft,
    SchemeId.EqCongPairRight, SchemeId.EqMem,
})
CMPLUS_IDS = frozenset({SchemeId.CMPlusTotal, SchemeId.CMPlusProgressive, SchemeId.CMPlusCountable})


@dataclass(frozen=True)
class Template:
    """A formula with designated argument slots, e.g. ``phi(n) := n = n``."""

    slots: tuple[Var, ...]
    body: Formula

    def __post_init__(self):
        if len(set(self.slots)) != len(self.slots):
            raise ArityError("template slots must be distinct")

    @property
    def params(self) -> frozenset[Var]:
        return free_vars(self.body) - set(self.slots)

    def apply(self, *args: object) -> Formula:
        if len(args) != len(self.slots):
            raise ArityError(f"template takes {len(self.slots)} arguments, got {len(args)}")
        return substitute_many(self.body, dict(zip(self.slots, args)))


@dataclass(frozen=True)
class SchemeInstance:
    id: SchemeId
    template: Template | None = None
    variables: Mapping[str, Var] = field(default_factory=dict)


@dataclass(frozen=True)
class _Role:
    name: str
    sort: Sort
    default: str | int  # a variable name, or the index of a template slot
    binds_template: bool = True  # the role is quantified around template applications


@dataclass(frozen=True)
class _SchemeDef:
    slots: tuple[Sort, ...] | None
    roles: tuple[_Role, ...]
    build: Callable[..., Formula]


def _r(name: str, sort: Sort = Sort.FIRST, default: str | int | None = None, binds: bool = True) -> _Role:
    return _Role(name, sort, name if default is None else default, binds)


_S2, _S3 = Sort.SECOND, Sort.THIRD


def _num(*roles: str) -> tuple[_Role, ...]:
    return tuple(_r(n) for n in roles)


def _induction(phi: Template, n: Var) -> Formula:
    step = Forall(n, Imp(phi.apply(n), phi.apply(Succ(n))))
    return Imp(And(phi.apply(ZERO), step), Forall(n, phi.apply(n)))


def _dependent_choice(phi: Template, n: Var, X: Var, Y: Var, Z: Var, m: Var) -> Formula:
    premise = Forall(n, Forall(X, Exists(Y, phi.apply(n, X, Y))))
    start = Forall(m, iff(MemSN(Pair(ZERO, m), Z), MemSN(m, X)))
    chain = Forall(n, phi.apply(n, Section(Z, n), Section(Z, Succ(n))))
    return Imp(premise, Forall(X, Exists(Z, And(start, chain))))


def _compr2(phi: Template, n: Var, X: Var) -> Formula:
    decidable = Forall(n, Or(phi.apply(n), Not(phi.apply(n))))
    return Imp(decidable, Exists(X, Forall(n, iff(MemSN(n, X), phi.apply(n)))))


def _compr3(phi: Template, X: Var, C: Var) -> Formula:
    decidable = Forall(X, Or(phi.apply(X), Not(phi.apply(X))))
    return Imp(decidable, Exists(C, Forall(X, iff(MemNP(X, C), phi.apply(X)))))


def _progressive(phi: Template, X: Var, Y: Var) -> Formula:
    if contains_prec(phi.body):
        raise ProvisoViolation("the progressivity scheme only applies to formulas without <<")
    hyp = Forall(X, Imp(Forall(Y, Imp(Prec(Y, X), phi.apply(Y))), phi.apply(X)))
    return Imp(hyp, Forall(X, phi.apply(X)))


def _ext_eq(X: Var, Y: Var, n: Var) -> Formula:
    return Forall(n, iff(MemSN(n, X), MemSN(n, Y)))


def _total(X: Var, Y: Var, Z: Var, n: Var) -> Formula:
    irreflexive = Forall(X, Not(Prec(X, X)))
    transitive = forall((X, Y, Z), Imp(Prec(X, Y), Imp(Prec(Y, Z), Prec(X, Z))))
    trichotomy = forall((X, Y), Or(Prec(X, Y), Or(_ext_eq(X, Y, n), Prec(Y, X))))
    return And(irreflexive, And(transitive, trichotomy))


def _countable(X: Var, Z: Var, Y: Var, n: Var, m: Var) -> Formula:
    section = Forall(m, iff(MemSN(m, Y), MemSN(Pair(n, m), Z)))
    return Forall(X, Exists(Z, Forall(Y, Imp(Prec(Y, X), Exists(n, section)))))


def _cong(op: Callable[[object, object], object]) -> Callable[..., Formula]:
    def build(a: Var, b: Var, c: Var, d: Var) -> Formula:
        return forall((a, b, c, d), Imp(Eq(a, b), Imp(Eq(c, d), Eq(op(a, c), op(b, d)))))
    return build


_SCHEME_DEFS: dict[SchemeId, _SchemeDef] = {
    SchemeId.Num1: _SchemeDef(None, _num("n"), lambda n: Not(Eq(Succ(n), ZERO))),
    SchemeId.Num2: _SchemeDef(None, _num("m", "n"), lambda m, n: Imp(Eq(Succ(m), Succ(n)), Eq(m, n))),
    SchemeId.Num3: _SchemeDef(None, _num("m"), lambda m: Eq(Plus(m, ZERO), m)),
    SchemeId.Num4: _SchemeDef(None, _num("m", "n"), lambda m, n: Eq(Plus(m, Succ(n)), Succ(Plus(m, n)))),
    SchemeId.Num5: _SchemeDef(None, _num("m"), lambda m: Eq(Times(m, ZERO), ZERO)),
    SchemeId.Num6: _SchemeDef(None, _num("m", "n"), lambda m, n: Eq(Times(m, Succ(n)), Plus(Times(m, n), m))),
    SchemeId.Induction: _SchemeDef((Sort.FIRST,), (_r("n", default=0),), _induction),
    SchemeId.DependentChoice: _SchemeDef(
        (Sort.FIRST, _S2, _S2),
        (_r("n", default=0), _r("X", _S2, 1), _r("Y", _S2, 2), _r("Z", _S2), _r("m", binds=False)),
        _dependent_choice,
    ),
    SchemeId.Compr2: _SchemeDef((Sort.FIRST,), (_r("n", default=0), _r("X", _S2)), _compr2),
    SchemeId.Compr3: _SchemeDef((_S2,), (_r("X", _S2, 0), _r("@X", _S3)), _compr3),
    SchemeId.EqRefl: _SchemeDef(None, _num("m"), lambda m: Forall(m, Eq(m, m))),
    SchemeId.EqSym: _SchemeDef(None, _num("m", "n"), lambda m, n: forall((m, n), Imp(Eq(m, n), Eq(n, m)))),
    SchemeId.EqTrans: _SchemeDef(
        None, _num("k", "m", "n"),
        lambda k, m, n: forall((k, m, n), Imp(Eq(k, m), Imp(Eq(m, n), Eq(k, n)))),
    ),
    SchemeId.EqCongSucc: _SchemeDef(
        None, _num("m", "n"), lambda m, n: forall((m, n), Imp(Eq(m, n), Eq(Succ(m), Succ(n)))),
    ),
    SchemeId.EqCongPlus: _SchemeDef(None, _num("a", "b", "c", "d"), _cong(Plus)),
    SchemeId.EqCongTimes: _SchemeDef(None, _num("a", "b", "c", "d"), _cong(Times)),
    SchemeId.EqCongPairLeft: _SchemeDef(
        None, _num("a", "b", "c"),
        lambda a, b, c: forall((a, b, c), Imp(Eq(a, b), Eq(Pair(a, c), Pair(b, c)))),
    ),
    SchemeId.EqCongPairRight: _SchemeDef(
        None, _num("a", "b", "c"),
        lambda a, b, c: forall((a, b, c), Imp(Eq(a, b), Eq(Pair(c, a), Pair(c, b)))),
    ),
    SchemeId.EqMem: _SchemeDef(
        None, (_r("m"), _r("n"), _r("X", _S2)),
        lambda m, n, X: forall((m, n, X), Imp(Eq(m, n), Imp(MemSN(m, X), MemSN(n, X)))),
    ),
    SchemeId.PairInj: _SchemeDef(
        None, _num("a", "b", "c", "d"),
        lambda a, b, c, d: forall(
            (a, b, c, d), Imp(Eq(Pair(a, b), Pair(c, d)), And(Eq(a, c), Eq(b, d)))
        ),
    ),
    SchemeId.CMPlusTotal: _SchemeDef(None, (_r("X", _S2), _r("Y", _S2), _r("Z", _S2), _r("n")), _total),
    SchemeId.CMPlusProgressive: _SchemeDef((_S2,), (_r("X", _S2, 0), _r("Y", _S2)), _progressive),
    SchemeId.CMPlusCountable: _SchemeDef(
        None, (_r("X", _S2), _r("Z", _S2), _r("Y", _S2), _r("n"), _r("m")), _countable,
    ),
}


def scheme_slots(sid: SchemeId) -> tuple[Sort, ...] | None:
    """Slot sorts of the scheme's formula metavariable, or None for single axioms."""
    return _SCHEME_DEFS[sid].slots


def _resolve_roles(sdef: _SchemeDef, inst: SchemeInstance) -> list[Var]:
    known = {r.name for r in sdef.roles}
    for name in inst.variables:
        if name not in known:
            raise ArityError(f"{inst.id.value} has no variable {name!r} (expected one of {sorted(known)})")
    resolved = []
    for role in sdef.roles:
        if role.name in inst.variables:
            v = inst.variables[role.name]
        elif isinstance(role.default, int):
            v = inst.template.slots[role.default]
        else:
            v = Var(role.default, role.sort)
        if not isinstance(v, Var) or v.sort != role.sort:
            raise SortError(f"variable {role.name} of {inst.id.value} must be a {role.sort.name.lower()} order variable")
        resolved.append(v)
    seen: set[Var] = set()
    for role, v in zip(sdef.roles, resolved):
        if not role.binds_template:
            continue
        if v in seen:
            raise ProvisoViolation(f"variable {v.name} is used for two different roles of {inst.id.value}")
        seen.add(v)
    return resolved


def instantiate(inst: SchemeInstance) -> Formula:
    """The axiom denoted by ``inst``, with all abbreviations expanded."""
    sdef = _SCHEME_DEFS[inst.id]
    if sdef.slots is None:
        if inst.template is not None:
            raise ArityError(f"{inst.id.value} is a single axiom and takes no formula")
        return sdef.build(*_resolve_roles(sdef, inst))
    phi = inst.template
    if phi is None:
        raise ArityError(f"{inst.id.value} needs a formula binding")
    if len(phi.slots) != len(sdef.slots):
        raise ArityError(f"{inst.id.value} needs a formula with {len(sdef.slots)} argument(s), got {len(phi.slots)}")
    for slot, sort in zip(phi.slots, sdef.slots):
        if slot.sort != sort:
            raise SortError(f"argument {slot.name} of the {inst.id.value} formula must have sort {sort.name.lower()}")
    roles = _resolve_roles(sdef, inst)
    params = phi.params
    for role, v in zip(sdef.roles, roles):
        if role.binds_template and v in params:
            raise ProvisoViolation(f"{inst.id.value}: the formula must not contain {v.name} free")
    return sdef.build(phi, *roles)


def equality_axioms() -> list[Formula]:
    order = [
        SchemeId.EqRefl, SchemeId.EqSym, SchemeId.EqTrans, SchemeId.EqCongSucc,
        SchemeId.EqCongPlus, SchemeId.EqCongTimes, SchemeId.EqCongPairLeft,
        SchemeId.EqCongPairRight, SchemeId.EqMem,
    ]
    return [instantiate(SchemeInstance(sid)) for sid in order]


def pairing_axioms() -> list[Formula]:
    return [instantiate(SchemeInstance(SchemeId.PairInj))]
