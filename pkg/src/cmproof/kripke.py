"""Propositional Kripke semantics and bounded countermodel search.

Extensions are computed as world bitmasks: bit ``i`` is set when world
``wi`` forces the formula.  Under minimal semantics ``bot`` behaves as an
ordinary persistent atom; under intuitionistic semantics it is forced
nowhere; classical semantics is the one-world case.

Search visits models in a fixed canonical order so results are
reproducible.  Worlds are ``w0 .. w(n-1)`` and every order is a partial
order compatible with the labelling (``wi <= wj`` only if ``i <= j``);
every finite poset admits such a labelling, so nothing is lost.  Models
are ranked by world count, then by the order bitmask (bit ``k`` for the
``k``-th pair ``i < j`` in lexicographic order), then by the valuation
bitmask (bit ``w * len(atoms) + a`` for world ``w`` and atom index ``a``,
atoms sorted by name with ``bot`` last).
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .errors import UnknownWorld

BOT_ATOM = "bot"


class Semantics(enum.Enum):
    MINIMAL = "minimal"
    INTUITIONISTIC = "int"
    CLASSICAL = "classical"

    @classmethod
    def parse(cls, value: "Semantics | str") -> "Semantics":
        if isinstance(value, Semantics):
            return value
        aliases = {"intuitionistic": "int", "min": "minimal"}
        try:
            return cls(aliases.get(value.lower(), value.lower()))
        except ValueError:
            raise ValueError(f"unknown semantics {value!r}") from None


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Bot:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True)
class And:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return show_prop(self)


@dataclass(frozen=True)
class Or:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return show_prop(self)


@dataclass(frozen=True)
class Imp:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return show_prop(self)


PropFormula = Atom | Bot | And | Or | Imp


def Not(body: PropFormula) -> Imp:
    return Imp(body, Bot())


def show_prop(f: PropFormula, prec: int = 0) -> str:
    match f:
        case Atom(name):
            return name
        case Bot():
            return "bot"
        case Imp(body, Bot()):
            return "~" + show_prop(body, 4)
        case And(l, r):
            s, p = f"{show_prop(l, 4)} /\\ {show_prop(r, 3)}", 3
        case Or(l, r):
            s, p = f"{show_prop(l, 3)} \\/ {show_prop(r, 2)}", 2
        case Imp(l, r):
            s, p = f"{show_prop(l, 2)} -> {show_prop(r, 1)}", 1
        case _:
            raise TypeError(f"not a propositional formula: {f!r}")
    return f"({s})" if p < prec else s


def atoms(f: PropFormula) -> set[str]:
    match f:
        case Atom(name):
            return {name}
        case Bot():
            return set()
        case And(l, r) | Or(l, r) | Imp(l, r):
            return atoms(l) | atoms(r)
    raise TypeError(f"not a propositional formula: {f!r}")


def prop_size(f: PropFormula) -> int:
    match f:
        case Atom() | Bot():
            return 1
        case And(l, r) | Or(l, r) | Imp(l, r):
            return 1 + prop_size(l) + prop_size(r)
    raise TypeError(f"not a propositional formula: {f!r}")


def uses_bot(f: PropFormula) -> bool:
    match f:
        case Bot():
            return True
        case Atom():
            return False
        case And(l, r) | Or(l, r) | Imp(l, r):
            return uses_bot(l) or uses_bot(r)
    raise TypeError(f"not a propositional formula: {f!r}")


@dataclass(frozen=True)
class KripkeModel:
    """A finite model; ``order`` lists pairs ``(w, v)`` with ``w <= v``.

    Reflexive pairs may be omitted.  The order must already be transitive
    and the valuation monotone; ``bot`` may appear in a valuation only
    under minimal semantics.
    """

    worlds: tuple[str, ...]
    order: frozenset[tuple[str, str]]
    valuation: dict[str, frozenset[str]] = field(hash=False, compare=False)
    semantics: Semantics = Semantics.INTUITIONISTIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "worlds", tuple(self.worlds))
        refl = {(w, w) for w in self.worlds}
        object.__setattr__(self, "order", frozenset(self.order) | refl)
        object.__setattr__(self, "semantics", Semantics.parse(self.semantics))
        val = {w: frozenset(self.valuation.get(w, ())) for w in self.worlds}
        object.__setattr__(self, "valuation", val)
        names = set(self.worlds)
        if len(names) != len(self.worlds):
            raise ValueError("duplicate world names")
        for w, v in self.order:
            if w not in names or v not in names:
                raise UnknownWorld(f"order mentions unknown world {w if w not in names else v!r}")
        for (a, b), (c, d) in itertools.product(self.order, repeat=2):
            if b == c and (a, d) not in self.order:
                raise ValueError(f"order is not transitive: {a}<={b}<={d}")
        for w, v in self.order:
            if not val[w] <= val[v]:
                raise ValueError(f"valuation is not monotone along {w}<={v}")
        if self.semantics is not Semantics.MINIMAL and any(BOT_ATOM in s for s in val.values()):
            raise ValueError("bot can only be forced under minimal semantics")

    @property
    def _index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.worlds)}

    def up_masks(self) -> list[int]:
        idx = self._index
        ups = [0] * len(self.worlds)
        for w, v in self.order:
            ups[idx[w]] |= 1 << idx[v]
        return ups

    def atom_mask(self, name: str) -> int:
        return sum(1 << i for i, w in enumerate(self.worlds) if name in self.valuation[w])

    def extension(self, phi: PropFormula) -> int:
        """Bitmask of the worlds forcing ``phi``."""
        ups = self.up_masks()
        minimal = self.semantics is Semantics.MINIMAL
        return _evaluate(phi, ups, lambda a: self.atom_mask(a), self.atom_mask(BOT_ATOM) if minimal else 0)


def _evaluate(phi: PropFormula, ups: list[int], atom: Callable[[str], int], bot: int) -> int:
    match phi:
        case Atom(name):
            return atom(name)
        case Bot():
            return bot
        case And(l, r):
            return _evaluate(l, ups, atom, bot) & _evaluate(r, ups, atom, bot)
        case Or(l, r):
            return _evaluate(l, ups, atom, bot) | _evaluate(r, ups, atom, bot)
        case Imp(l, r):
            a = _evaluate(l, ups, atom, bot)
            b = _evaluate(r, ups, atom, bot)
            bad = a & ~b
            return sum(1 << i for i, up in enumerate(ups) if not up & bad)
    raise TypeError(f"not a propositional formula: {phi!r}")


def forces(model: KripkeModel, world: str, phi: PropFormula) -> bool:
    if world not in model.valuation:
        raise UnknownWorld(f"no world named {world!r}")
    return bool(model.extension(phi) >> model._index[world] & 1)


def validates(model: KripkeModel, phi: PropFormula) -> bool:
    return model.extension(phi) == (1 << len(model.worlds)) - 1


# -- canonical enumeration ---------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@lru_cache(maxsize=None)
def orders(n: int, rooted: bool = False) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Naturally labelled partial orders on ``n`` worlds as ``(mask, up-sets)``,
    ascending by mask.  ``rooted`` keeps only orders with ``w0`` below everything."""
    pairs = _pairs(n)
    out = []
    for mask in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if mask >> k & 1}
        if any((i, j) in rel and (j, k) in rel and (i, k) not in rel for i, j, k in itertools.permutations(range(n), 3)):
            continue
        if rooted and any((0, j) not in rel for j in range(1, n)):
            continue
        ups = tuple((1 << i) | sum(1 << j for j in range(n) if (i, j) in rel) for i in range(n))
        out.append((mask, ups))
    return tuple(out)


@lru_cache(maxsize=None)
def upsets(ups: tuple[int, ...]) -> tuple[int, ...]:
    """All up-closed world sets of an order, ascending."""
    n = len(ups)
    return tuple(s for s in range(1 << n) if all(ups[i] & ~s == 0 for i in range(n) if s >> i & 1))


def _atom_order(phi: PropFormula, semantics: Semantics) -> list[str]:
    names = sorted(atoms(phi))
    if semantics is Semantics.MINIMAL and uses_bot(phi):
        names.append(BOT_ATOM)
    return names


def _valuation_mask(sets: tuple[int, ...], n: int) -> int:
    k = len(sets)
    mask = 0
    for a, s in enumerate(sets):
        for w in range(n):
            if s >> w & 1:
                mask |= 1 << (w * k + a)
    return mask


def _compile(phi: PropFormula, names: list[str], minimal: bool):
    pos = {a: i for i, a in enumerate(names)}
    bot_index = pos.get(BOT_ATOM) if minimal else None

    def run(ups: tuple[int, ...], sets: tuple[int, ...]) -> int:
        bot = sets[bot_index] if bot_index is not None else 0
        return _evaluate(phi, list(ups), lambda a: sets[pos[a]], bot)

    return run


def _models(n: int, names: list[str], rooted: bool) -> Iterator[tuple[int, tuple[int, ...], int, tuple[int, ...]]]:
    for omask, ups in orders(n, rooted):
        choices = [upsets(ups)] * len(names)
        combos = sorted(itertools.product(*choices), key=lambda c: _valuation_mask(c, n))
        for sets in combos:
            yield omask, ups, _valuation_mask(sets, n), sets


def _build(n: int, ups: tuple[int, ...], names: list[str], sets: tuple[int, ...], semantics: Semantics) -> KripkeModel:
    worlds = tuple(f"w{i}" for i in range(n))
    order = {(worlds[i], worlds[j]) for i in range(n) for j in range(n) if i != j and ups[i] >> j & 1}
    val = {w: frozenset(a for a, s in zip(names, sets) if s >> i & 1) for i, w in enumerate(worlds)}
    return KripkeModel(worlds, frozenset(order), val, semantics)


def _has_rooted_countermodel(run, n: int, names: list[str]) -> bool:
    for _, ups in orders(n, rooted=True):
        for sets in itertools.product(upsets(ups), repeat=len(names)):
            if not run(ups, sets) & 1:
                return True
    return False


def search_countermodel(phi: PropFormula, max_worlds: int, semantics: Semantics | str = Semantics.INTUITIONISTIC) -> KripkeModel | None:
    """First model (in canonical order) with at most ``max_worlds`` worlds refuting ``phi``.

    A model refuting ``phi`` at ``w`` restricts to the worlds above ``w``,
    so the smallest refuting size is found by checking rooted models at
    the root only; the canonical scan then runs at that size alone.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    semantics = Semantics.parse(semantics)
    if semantics is Semantics.CLASSICAL:
        max_worlds = 1
    names = _atom_order(phi, semantics)
    run = _compile(phi, names, semantics is Semantics.MINIMAL)
    for n in range(1, max_worlds + 1):
        if not _has_rooted_countermodel(run, n, names):
            continue
        full = (1 << n) - 1
        for _, ups, _, sets in _models(n, names, rooted=False):
            if run(ups, sets) != full:
                return _build(n, ups, names, sets, semantics)
    return None


def enumerate_models(n: int, names: list[str], semantics: Semantics | str) -> Iterator[KripkeModel]:
    """Every canonical model on ``n`` worlds over ``names``, in canonical order."""
    semantics = Semantics.parse(semantics)
    if semantics is Semantics.CLASSICAL and n != 1:
        return
    names = sorted(a for a in names if a != BOT_ATOM) + ([BOT_ATOM] if semantics is Semantics.MINIMAL and BOT_ATOM in names else [])
    for _, ups, _, sets in _models(n, names, rooted=False):
        yield _build(n, ups, names, sets, semantics)


# -- serialisation -----------------------------------------------------------


def _sorted_worlds(model: KripkeModel) -> list[str]:
    return list(model.worlds)


def format_model(model: KripkeModel) -> str:
    idx = model._index
    pairs = sorted((p for p in model.order if p[0] != p[1]), key=lambda p: (idx[p[0]], idx[p[1]]))
    lines = [
        "worlds: " + " ".join(model.worlds),
        ("order: " + " ".join(f"{a}<={b}" for a, b in pairs)).rstrip(),
    ]
    for w in model.worlds:
        lines.append(f"{w}: {{{', '.join(sorted(model.valuation[w]))}}}")
    return "\n".join(lines) + "\n"


def parse_model(text: str, semantics: Semantics | str = Semantics.INTUITIONISTIC) -> KripkeModel:
    worlds: list[str] = []
    order: set[tuple[str, str]] = set()
    val: dict[str, frozenset[str]] = {}
    for raw in text.splitlines():
        if not raw.strip():
            continue
        key, _, rest = raw.partition(":")
        key, rest = key.strip(), rest.strip()
        if key == "worlds":
            worlds = rest.split()
        elif key == "order":
            for item in rest.split():
                a, _, b = item.partition("<=")
                order.add((a, b))
        else:
            body = rest.strip().removeprefix("{").removesuffix("}")
            val[key] = frozenset(a.strip() for a in body.split(",") if a.strip())
    return KripkeModel(tuple(worlds), frozenset(order), val, semantics)


def model_to_dict(model: KripkeModel) -> dict:
    idx = model._index
    pairs = sorted((p for p in model.order if p[0] != p[1]), key=lambda p: (idx[p[0]], idx[p[1]]))
    return {
        "semantics": model.semantics.value,
        "worlds": list(model.worlds),
        "order": [list(p) for p in pairs],
        "valuation": {w: sorted(model.valuation[w]) for w in model.worlds},
    }


def model_to_json(model: KripkeModel) -> str:
    return json.dumps(model_to_dict(model), indent=2, sort_keys=True)


# -- bridge from CM formulas -------------------------------------------------


def to_prop(formula, names: dict | None = None) -> tuple[PropFormula, dict]:
    """Read a CM formula propositionally.

    Atomic and quantified subformulas become atoms ``p, q, r, ...`` in order
    of first appearance (alpha-equal ones share an atom); ``bot`` and
    negation keep their meaning.  Returns the formula and the atom table.
    """
    from . import syntax as S

    table: dict = {} if names is None else names
    letters = "pqrstuvw"

    def atom_for(f) -> Atom:
        for known, name in table.items():
            if S.alpha_equal(known, f):
                return Atom(name)
        k = len(table)
        name = letters[k] if k < len(letters) else f"p{k}"
        table[f] = name
        return Atom(name)

    def go(f) -> PropFormula:
        if S.is_bot(f):
            return Bot()
        match f:
            case S.And(l, r):
                return And(go(l), go(r))
            case S.Or(l, r):
                return Or(go(l), go(r))
            case S.Imp(l, r):
                return Imp(go(l), go(r))
            case S.Not(b):
                return Imp(go(b), Bot())
        return atom_for(f)

    return go(formula), table
