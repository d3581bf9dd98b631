"""Concrete syntax: formulas, propositional formulas, and proof files.

Variable sorts are lexical: ``n``, ``m1`` are numbers, ``X``, ``A`` are
sets, ``@X`` are classes.  Connectives are ``~ /\\ \\/ -> <->`` (unicode
``¬ ∧ ∨ → ↔`` also accepted), quantifiers ``forall v. body`` and
``exists v. body``, falsehood ``bot``.  ``in`` is membership at either
level and ``<<`` is the ordering of the CM+ extension.  Decimal numerals
stand for iterated successors.

Proof files (``.cmp``) start with ``key: value`` headers (``name``,
``kernel``, ``mode``, ``claim``, ``source``) followed by numbered steps::

    1. | 0 in A -> 0 in B      by assume
    2. | | ~(0 in B)           by assume

The number of ``|`` bars is the step's depth.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from . import kripke
from .axioms import SchemeId, SchemeInstance, Template
from .errors import DanglingReference, ParseError, SortError, UnknownRule
from .hilbert import AxiomScheme, ExRule, Gen, HilbertLine, MP
from .kernel_nd import (
    EM, AndE1, AndE2, AndI, Assume, Derived, EqAx, ExFalso, ExistsE, ExistsI,
    ForallE, ForallI, ImpE, ImpI, LogicMode, NonLogical, OrE, OrI1, OrI2,
    ProofScript, ProofStep, Reiterate, cited_lines,
)
from .syntax import (
    BOT, ZERO, And, Eq, Exists, Forall, Formula, Imp, MemNP, MemSN, Not, Or,
    Pair, Plus, Prec, Sort, Succ, Times, Var, Zero, iff,
)
from .axioms import EQUALITY_IDS

KEYWORDS = {"forall", "exists", "in", "bot", "pair", "by"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<cid>@[A-Za-z][A-Za-z0-9_]*)
  | (?P<uid>[A-Z][A-Za-z0-9_]*)
  | (?P<lid>[a-z][A-Za-z0-9_]*)
  | (?P<op><->|->|/\\|\\/|<<|[()~,.'+*=]|[∀∃∈⊥¬∧∨→↔≺′·])
    """,
    re.VERBOSE,
)

_UNICODE = {"∀": "forall", "∃": "exists", "∈": "in", "⊥": "bot", "¬": "~", "∧": "/\\",
            "∨": "\\/", "→": "->", "↔": "<->", "≺": "<<", "′": "'", "·": "*"}


@dataclass(frozen=True)
class Token:
    kind: str  # num, lid, uid, cid, kw, op, end
    text: str
    col: int


def tokenize(text: str, line: int | None = None, col0: int = 0) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind != "ws":
            if kind == "op" and tok in _UNICODE:
                tok = _UNICODE[tok]
                kind = "kw" if tok in KEYWORDS else "op"
            elif kind == "lid" and tok in KEYWORDS:
                kind = "kw"
            out.append(Token(kind, tok, col0 + pos + 1))
        pos = m.end()
    out.append(Token("end", "", col0 + len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, line: int | None = None, col0: int = 0):
        self.toks = tokenize(text, line, col0)
        self.i = 0
        self.line = line

    # helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None, cls: type = ParseError) -> ParseError:
        tok = tok or self.tok
        if cls is SortError:
            where = f"line {self.line}, column {tok.col}: " if self.line else f"column {tok.col}: "
            return SortError(where + msg)
        return cls(msg, self.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind in ("op", "kw")

    def eat(self, text: str) -> bool:
        if self.at(text):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def done(self) -> None:
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    # variables
    def var(self) -> Var:
        tok = self.tok
        sort = {"lid": Sort.FIRST, "uid": Sort.SECOND, "cid": Sort.THIRD}.get(tok.kind)
        if sort is None:
            raise self.error(f"expected a variable, found {tok.text or 'end of input'!r}")
        self.i += 1
        return Var(tok.text, sort)

    # terms
    def term(self):
        t = self.product()
        while self.eat("+"):
            t = Plus(t, self.product())
        return t

    def product(self):
        t = self.postfix()
        while self.eat("*"):
            t = Times(t, self.postfix())
        return t

    def postfix(self):
        t = self.primary()
        while self.eat("'"):
            t = Succ(t)
        return t

    def primary(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            t = ZERO
            for _ in range(int(tok.text)):
                t = Succ(t)
            return t
        if tok.kind == "lid":
            self.i += 1
            return Var(tok.text)
        if self.eat("pair"):
            self.expect("(")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Pair(a, b)
        if self.eat("("):
            t = self.term()
            self.expect(")")
            return t
        if tok.kind in ("uid", "cid"):
            raise self.error(f"{tok.text} is not a number variable and cannot appear in a term", cls=SortError)
        raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")

    # formulas
    def formula(self) -> Formula:
        left = self.implication()
        if self.eat("<->"):
            return iff(left, self.formula())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.eat("->"):
            return Imp(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        if self.eat("\\/"):
            return Or(left, self.disjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        if self.eat("/\\"):
            return And(left, self.conjunction())
        return left

    def unary(self) -> Formula:
        if self.eat("~"):
            return Not(self.unary())
        for word, cls in (("forall", Forall), ("exists", Exists)):
            if self.eat(word):
                vs = [self.var()]
                while not self.at("."):
                    vs.append(self.var())
                self.expect(".")
                body = self.formula()
                for v in reversed(vs):
                    body = cls(v, body)
                return body
        return self.atom()

    def atom(self) -> Formula:
        tok = self.tok
        if self.eat("bot"):
            return BOT
        if tok.kind == "uid":
            left = self.var()
            if self.eat("in"):
                right = self.tok
                if right.kind != "cid":
                    raise self.error(f"a set can only belong to a class variable, not {right.text!r}", right, SortError)
                return MemNP(left, self.var())
            if self.eat("<<"):
                right = self.tok
                if right.kind != "uid":
                    raise self.error(f"<< relates two set variables, not {right.text!r}", right, SortError)
                return Prec(left, self.var())
            if self.at("="):
                raise self.error("equality between sets is not part of the language", cls=SortError)
            raise self.error(f"expected 'in' or '<<' after {tok.text}")
        if tok.kind == "cid":
            raise self.error(f"class variable {tok.text} cannot start an atomic formula", cls=SortError)
        if self.at("("):
            save = self.i
            try:
                return self.term_atom()
            except (ParseError, SortError):
                self.i = save
            self.expect("(")
            f = self.formula()
            self.expect(")")
            return f
        return self.term_atom()

    def term_atom(self) -> Formula:
        t = self.term()
        if self.eat("="):
            return Eq(t, self.term())
        if self.eat("in"):
            right = self.tok
            if right.kind != "uid":
                raise self.error(f"a number can only belong to a set variable, not {right.text!r}", right, SortError)
            return MemSN(t, self.var())
        raise self.error(f"expected '=' or 'in', found {self.tok.text or 'end of input'!r}")

    # propositional formulas
    def prop(self):
        left = self.prop_imp()
        if self.eat("<->"):
            right = self.prop()
            return kripke.And(kripke.Imp(left, right), kripke.Imp(right, left))
        return left

    def prop_imp(self):
        left = self.prop_or()
        if self.eat("->"):
            return kripke.Imp(left, self.prop_imp())
        return left

    def prop_or(self):
        left = self.prop_and()
        if self.eat("\\/"):
            return kripke.Or(left, self.prop_or())
        return left

    def prop_and(self):
        left = self.prop_unary()
        if self.eat("/\\"):
            return kripke.And(left, self.prop_and())
        return left

    def prop_unary(self):
        if self.eat("~"):
            return kripke.Not(self.prop_unary())
        if self.eat("bot"):
            return kripke.Bot()
        if self.eat("("):
            f = self.prop()
            self.expect(")")
            return f
        tok = self.tok
        if tok.kind in ("lid", "uid"):
            self.i += 1
            return kripke.Atom(tok.text)
        raise self.error(f"expected a propositional formula, found {tok.text or 'end of input'!r}")


def parse_formula(text: str, line: int | None = None, col0: int = 0) -> Formula:
    p = _Parser(text, line, col0)
    f = p.formula()
    p.done()
    return f


def parse_term(text: str, line: int | None = None, col0: int = 0):
    p = _Parser(text, line, col0)
    t = p.term()
    p.done()
    return t


def parse_var(text: str, line: int | None = None, col0: int = 0) -> Var:
    p = _Parser(text, line, col0)
    v = p.var()
    p.done()
    return v


def parse_prop(text: str) -> "kripke.PropFormula":
    p = _Parser(text)
    f = p.prop()
    p.done()
    return f


# -- printing ----------------------------------------------------------------


def _numeral_value(t) -> int | None:
    k = 0
    while isinstance(t, Succ):
        t, k = t.arg, k + 1
    return k if isinstance(t, Zero) else None


def show_term(t, prec: int = 0) -> str:
    k = _numeral_value(t)
    if k is not None:
        return str(k)
    match t:
        case Var(name):
            return name
        case Succ(arg):
            return show_term(arg, 3) + "'"
        case Plus(a, b):
            s, p = f"{show_term(a, 1)} + {show_term(b, 2)}", 1
        case Times(a, b):
            s, p = f"{show_term(a, 2)} * {show_term(b, 3)}", 2
        case Pair(a, b):
            return f"pair({show_term(a)}, {show_term(b)})"
        case _:
            raise TypeError(f"not a term: {t!r}")
    return f"({s})" if p < prec else s


_BIN = {And: ("/\\", 4), Or: ("\\/", 3), Imp: ("->", 2)}


def _is_iff(f: Formula) -> bool:
    return (isinstance(f, And) and isinstance(f.left, Imp) and isinstance(f.right, Imp)
            and f.left.left == f.right.right and f.left.right == f.right.left)


def show(f, *, negations: bool = False) -> str:
    """Print a formula or term; ``negations`` prints ``A -> bot`` as ``~A``."""
    if not isinstance(f, (Eq, MemSN, MemNP, Prec, And, Or, Imp, Not, Forall, Exists)):
        return show_term(f)

    def go(f, prec: int, rightmost: bool) -> str:
        match f:
            case Eq(a, b):
                return "bot" if f == BOT else f"{show_term(a)} = {show_term(b)}"
            case MemSN(t, s):
                return f"{show_term(t)} in {s.name}"
            case MemNP(a, b):
                return f"{a.name} in {b.name}"
            case Prec(a, b):
                return f"{a.name} << {b.name}"
            case Not(body):
                return "~" + _neg_operand(body)
            case Imp(body, r) if negations and r == BOT:
                return "~" + _neg_operand(body)
            case Forall(v, body) | Exists(v, body):
                word = "forall" if isinstance(f, Forall) else "exists"
                vs = [v.name]
                while isinstance(body, type(f)):
                    vs.append(body.var.name)
                    body = body.body
                s = f"{word} {' '.join(vs)}. {go(body, 0, True)}"
                return s if rightmost and prec < 5 else f"({s})"
        if _is_iff(f):
            s, p = f"{go(f.left.left, 2, False)} <-> {go(f.left.right, 2, rightmost or 1 < prec)}", 1
        else:
            op, p = _BIN[type(f)]
            inner_right = rightmost or p < prec
            s = f"{go(f.left, p + 1, False)} {op} {go(f.right, p, inner_right)}"
        return f"({s})" if p < prec else s

    def _neg_operand(body) -> str:
        s = go(body, 5, False)
        atomic = isinstance(body, (Eq, MemSN, MemNP, Prec)) and body != BOT
        return f"({s})" if atomic else s

    return go(f, 0, True)


# -- proof files -------------------------------------------------------------

_STEP_RE = re.compile(r"^\s*(\d+)\s*\.\s*(.*)$")
_HEADER_RE = re.compile(r"^([A-Za-z_]+)\s*:\s*(.*)$")
_ARG_RE = re.compile(r"\[[^\]]*\]|\d+\s*-\s*\d+|[^\s,]+")

ND_RULES: dict[str, tuple[str, ...]] = {
    "assume": (),
    "reit": ("ref",),
    "and_i": ("ref", "ref"),
    "and_e1": ("ref",),
    "and_e2": ("ref",),
    "or_i1": ("ref",),
    "or_i2": ("ref",),
    "or_e": ("ref", "block", "block"),
    "imp_i": ("block",),
    "imp_e": ("ref", "ref"),
    "forall_i": ("ref", "var"),
    "forall_e": ("ref", "term"),
    "exists_i": ("ref", "term"),
    "exists_e": ("ref", "block", "var"),
    "ex_falso": ("ref",),
    "em": (),
}
HILBERT_RULES: dict[str, tuple[str, ...]] = {
    "mp": ("ref", "ref"),
    "gen": ("ref", "var"),
    "ex_rule": ("ref", "var"),
}

_ND_BUILD: dict[str, Callable] = {
    "assume": Assume, "reit": Reiterate, "and_i": AndI, "and_e1": AndE1, "and_e2": AndE2,
    "or_i1": OrI1, "or_i2": OrI2, "or_e": OrE, "imp_i": ImpI, "imp_e": ImpE,
    "forall_i": ForallI, "forall_e": ForallE, "exists_i": ExistsI, "exists_e": ExistsE,
    "ex_falso": ExFalso, "em": EM,
}
_HILBERT_BUILD: dict[str, Callable] = {"mp": MP, "gen": Gen, "ex_rule": ExRule}

META_NAMES = ("phi", "psi", "sigma")


def _parse_arg(kind: str, text: str, line: int):
    if kind == "ref":
        if not text.isdigit():
            raise ParseError(f"expected a line number, found {text!r}", line)
        return int(text)
    if kind == "block":
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", text)
        if not m:
            raise ParseError(f"expected a block range like 3-5, found {text!r}", line)
        return (int(m.group(1)), int(m.group(2)))
    inner = text[1:-1] if text.startswith("[") and text.endswith("]") else text
    if kind == "var":
        return parse_var(inner.strip(), line)
    return parse_argument(inner.strip(), line)


def parse_argument(text: str, line: int | None = None):
    """A quantifier instance: a number term, or a set/class variable."""
    if re.fullmatch(r"@?[A-Z][A-Za-z0-9_]*", text) or text.startswith("@"):
        return parse_var(text, line)
    return parse_term(text, line)


def parse_bindings(text: str, line: int | None = None, term_names: tuple[str, ...] = ()) -> dict[str, object]:
    """Parse ``phi(n) := n = n; X := W`` into templates and variables."""
    out: dict[str, object] = {}
    text = text.strip()
    if not text:
        return out
    for part in text.split(";"):
        if not part.strip():
            continue
        if ":=" not in part:
            raise ParseError(f"expected 'name := value' in binding {part.strip()!r}", line)
        lhs, rhs = (s.strip() for s in part.split(":=", 1))
        m = re.fullmatch(r"([A-Za-z_@][A-Za-z0-9_]*)\s*(?:\((.*)\))?", lhs)
        if not m:
            raise ParseError(f"bad binding target {lhs!r}", line)
        name, slots = m.group(1), m.group(2)
        if name in META_NAMES:
            vs = tuple(parse_var(s.strip(), line) for s in slots.split(",")) if slots and slots.strip() else ()
            out[name] = Template(vs, parse_formula(rhs, line))
        elif slots is not None:
            raise ParseError(f"only phi, psi and sigma take arguments, not {name!r}", line)
        elif name in term_names:
            out[name] = parse_argument(rhs, line)
        else:
            out[name] = parse_var(rhs, line)
    return out


def _scheme_instance(words: list[str], rest: str, line: int) -> SchemeInstance:
    if not words:
        raise ParseError("missing axiom name", line)
    try:
        sid = SchemeId(words[0])
    except ValueError:
        raise UnknownRule(f"unknown axiom {words[0]!r}", line) from None
    b = parse_bindings(rest, line)
    template = b.pop("phi", None)
    for k in ("psi", "sigma"):
        if k in b:
            raise ParseError(f"axiom {sid.value} only takes phi", line)
    return SchemeInstance(sid, template, b)


def parse_justification(text: str, kernel: str, line: int):
    text = text.strip()
    m = re.match(r"([A-Za-z_][A-Za-z0-9_]*)\s*(.*)$", text)
    if not m:
        raise ParseError("missing rule name", line)
    rule, rest = m.group(1), m.group(2)
    if rule == "axiom":
        sm = re.match(r"(\S+)\s*(.*)$", rest)
        inst = _scheme_instance([sm.group(1)] if sm else [], sm.group(2) if sm else "", line)
        if kernel == "nd" and inst.id in EQUALITY_IDS:
            return EqAx(inst)
        return NonLogical(inst)
    if kernel == "hilbert":
        if rule == "ax":
            km = re.match(r"(\d+)\s*(.*)$", rest)
            if not km:
                raise ParseError("expected a scheme number after 'ax'", line)
            k = int(km.group(1))
            if not 1 <= k <= 13:
                raise UnknownRule(f"there is no axiom scheme {k}", line)
            return AxiomScheme(k, parse_bindings(km.group(2), line, term_names=("t",)))
        table, build = HILBERT_RULES, _HILBERT_BUILD
    else:
        if rule == "derived":
            dm = re.match(r"(\S+)\s*(.*)$", rest)
            if not dm:
                raise ParseError("expected a derived rule name", line)
            arg = dm.group(2).strip()
            if arg.startswith("[") and arg.endswith("]"):
                arg = arg[1:-1]
            return Derived(dm.group(1), parse_formula(arg, line))
        table, build = ND_RULES, _ND_BUILD
    if rule not in table:
        raise UnknownRule(f"unknown rule {rule!r}", line)
    kinds = table[rule]
    args = _ARG_RE.findall(rest)
    if len(args) != len(kinds):
        raise ParseError(f"rule {rule} takes {len(kinds)} argument(s), got {len(args)}", line)
    return build[rule](*(_parse_arg(k, a.strip(), line) for k, a in zip(kinds, args)))


def _split_by(body: str, line: int) -> tuple[str, str]:
    m = re.search(r"\s+by\s+|\s+by$", body)
    if not m:
        raise ParseError("missing 'by <rule>'", line)
    return body[: m.start()], body[m.end():]


def parse_proof(text: str, name: str | None = None):
    """Parse a ``.cmp`` file into a :class:`ProofScript`.

    The ``kernel`` header selects natural deduction (``nd``, the default)
    or Hilbert (``hilbert``) steps.
    """
    headers: dict[str, str] = {}
    raw_steps: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        m = _STEP_RE.match(stripped)
        if m:
            raw_steps.append((lineno, int(m.group(1)), m.group(2)))
            continue
        h = _HEADER_RE.match(stripped.strip())
        if h and not raw_steps:
            headers[h.group(1).lower()] = h.group(2).strip()
            continue
        raise ParseError(f"cannot read line {stripped.strip()!r}", lineno, 1)

    kernel = headers.get("kernel", "nd").lower()
    if kernel not in ("nd", "hilbert"):
        raise ParseError(f"unknown kernel {kernel!r}", None)
    mode = LogicMode.parse(headers["mode"]) if "mode" in headers else None
    claim = parse_formula(headers["claim"]) if headers.get("claim") else None

    steps = []
    for expected, (lineno, index, body) in enumerate(raw_steps, 1):
        if index != expected:
            raise ParseError(f"step {index} is out of order (expected {expected})", lineno, 1)
        depth = 0
        body = body.lstrip()
        while body.startswith("|"):
            depth += 1
            body = body[1:].lstrip()
        if depth and kernel == "hilbert":
            raise ParseError("Hilbert proofs have no assumption blocks", lineno, 1)
        stmt_text, just_text = _split_by(body, lineno)
        col0 = raw_col(text.splitlines()[lineno - 1], stmt_text)
        statement = parse_formula(stmt_text, lineno, col0)
        just = parse_justification(just_text, kernel, lineno)
        for ref in cited_lines(just):
            if ref >= index or ref < 1:
                raise DanglingReference(f"step {index} cites line {ref}, which does not precede it", lineno, 1)
        if kernel == "hilbert":
            steps.append(HilbertLine(index, statement, just))
        else:
            steps.append(ProofStep(index, statement, just, depth))
    return ProofScript(tuple(steps), kernel, mode, claim, headers.get("name", name), headers.get("source"))


def raw_col(raw_line: str, fragment: str) -> int:
    pos = raw_line.find(fragment)
    return max(pos, 0)


# -- proof printing ----------------------------------------------------------


def _show_arg(a) -> str:
    if isinstance(a, Var):
        return a.name
    s = show_term(a)
    return s if re.fullmatch(r"[A-Za-z0-9_']+", s) else f"[{s}]"


def _show_bindings(inst_template, variables, extra=None) -> str:
    parts = []
    for name, value in (extra or {}).items():
        if isinstance(value, Template):
            slots = f"({', '.join(v.name for v in value.slots)})" if value.slots else ""
            parts.append(f"{name}{slots} := {show(value.body, negations=True)}")
        elif isinstance(value, Var):
            parts.append(f"{name} := {value.name}")
        elif value is not None:
            parts.append(f"{name} := {show(value, negations=True)}")
    if inst_template is not None:
        slots = ", ".join(v.name for v in inst_template.slots)
        parts.append(f"phi({slots}) := {show(inst_template.body, negations=True)}")
    for role, v in (variables or {}).items():
        parts.append(f"{role} := {v.name}")
    return "; ".join(parts)


def show_justification(j) -> str:
    b = lambda r: f"{r[0]}-{r[1]}"  # noqa: E731
    match j:
        case Assume():
            return "assume"
        case Reiterate(i):
            return f"reit {i}"
        case AndI(i, k):
            return f"and_i {i}, {k}"
        case AndE1(i):
            return f"and_e1 {i}"
        case AndE2(i):
            return f"and_e2 {i}"
        case OrI1(i):
            return f"or_i1 {i}"
        case OrI2(i):
            return f"or_i2 {i}"
        case OrE(i, l, r):
            return f"or_e {i}, {b(l)}, {b(r)}"
        case ImpI(blk):
            return f"imp_i {b(blk)}"
        case ImpE(i, k):
            return f"imp_e {i}, {k}"
        case ForallI(i, x):
            return f"forall_i {i} {x.name}"
        case ForallE(i, t):
            return f"forall_e {i} {_show_arg(t)}"
        case ExistsI(i, t, _):
            return f"exists_i {i} {_show_arg(t)}"
        case ExistsE(i, blk, y):
            return f"exists_e {i}, {b(blk)} {y.name}"
        case ExFalso(i):
            return f"ex_falso {i}"
        case EM():
            return "em"
        case NonLogical(inst) | EqAx(inst):
            binds = _show_bindings(inst.template, inst.variables)
            return f"axiom {inst.id.value}" + (f" {binds}" if binds else "")
        case Derived(name, inp):
            return f"derived {name} [{show(inp)}]"
        case AxiomScheme(k, bindings):
            binds = _show_bindings(None, None, bindings)
            return f"ax {k}" + (f" {binds}" if binds else "")
        case MP(i, k):
            return f"mp {i}, {k}"
        case Gen(i, x):
            return f"gen {i} {x.name}"
        case ExRule(i, x):
            return f"ex_rule {i} {x.name}"
    raise TypeError(f"unknown justification {j!r}")


def format_proof(script: ProofScript, *, negations: bool = True, comment: str | None = None) -> str:
    """Render a script in the ``.cmp`` format that :func:`parse_proof` reads."""
    out = []
    if comment:
        out.extend(f"# {c}".rstrip() for c in comment.splitlines())
    if script.name:
        out.append(f"name: {script.name}")
    out.append(f"kernel: {script.kernel}")
    if script.mode is not None:
        out.append(f"mode: {script.mode.label}")
    if script.claim is not None:
        out.append(f"claim: {show(script.claim, negations=negations)}")
    if script.source:
        out.append(f"source: {script.source}")
    out.append("")
    rows = []
    for s in script.steps:
        depth = getattr(s, "depth", 0)
        bars = "| " * depth
        rows.append((f"{s.index}. {bars}{show(s.statement, negations=negations)}", show_justification(s.justification)))
    width = min(max((len(r[0]) for r in rows), default=0), 72)
    for stmt, just in rows:
        out.append(f"{stmt.ljust(width)}  by {just}")
    return "\n".join(out) + "\n"


def show_model(model: "kripke.KripkeModel") -> str:
    return kripke.format_model(model)
