"""A small DSL for writing natural-deduction scripts.

Each rule method works out the statement it justifies, appends the step and
returns its line number, so proofs read as a sequence of rule applications::

    b = ScriptBuilder()
    h = b.assume(parse_formula("0 in A /\\ 0 in B"))
    b.and_e2(h)
    b.imp_i(b.close())
"""
from __future__ import annotations

from ..axioms import SchemeInstance, instantiate
from ..kernel_nd import (
    EM, AndE1, AndE2, AndI, Assume, Block, Derived, EqAx, ExFalso, ExistsE, ExistsI,
    ForallE, ForallI, ImpE, ImpI, LogicMode, NonLogical, OrE, OrI1, OrI2, ProofScript,
    ProofStep, Reiterate, _expand_checked, _lookup_rule, renumber_justification,
)
from ..axioms import EQUALITY_IDS
from ..syntax import (
    BOT, And, Exists, Forall, Formula, Imp, Or, Var, instantiate_bound, to_bot_form,
)


class ScriptBuilder:
    def __init__(self) -> None:
        self.steps: list[ProofStep] = []
        self.paths: list[tuple[int, ...]] = []
        self._open: list[int] = []

    # bookkeeping
    @property
    def depth(self) -> int:
        return len(self._open)

    @property
    def last(self) -> int:
        return len(self.steps)

    def stmt(self, i: int) -> Formula:
        return self.steps[i - 1].statement

    def visible(self) -> list[int]:
        """Lines citable from the next step at the current depth."""
        here = tuple(self._open)
        return [i for i, p in enumerate(self.paths, 1) if here[: len(p)] == p]

    def _add(self, phi: Formula, j, depth: int | None = None) -> int:
        idx = len(self.steps) + 1
        d = self.depth if depth is None else depth
        self.steps.append(ProofStep(idx, to_bot_form(phi), j, d))
        self.paths.append(tuple(self._open))
        return idx

    def assume(self, phi: Formula) -> int:
        idx = len(self.steps) + 1
        self._open.append(idx)
        self.steps.append(ProofStep(idx, to_bot_form(phi), Assume(), self.depth))
        self.paths.append(tuple(self._open))
        return idx

    def close(self) -> Block:
        start = self._open[-1]
        if self.paths[-1] != tuple(self._open):
            raise ValueError("a block must end with a step of its own, not a nested block")
        self._open.pop()
        return (start, self.last)

    def script(self, mode: LogicMode | None = None, name: str | None = None, claim: Formula | None = None,
               source: str | None = None) -> ProofScript:
        if self._open:
            raise ValueError("assumption blocks are still open")
        return ProofScript(tuple(self.steps), "nd", mode, None if claim is None else to_bot_form(claim), name, source)

    # rules
    def reit(self, i: int) -> int:
        return self._add(self.stmt(i), Reiterate(i))

    def and_i(self, i: int, j: int) -> int:
        return self._add(And(self.stmt(i), self.stmt(j)), AndI(i, j))

    def and_e1(self, i: int) -> int:
        return self._add(self.stmt(i).left, AndE1(i))

    def and_e2(self, i: int) -> int:
        return self._add(self.stmt(i).right, AndE2(i))

    def or_i1(self, i: int, right: Formula) -> int:
        return self._add(Or(self.stmt(i), to_bot_form(right)), OrI1(i))

    def or_i2(self, i: int, left: Formula) -> int:
        return self._add(Or(to_bot_form(left), self.stmt(i)), OrI2(i))

    def or_e(self, i: int, left: Block, right: Block) -> int:
        return self._add(self.stmt(left[1]), OrE(i, left, right))

    def imp_i(self, block: Block) -> int:
        return self._add(Imp(self.stmt(block[0]), self.stmt(block[1])), ImpI(block))

    def imp_e(self, i: int, j: int) -> int:
        """Modus ponens: ``i`` is the implication, ``j`` its antecedent."""
        return self._add(self.stmt(i).right, ImpE(i, j))

    def forall_i(self, i: int, x: Var) -> int:
        return self._add(Forall(x, self.stmt(i)), ForallI(i, x))

    def forall_e(self, i: int, t) -> int:
        a = self.stmt(i)
        return self._add(instantiate_bound(a.body, a.var, t), ForallE(i, t))

    def exists_i(self, i: int, t, target: Exists) -> int:
        return self._add(target, ExistsI(i, t))

    def exists_e(self, i: int, block: Block, y: Var) -> int:
        return self._add(self.stmt(block[1]), ExistsE(i, block, y))

    def ex_falso(self, i: int, phi: Formula) -> int:
        return self._add(phi, ExFalso(i))

    def em(self, phi: Formula) -> int:
        phi = to_bot_form(phi)
        return self._add(Or(phi, Imp(phi, BOT)), EM())

    def axiom(self, inst: SchemeInstance) -> int:
        j = EqAx(inst) if inst.id in EQUALITY_IDS else NonLogical(inst)
        return self._add(instantiate(inst), j)

    def derived(self, name: str, inp: Formula) -> int:
        script, _ = _expand_checked(_lookup_rule(name), inp)
        return self._add(script.conclusion, Derived(name, inp))

    def include(self, script: ProofScript) -> int:
        """Splice a closed script in at the current depth; returns its last line."""
        base, depth = self.last, self.depth
        for s in script.steps:
            j = renumber_justification(s.justification, lambda k: k + base)
            self.steps.append(ProofStep(s.index + base, to_bot_form(s.statement), j, s.depth + depth))
        # paths of spliced lines: rebuild from depths
        stack = list(self._open)
        for s in self.steps[base:]:
            rel = s.depth - depth
            if isinstance(s.justification, Assume):
                del stack[depth + rel - 1:]
                stack.append(s.index)
            else:
                del stack[depth + rel:]
            self.paths.append(tuple(stack))
        return self.last
