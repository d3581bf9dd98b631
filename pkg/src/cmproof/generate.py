"""Random formulas, proofs and mutations for fuzzing the kernels.

Everything takes an explicit :class:`random.Random` so runs are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import replace
from typing import Iterator, Sequence

from .hilbert import AxiomScheme, HilbertLine, MP, scheme_instance
from .kernel_nd import LogicMode, ProofScript, ProofStep
from .corpus.builder import ScriptBuilder
from .syntax import BOT, And, Formula, Imp, MemSN, Not, Or, Sort, Var, ZERO, alpha_equal, size

ATOMS: tuple[Formula, ...] = tuple(MemSN(ZERO, Var(name, Sort.SECOND)) for name in "ABC")


def random_formula(rng: random.Random, depth: int = 3, atoms: Sequence[Formula] = ATOMS,
                   negation: str = "bot") -> Formula:
    """A quantifier-free formula over ``atoms``.

    ``negation`` picks how ``~`` is written: ``"bot"`` as ``A -> bot`` (natural
    deduction) or ``"neg"`` as primitive negation (Hilbert).
    """
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice(list(atoms) + ([BOT] if negation == "bot" and rng.random() < 0.1 else []))
    op = rng.choice("&|>~")
    if op == "~":
        body = random_formula(rng, depth - 1, atoms, negation)
        return Not(body) if negation == "neg" else Imp(body, BOT)
    left = random_formula(rng, depth - 1, atoms, negation)
    right = random_formula(rng, depth - 1, atoms, negation)
    return {"&": And, "|": Or, ">": Imp}[op](left, right)


_META = {1: "phi psi", 2: "phi psi sigma", 3: "phi psi", 4: "phi psi", 5: "phi psi", 6: "phi psi",
         7: "phi psi", 8: "phi psi sigma", 9: "phi psi", 12: "phi psi"}


def random_hilbert_proof(rng: random.Random, max_lines: int = 50, mode: LogicMode | str = LogicMode.MINIMAL,
                         max_size: int = 15) -> ProofScript:
    """A valid propositional Hilbert proof with at most ``max_lines`` lines.

    Lines are axiom instances (metavariables are small random formulas or
    earlier theorems) and modus ponens steps between earlier lines.
    """
    mode = LogicMode.parse(mode)
    schemes = [1, 2, 3, 4, 5, 6, 7, 8, 9] + ([12] if mode >= LogicMode.INTUITIONISTIC else [])
    target = rng.randint(1, max_lines)
    lines: list[HilbertLine] = []
    proved: list[Formula] = []

    def pick() -> Formula:
        small = [f for f in proved if size(f) <= max_size // 2]
        if small and rng.random() < 0.4:
            return rng.choice(small)
        return random_formula(rng, 2, negation="neg")

    while len(lines) < target:
        idx = len(lines) + 1
        mps = [(i, j) for i, a in enumerate(proved, 1) for j, b in enumerate(proved, 1)
               if isinstance(a, Imp) and alpha_equal(a.left, b)]
        if mps and rng.random() < 0.5:
            i, j = rng.choice(mps)
            phi = proved[i - 1].right
            just = MP(i, j)
        else:
            k = rng.choice(schemes)
            bindings = {m: pick() for m in _META[k].split()}
            phi = scheme_instance(k, bindings)
            just = AxiomScheme(k, bindings)
        lines.append(HilbertLine(idx, phi, just))
        proved.append(phi)
    return ProofScript(tuple(lines), "hilbert", mode, None, "random_hilbert")


def random_nd_script(rng: random.Random, max_steps: int = 30, max_depth: int = 3) -> ProofScript:
    """A random natural-deduction script that minimal logic accepts.

    It is grown by applying rules to whatever is in scope and finally
    discharging every open assumption with implication introduction.
    """
    b = ScriptBuilder()
    target = rng.randint(1, max_steps)
    while b.last < target:
        vis = b.visible()
        stmts = {i: b.stmt(i) for i in vis}
        moves = []
        if b.depth < max_depth:
            moves.append("assume")
        if vis:
            moves += ["and_i", "or_i", "reit"]
        if any(isinstance(f, And) for f in stmts.values()):
            moves.append("and_e")
        imps = [(i, j) for i, f in stmts.items() for j, g in stmts.items()
                if isinstance(f, Imp) and alpha_equal(f.left, g)]
        if imps:
            moves += ["imp_e", "imp_e"]
        if b.depth and b.paths[-1] == tuple(b._open):
            moves.append("imp_i")
        move = rng.choice(moves)
        if move == "assume":
            b.assume(random_formula(rng, 2))
        elif move == "and_i":
            b.and_i(rng.choice(vis), rng.choice(vis))
        elif move == "or_i":
            i = rng.choice(vis)
            other = random_formula(rng, 1)
            b.or_i1(i, other) if rng.random() < 0.5 else b.or_i2(i, other)
        elif move == "reit":
            b.reit(rng.choice(vis))
        elif move == "and_e":
            i = rng.choice([i for i, f in stmts.items() if isinstance(f, And)])
            b.and_e1(i) if rng.random() < 0.5 else b.and_e2(i)
        elif move == "imp_e":
            b.imp_e(*rng.choice(imps))
        else:
            b.imp_i(b.close())
    while b.depth:
        if b.paths[-1] != tuple(b._open):
            b.reit(b._open[-1])
        b.imp_i(b.close())
    return b.script(LogicMode.MINIMAL, "random_nd")


# -- mutations ---------------------------------------------------------------


def with_step(script: ProofScript, index: int, step) -> ProofScript:
    steps = list(script.steps)
    steps[index - 1] = step
    return replace(script, steps=tuple(steps))


def statement_mutations(script: ProofScript) -> Iterator[tuple[int, ProofScript]]:
    """For every step, the script with that step's statement replaced.

    The replacement wraps the statement in a fresh conjunction, so it is
    never alpha-equal to the original.
    """
    marker = MemSN(ZERO, Var("Mutant", Sort.SECOND))
    for step in script.steps:
        yield step.index, with_step(script, step.index, replace(step, statement=And(step.statement, marker)))


def weaken(script: ProofScript, extra: Formula) -> ProofScript:
    """Prefix an unused assumption ``extra`` and discharge it at the end.

    The result proves ``extra -> C`` for the original conclusion ``C``.
    """
    from .kernel_nd import renumber_justification, ImpI, Assume

    n = len(script.steps)
    steps = [ProofStep(1, extra, Assume(), 1)]
    for s in script.steps:
        steps.append(ProofStep(s.index + 1, s.statement, renumber_justification(s.justification, lambda k: k + 1), s.depth + 1))
    steps.append(ProofStep(n + 2, Imp(extra, script.steps[-1].statement), ImpI((1, n + 1)), 0))
    return ProofScript(tuple(steps), "nd", script.mode, None, script.name)
