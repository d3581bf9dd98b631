"""Proof checking for CM: third order arithmetic over intuitionistic logic,
with excluded middle restricted to formulas without set or class quantifiers.

The public surface is re-exported here::

    >>> from cmproof import parse_formula, classify
    >>> classify(parse_formula("exists X. 0 in X")).value
    'general'
"""
from .axioms import SchemeId, SchemeInstance, Template, equality_axioms, instantiate, pairing_axioms
from .errors import (
    ArityError, CaptureError, CMError, DanglingReference, KernelError, NotArithmetical, ParseError,
    ProvisoViolation, SortError, UnknownDerivedRule, UnknownRule, UnknownWorld, UnsupportedRule,
)
from .hilbert import AxiomScheme, ExRule, Gen, HilbertLine, MP, check_hilbert, nd_scheme_derivation, scheme_instance, translate_hilbert_to_nd
from .kernel_nd import (
    EM, AndE1, AndE2, AndI, Assume, CheckResult, Derived, DerivedRule, Diagnostic, EqAx, ExFalso,
    ExistsE, ExistsI, ForallE, ForallI, ImpE, ImpI, LogicMode, NonLogical, OrE, OrI1, OrI2,
    ProofScript, ProofStep, Reiterate, check_derived_rule, check_nd, expand_derived, register_derived_rule,
)
from .kripke import KripkeModel, Semantics, forces, search_countermodel, validates
from .surface import format_proof, parse_formula, parse_proof, parse_prop, parse_term, show
from .syntax import (
    BOT, ZERO, And, Eq, Exists, Forall, FormulaClass, Imp, MemNP, MemSN, Not, Or, Pair, Plus, Prec,
    Sort, Succ, Times, Var, alpha_equal, classify, free_for, free_vars, is_arithmetical, numeral,
    substitute, to_bot_form, to_neg_form,
)
from .corpus import (
    CorpusEntry, ScriptBuilder, gen_arith_comprehension, load_corpus, numerical_omniscience_entry, run_corpus,
)

__version__ = "0.1.0"
