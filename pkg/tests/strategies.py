"""Hypothesis strategies for terms, formulas and propositional formulas."""
from hypothesis import strategies as st

from cmproof import kripke as K
from cmproof.syntax import (
    ZERO, And, Eq, Exists, Forall, Imp, MemNP, MemSN, Not, Or, Pair, Plus, Sort, Succ, Times, Var,
)

NUM_VARS = [Var(x) for x in "nmk"]
SET_VARS = [Var(x, Sort.SECOND) for x in "XY"]
CLASS_VARS = [Var("@C", Sort.THIRD)]

num_vars = st.sampled_from(NUM_VARS)
set_vars = st.sampled_from(SET_VARS)
class_vars = st.sampled_from(CLASS_VARS)

terms = st.recursive(
    st.one_of(st.just(ZERO), num_vars),
    lambda sub: st.one_of(
        st.builds(Succ, sub),
        st.builds(Plus, sub, sub),
        st.builds(Times, sub, sub),
        st.builds(Pair, sub, sub),
    ),
    max_leaves=4,
)

closed_terms = st.recursive(
    st.just(ZERO),
    lambda sub: st.one_of(st.builds(Succ, sub), st.builds(Plus, sub, sub), st.builds(Pair, sub, sub)),
    max_leaves=4,
)

atoms = st.one_of(
    st.builds(Eq, terms, terms),
    st.builds(MemSN, terms, set_vars),
    st.builds(MemNP, set_vars, class_vars),
)

any_var = st.one_of(num_vars, set_vars, class_vars)

formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
        st.builds(Not, sub),
        st.builds(Forall, any_var, sub),
        st.builds(Exists, any_var, sub),
    ),
    max_leaves=6,
)

arithmetical_formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
        st.builds(Not, sub),
        st.builds(Forall, num_vars, sub),
        st.builds(Exists, num_vars, sub),
    ),
    max_leaves=6,
)

prop_atoms = st.one_of(st.sampled_from([K.Atom("p"), K.Atom("q")]), st.just(K.Bot()))

prop_formulas = st.recursive(
    prop_atoms,
    lambda sub: st.one_of(st.builds(K.And, sub, sub), st.builds(K.Or, sub, sub), st.builds(K.Imp, sub, sub)),
    max_leaves=4,
)
