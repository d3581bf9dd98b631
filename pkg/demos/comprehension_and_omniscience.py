"""
Comprehension and numerical omniscience in CM
=============================================

"""

from cmproof import Sort, Template, Var, check_nd, format_proof, instantiate, parse_formula, show
from cmproof import SchemeId, SchemeInstance, classify
from cmproof.corpus import gen_arith_comprehension, numerical_omniscience_entry

n, X = Var("n"), Var("X", Sort.SECOND)

# the comprehension axiom needs its decidability premise
axiom = instantiate(SchemeInstance(SchemeId.Compr2, Template((n,), parse_formula("exists m. n = m + m"))))
print(show(axiom))
print(classify(axiom).value)

# for an arithmetical formula excluded middle supplies it
script = gen_arith_comprehension(Template((n,), parse_formula("exists m. n = m + m")))
print(format_proof(script))
print(check_nd(script, "cm").verdict)

# one level up: classes of sets
script = gen_arith_comprehension(Template((X,), parse_formula("forall n. n in X -> n' in X")), "third")
print(show(script.conclusion, negations=True), check_nd(script, "cm").verdict)

# numerical omniscience through dependent choice
entry = numerical_omniscience_entry()
print(show(entry.script.conclusion, negations=True))
print(len(entry.script.steps), "steps")
for mode in ["int", "cm"]:
    r = check_nd(entry.script, mode)
    print(mode, r.verdict, r.codes[:2])
