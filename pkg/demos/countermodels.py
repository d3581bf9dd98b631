"""
Kripke countermodels
====================

"""

# search the models with up to three worlds, smallest first
from cmproof import kripke, parse_prop

em = parse_prop("p \\/ ~p")
model = kripke.search_countermodel(em, 3, "int")
print(kripke.format_model(model))

# forcing at each world
for w in model.worlds:
    print(w, kripke.forces(model, w, em), kripke.forces(model, w, parse_prop("~~p")))

# de Morgan needs a fork
print(kripke.format_model(kripke.search_countermodel(parse_prop("~(p /\\ q) -> ~p \\/ ~q"), 3, "int")))

# under minimal semantics bot is just another atom, so disjunctive syllogism fails
ds = parse_prop("((p \\/ q) /\\ ~p) -> q")
print(kripke.search_countermodel(ds, 3, "int"))
print(kripke.format_model(kripke.search_countermodel(ds, 3, "minimal")))

# Peirce's law is classically valid
peirce = parse_prop("((p -> q) -> p) -> p")
print(kripke.search_countermodel(peirce, 3, "classical"))
print(kripke.model_to_json(kripke.search_countermodel(peirce, 3, "int")))
