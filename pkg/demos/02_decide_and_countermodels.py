"""
Deciding formulas and reading off countermodels
===============================================

``decide`` runs the labelled tableau.  An open branch yields a finite model;
here it shows why double negation is an equivalence but not an identity.
"""

from scitab import decide, parse, verify_model, check_model_wellformed

for text in ["p -> (q -> p)", "~~p <-> p", "~~p == p"]:
    print(f"{text:16} {decide(text).status.value}")

verdict = decide("~~p == p")
m, val = verdict.model, verdict.valuation
print("universe", m.universe, "designated", sorted(m.designated))
print("p ->", val(parse("p")), "  ~~p ->", val(parse("~~p")))

# the evaluator shares no code with the tableau
print("well formed:", check_model_wellformed(m))
print("falsifies:", not verify_model(m, val.atoms, parse("~~p == p")))

# satisfiability mode puts the formula on a plus label instead
print(decide("p == ~p", "sat").status.value)
