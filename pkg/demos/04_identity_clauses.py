"""
Rewriting into simple identities
================================

Each distinct subformula gets a fresh atom and one defining identity; the
clauses are chained by implication.  Validity is unchanged, while the
tableau work changes shape.
"""

from scitab import decide, identity_clauses, parse, render, transform_t

f = parse("~p -> p")
clauses, top = identity_clauses(f)
for c in clauses:
    print("  ", render(c))
print("stands for f:", top.name)

for text in ["p == q -> (p -> q)", "(~p -> ~q) -> (q -> p)", "~~p == p"]:
    g = parse(text)
    a, b = decide(g, build_model=False), decide(transform_t(g), build_model=False)
    print(f"{text:24} {a.status.value:8} {b.status.value:8} {a.stats} {b.stats}")
