"""
Formulas: parsing, printing and size
====================================

Connectives are ``~`` (negation), ``->`` (implication) and ``==``
(identity).  ``/\\``, ``\\/`` and ``<->`` are abbreviations and vanish at
parse time.
"""

from scitab import parse, render, size, distinct_subformulas

f = parse("(p == q) -> (p -> q)")
print(repr(f))
print(render(f), "has", size(f), "nodes")

# conjunction is shorthand, so its expansion is what gets stored
g = parse("p /\\ q")
print(render(g))

# identity binds tighter than implication, implication nests to the right
print(render(parse("p == q -> q == p -> r")))

# shared subformulas are listed once, children before parents
for h in distinct_subformulas(parse("(p -> p) == ~p")):
    print("  ", render(h))
