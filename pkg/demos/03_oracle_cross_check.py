"""
Cross-checking against brute force
==================================

The oracle searches partitions of subformulas into denotations, so it is
independent of the tableau rules.  A second enumerator walks explicit
operation tables on up to three elements.
"""

from scitab import decide, enumerate_models_sat, oracle_sat, parse, random_formulas

res = oracle_sat(parse("~(~~p == p)"))
print("sat:", res.sat, "with", len(res.model.universe), "elements")
for block in res.blocks:
    print("  same denotation:", [str(g) for g in block])

# two elements are not enough, three are
f = parse("~(~~p == p)")
print(enumerate_models_sat(f, 2), enumerate_models_sat(f, 3))

mismatches = 0
for g in random_formulas(300, 2, 4, seed=1):
    if decide(g, "sat", build_model=False).open != oracle_sat(g).sat:
        mismatches += 1
print("mismatches over 300 random formulas:", mismatches)
