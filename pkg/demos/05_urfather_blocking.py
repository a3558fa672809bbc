"""
Urfather blocking
=================

With blocking, only the first labelled occurrence of each formula on a
branch is decomposed.  Verdicts do not change; trees can shrink.
"""

from scitab import decide

for text in [
    "(p -> q) -> (p -> q)",
    "(p == q) == (p == q)",
    "p == q -> (r == s -> (p == r) == (q == s))",
]:
    plain = decide(text, exhaustive=True, build_model=False)
    blocked = decide(text, urfather_blocking=True, exhaustive=True, build_model=False)
    print(f"{text:44} {plain.status.value:8} {plain.stats.depth}/{plain.stats.size}"
          f"  ->  {blocked.stats.depth}/{blocked.stats.size}")
