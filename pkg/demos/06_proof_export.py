"""
Exporting proofs and models
===========================

Proof trees go to JSON or Graphviz DOT, models to JSON.  Pipe the DOT text
into ``dot -Tsvg`` to draw it.
"""

import json

from scitab import decide
from scitab.export import model_to_json, proof_to_dot, proof_to_json

proof = decide("(p == q) -> (p -> q)").proof
print(proof_to_dot(proof))

tree = json.loads(proof_to_json(proof))
print("root rule:", tree["rule"], "first step:", tree["children"][0]["rule"])

v = decide("(p -> q) == (~q -> ~p)")
print(model_to_json(v.model, v.valuation))
