"""JSON and DOT renderings of proof trees and models."""
from __future__ import annotations

import json

from .equality import Label
from .formula import render
from .model import SciModel, Valuation
from .tableau import Fact, LabelledFormula, ProofNode

_LABEL_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "integer", "minimum": 0},
        "polarity": {"enum": ["plus", "minus"]},
    },
    "required": ["id", "polarity"],
    "additionalProperties": False,
}

PROOF_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "label": _LABEL_SCHEMA,
        "node": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["normal", "identity", "closure-leaf", "open-leaf"]},
                "rule": {"type": "string"},
                "added": {
                    "type": "array",
                    "items": {
                        "oneOf": [
                            {
                                "type": "object",
                                "properties": {
                                    "label": {"$ref": "#/$defs/label"},
                                    "formula": {"type": "string"},
                                },
                                "required": ["label", "formula"],
                                "additionalProperties": False,
                            },
                            {
                                "type": "object",
                                "properties": {
                                    "lhs": {"$ref": "#/$defs/label"},
                                    "rhs": {"$ref": "#/$defs/label"},
                                    "relation": {"enum": ["eq", "neq"]},
                                },
                                "required": ["lhs", "rhs", "relation"],
                                "additionalProperties": False,
                            },
                        ]
                    },
                },
                "children": {"type": "array", "items": {"$ref": "#/$defs/node"}},
            },
            "required": ["kind", "rule", "added", "children"],
            "additionalProperties": False,
        },
    },
    "$ref": "#/$defs/node",
}

_ID = {"type": "integer"}

MODEL_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "universe": {"type": "array", "items": _ID, "minItems": 2},
        "designated": {"type": "array", "items": _ID, "minItems": 1},
        "neg": {"type": "array", "items": {"type": "array", "items": _ID, "minItems": 2, "maxItems": 2}},
        "impl": {"type": "array", "items": {"type": "array", "items": _ID, "minItems": 3, "maxItems": 3}},
        "ident": {"type": "array", "items": {"type": "array", "items": _ID, "minItems": 3, "maxItems": 3}},
        "valuation": {"type": "object", "additionalProperties": _ID},
    },
    "required": ["universe", "designated", "neg", "impl", "ident", "valuation"],
    "additionalProperties": False,
}


def label_dict(w: Label) -> dict:
    return {"id": w.id, "polarity": w.polarity.word}


def _added_dict(item: LabelledFormula | Fact) -> dict:
    if isinstance(item, LabelledFormula):
        return {"label": label_dict(item.label), "formula": render(item.formula)}
    return {
        "lhs": label_dict(item.lhs),
        "rhs": label_dict(item.rhs),
        "relation": "eq" if item.equal else "neq",
    }


def proof_to_dict(node: ProofNode) -> dict:
    return {
        "kind": node.kind.value,
        "rule": node.rule,
        "added": [_added_dict(a) for a in node.added],
        "children": [proof_to_dict(c) for c in node.children],
    }


def proof_to_json(node: ProofNode, indent: int | None = 2) -> str:
    return json.dumps(proof_to_dict(node), indent=indent, ensure_ascii=False)


def model_to_dict(model: SciModel, valuation: Valuation | dict[str, int]) -> dict:
    atoms = valuation.atoms if isinstance(valuation, Valuation) else valuation
    U = list(model.universe)
    return {
        "universe": U,
        "designated": sorted(model.designated),
        "neg": [[a, model.neg[a]] for a in U],
        "impl": [[a, b, model.impl[a, b]] for a in U for b in U],
        "ident": [[a, b, model.ident[a, b]] for a in U for b in U],
        "valuation": dict(atoms),
    }


def model_to_json(model: SciModel, valuation, indent: int | None = 2) -> str:
    """JSON text with one top-level field per line unless ``indent`` is None."""
    data = model_to_dict(model, valuation)
    if indent is None:
        return json.dumps(data)
    pad = " " * indent
    body = ",\n".join(f"{pad}{json.dumps(k)}: {json.dumps(v)}" for k, v in data.items())
    return "{\n" + body + "\n}"


def model_from_dict(data: dict) -> tuple[SciModel, dict[str, int]]:
    model = SciModel(
        list(data["universe"]),
        frozenset(data["designated"]),
        {a: r for a, r in data["neg"]},
        {(a, b): r for a, b, r in data["impl"]},
        {(a, b): r for a, b, r in data["ident"]},
    )
    return model, dict(data["valuation"])


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def proof_to_dot(tree: ProofNode) -> str:
    """Graphviz digraph with one vertex per node and rule names on the edges."""
    lines = ["digraph proof {", "  node [shape=box, fontname=monospace];"]
    counter = 0
    stack: list[tuple[ProofNode, int | None]] = [(tree, None)]
    while stack:
        node, parent = stack.pop()
        me = counter
        counter += 1
        if node.kind.value == "closure-leaf":
            text = "⊥"
        elif node.kind.value == "open-leaf":
            text = "open"
        else:
            text = "\\n".join(_dot_escape(str(a)) for a in node.added)
        lines.append(f'  n{me} [label="{text}"];')
        if parent is not None:
            lines.append(f'  n{parent} -> n{me} [label="{_dot_escape(node.rule)}"];')
        for child in reversed(node.children):
            stack.append((child, me))
    lines.append("}")
    return "\n".join(lines) + "\n"
