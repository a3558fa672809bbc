"""Labelled tableau decision procedure for the sentential calculus with identity."""
from __future__ import annotations

from .equality import MINUS, PLUS, Clash, EqualityStore, Label, Polarity
from .errors import CapacityError, InvariantViolation
from .formula import (
    Atom,
    Formula,
    Ident,
    Impl,
    Neg,
    ParseError,
    atoms,
    conj,
    disj,
    distinct_subformulas,
    equiv,
    parse,
    render,
    size,
    subformula_occurrences,
)
from .generate import generate_random_formula, random_formulas
from .model import SciModel, Valuation, check_model_wellformed, extract_model, verify_model
from .normal_form import fresh_atoms, identity_clauses, transform_t
from .oracle import OracleResult, enumerate_models_sat, oracle_sat
from .tableau import (
    Branch,
    LabelledFormula,
    Mode,
    NodeKind,
    ProofNode,
    Status,
    TreeStats,
    Verdict,
    application_bound,
    decide,
    decompose,
    saturate_equalities,
    stats,
)

__all__ = [
    "Atom", "Branch", "CapacityError", "Clash", "EqualityStore", "Formula", "Ident",
    "Impl", "InvariantViolation", "Label", "LabelledFormula", "MINUS", "Mode", "Neg",
    "NodeKind", "OracleResult", "PLUS", "ParseError", "Polarity", "ProofNode", "SciModel",
    "Status", "TreeStats", "Valuation", "Verdict", "application_bound", "atoms",
    "check_model_wellformed", "conj", "decide", "decompose", "disj", "distinct_subformulas",
    "enumerate_models_sat", "equiv", "extract_model", "fresh_atoms", "generate_random_formula",
    "identity_clauses", "oracle_sat", "parse", "random_formulas", "render",
    "saturate_equalities", "size", "stats", "subformula_occurrences", "transform_t",
    "verify_model",
]
