from __future__ import annotations

import pytest

from scitab.errors import CapacityError
from scitab.formula import Neg, parse, size
from scitab.generate import random_formulas
from scitab.model import check_model_wellformed, verify_model
from scitab.oracle import enumerate_models_sat, oracle_sat


@pytest.mark.parametrize("text", ["p == ~p", "p /\\ ~p"])
def test_unsatisfiable(text):
    assert not oracle_sat(parse(text))


def test_witness_for_non_identity_of_double_negation():
    res = oracle_sat(parse("~(~~p == p)"))
    assert res.sat
    assert len(res.model.universe) == 3
    assert check_model_wellformed(res.model)
    assert verify_model(res.model, res.atom_values, parse("~(~~p == p)"))


def test_classical_tautology_negation_unsat():
    assert not oracle_sat(Neg(parse("~~p <-> p")))


def test_blocks_respect_identities():
    res = oracle_sat(parse("p == q"))
    assert any(parse("p") in b and parse("q") in b for b in res.blocks)


def test_capacity_guard():
    big = parse("p1 -> p2 -> p3 -> p4 -> p5 -> p6 -> p7")
    with pytest.raises(CapacityError):
        oracle_sat(big)


def test_enumerator_examples():
    f = parse("~(~~p == p)")
    assert enumerate_models_sat(f, 3)
    assert not enumerate_models_sat(f, 2)
    assert enumerate_models_sat(parse("p"), 2)


def test_enumerator_limits():
    with pytest.raises(CapacityError):
        enumerate_models_sat(parse("p -> q -> r"), 3)
    with pytest.raises(CapacityError):
        enumerate_models_sat(parse("p"), 4)


def test_oracle_matches_enumerator_on_small_formulas():
    for f in random_formulas(200, 2, 3, seed=13):
        assert enumerate_models_sat(f, 3) == oracle_sat(f).sat, f


def test_oracle_sat_implies_small_model_exists():
    for f in random_formulas(200, 2, 3, seed=17):
        res = oracle_sat(f)
        if res:
            assert len(res.model.universe) <= size(f) + 2
            assert verify_model(res.model, res.atom_values, f)
        else:
            assert not enumerate_models_sat(f, 3)
