"""Seeded random formulas for fuzzing and benchmarks."""
from __future__ import annotations

import random
from typing import Iterator

from .formula import Atom, Formula, Ident, Impl, Neg, size

ATOM_NAMES = "pqrstuvw"


def generate_random_formula(atoms: int, max_depth: int, seed: int | random.Random) -> Formula:
    """Draw a formula over the first ``atoms`` names of ``pqrstuvw``.

    Each node picks uniformly among atom, negation, implication and
    identity; nodes at ``max_depth`` are forced to be atoms.
    """
    if atoms < 1 or max_depth < 1:
        raise ValueError("need at least one atom and depth 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    names = [ATOM_NAMES[i] if i < len(ATOM_NAMES) else f"p{i}" for i in range(atoms)]

    def build(depth: int) -> Formula:
        kind = 0 if depth >= max_depth else rng.randrange(4)
        if kind == 0:
            return Atom(rng.choice(names))
        if kind == 1:
            return Neg(build(depth + 1))
        lhs = build(depth + 1)
        rhs = build(depth + 1)
        return Impl(lhs, rhs) if kind == 2 else Ident(lhs, rhs)

    return build(1)


def random_formulas(
    count: int, atoms: int, max_depth: int, seed: int, max_size: int | None = None
) -> Iterator[Formula]:
    """``count`` formulas from one seeded stream, rejecting those above ``max_size``."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        f = generate_random_formula(atoms, max_depth, rng)
        if max_size is not None and size(f) > max_size:
            continue
        produced += 1
        yield f
