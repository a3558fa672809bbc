"""Rewriting a formula into a chain of simple identities.

Every distinct subformula ``g`` gets a fresh atom ``v_g`` and a defining
clause: ``v_g == g`` for an atom, ``v_g == ~v_h`` for ``g = ~h`` and
``v_g == (v_h # v_k)`` for ``g = h # k``.  The result is

    c1 -> (c2 -> ... -> (cn -> v_f))

with clauses in post-order of first occurrence.  ``f`` is valid exactly when
the result is: a countermodel of one gives a countermodel of the other by
reading ``v_g`` as the denotation of ``g``.
"""
from __future__ import annotations

import hashlib

from .formula import Atom, Formula, Ident, Impl, Neg, atoms, distinct_subformulas, render


def fresh_atoms(f: Formula, digits: int = 8) -> dict[Formula, Atom]:
    """Injective map from distinct subformulas of ``f`` to atoms not in ``f``.

    Names are ``v_`` plus a prefix of the SHA-1 of the rendered subformula,
    so they are stable across runs; the prefix grows on any collision.
    """
    subs = distinct_subformulas(f)
    taken = set(atoms(f))
    while True:
        names = {
            g: "v_" + hashlib.sha1(render(g).encode()).hexdigest()[:digits] for g in subs
        }
        if len(set(names.values())) == len(subs) and not taken & set(names.values()):
            return {g: Atom(n) for g, n in names.items()}
        digits += 4


def identity_clauses(f: Formula) -> tuple[list[Formula], Atom]:
    """Defining clauses of ``f`` in post-order, and the atom standing for ``f``."""
    v = fresh_atoms(f)
    clauses: list[Formula] = []
    for g in distinct_subformulas(f):
        if isinstance(g, Atom):
            clauses.append(Ident(v[g], g))
        elif isinstance(g, Neg):
            clauses.append(Ident(v[g], Neg(v[g.arg])))
        else:
            clauses.append(Ident(v[g], type(g)(v[g.lhs], v[g.rhs])))
    return clauses, v[f]


def transform_t(f: Formula) -> Formula:
    clauses, result = identity_clauses(f)
    out: Formula = result
    for c in reversed(clauses):
        out = Impl(c, out)
    return out
