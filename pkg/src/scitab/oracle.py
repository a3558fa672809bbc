"""Brute-force satisfiability, independent of the tableau.

:func:`oracle_sat` searches partitions of the distinct subformulas of ``f``
(which subformulas share a denotation) together with truth values of the
atoms.  A candidate is accepted when the partition is a congruence for the
three connectives, truth is constant on every block, identities are true
exactly when their sides share a block, and ``f`` is true.  Such a candidate
is the quotient of a model, and every model yields one, so the search is
exact.  Accepted candidates are turned into an explicit model and checked
with :func:`verify_model` before being returned.

:func:`enumerate_models_sat` is a second, more literal check: it walks
universes of at most ``k`` elements and fills operation tables lazily.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, InvariantViolation
from .formula import Atom, Formula, Ident, Impl, Neg, atoms, children, distinct_subformulas
from .model import SciModel, check_model_wellformed, verify_model

MAX_BLOCKS = 12


@dataclass
class OracleResult:
    sat: bool
    model: SciModel | None = None
    atom_values: dict[str, int] | None = None
    blocks: list[list[Formula]] | None = None

    def __bool__(self) -> bool:
        return self.sat


def oracle_sat(f: Formula, max_blocks: int = MAX_BLOCKS) -> OracleResult:
    """Decide satisfiability of ``f`` by congruence-candidate enumeration."""
    subs = distinct_subformulas(f)
    if len(subs) > max_blocks:
        raise CapacityError(f"{len(subs)} distinct subformulas exceed the guard of {max_blocks}")
    index = {g: i for i, g in enumerate(subs)}
    kids = [tuple(index[c] for c in children(g)) for g in subs]
    kinds = [type(g) for g in subs]
    names = atoms(f)
    n = len(subs)

    for truths in itertools.product((0, 1), repeat=len(names)):
        atom_truth = dict(zip(names, truths))
        block = [-1] * n
        truth = [0] * n
        # truth value of each block, indexed by block number
        block_truth: list[int] = []

        def search(i: int) -> bool:
            if i == n:
                return truth[n - 1] == 1
            g = subs[i]
            kind = kinds[i]
            ks = kids[i]
            if kind is Atom:
                t = atom_truth[g.name]
            elif kind is Neg:
                t = 1 - truth[ks[0]]
            elif kind is Impl:
                t = max(1 - truth[ks[0]], truth[ks[1]])
            else:
                t = int(block[ks[0]] == block[ks[1]])
            truth[i] = t
            # congruence: same connective over the same blocks forces this block
            forced = -1
            if kind is not Atom:
                sig = tuple(block[k] for k in ks)
                for j in range(i):
                    if kinds[j] is kind and tuple(block[k] for k in kids[j]) == sig:
                        forced = block[j]
                        break
            choices = [forced] if forced >= 0 else list(range(len(block_truth) + 1))
            for b in choices:
                if b < len(block_truth):
                    if block_truth[b] != t:
                        continue
                    block[i] = b
                    if search(i + 1):
                        return True
                else:
                    block_truth.append(t)
                    block[i] = b
                    if search(i + 1):
                        return True
                    block_truth.pop()
                block[i] = -1
            return False

        if search(0):
            model, values = _quotient_model(subs, kids, kinds, block, block_truth)
            if not check_model_wellformed(model) or not verify_model(model, values, f):
                raise InvariantViolation("oracle witness fails verification")
            blocks = [[g for g, b in zip(subs, block) if b == k] for k in range(len(block_truth))]
            return OracleResult(True, model, values, blocks)
    return OracleResult(False)


def _quotient_model(subs, kids, kinds, block, block_truth):
    """Model whose elements are the blocks; gaps in the tables point at defaults.

    The table conditions only ask whether a value is designated, so any block
    of the right truth value can serve as a default.  A fresh element is
    added only when no such block exists.
    """
    nblocks = len(block_truth)
    U = list(range(nblocks))
    d_plus = next((b for b in U if block_truth[b]), None)
    d_minus = next((b for b in U if not block_truth[b]), None)
    if d_plus is None:
        d_plus = len(U)
        U.append(d_plus)
    if d_minus is None:
        d_minus = len(U)
        U.append(d_minus)
    D = frozenset({b for b in range(nblocks) if block_truth[b]} | {d_plus})
    neg_closed = {}
    bin_closed = {Impl: {}, Ident: {}}
    for i, kind in enumerate(kinds):
        if kind is Neg:
            neg_closed[block[kids[i][0]]] = block[i]
        elif kind in bin_closed:
            bin_closed[kind][block[kids[i][0]], block[kids[i][1]]] = block[i]
    neg = {a: neg_closed.get(a, d_minus if a in D else d_plus) for a in U}
    impl = {}
    ident = {}
    for a in U:
        for b in U:
            impl[a, b] = bin_closed[Impl].get((a, b), d_plus if (a not in D or b in D) else d_minus)
            ident[a, b] = bin_closed[Ident].get((a, b), d_plus if a == b else d_minus)
    values = {g.name: block[i] for i, g in enumerate(subs) if kinds[i] is Atom}
    return SciModel(U, D, neg, impl, ident), values


def enumerate_models_sat(f: Formula, max_universe: int = 3) -> bool:
    """Whether ``f`` is designated in some model with at most ``max_universe`` elements.

    Elements ``0 .. d-1`` are designated, which loses nothing up to
    isomorphism.  Table entries are chosen only when evaluation reaches them;
    any partial table obeying the conditions extends to a full one.
    """
    names = atoms(f)
    if len(names) > 2 or max_universe > 3:
        raise CapacityError("table enumeration is limited to 2 atoms and 3 elements")
    subs = distinct_subformulas(f)
    for n in range(2, max_universe + 1):
        for d in range(1, n):
            designated = set(range(d))
            for values in itertools.product(range(n), repeat=len(names)):
                if _extend(subs, 0, dict(zip(names, values)), {}, n, designated, f):
                    return True
    return False


def _extend(subs, i, env, tables, n, designated, f) -> bool:
    if i == len(subs):
        return env[f] in designated
    g = subs[i]
    if isinstance(g, Atom):
        env[g] = env[g.name]
        return _extend(subs, i + 1, env, tables, n, designated, f)
    if isinstance(g, Neg):
        key = ("neg", env[g.arg])
        a = env[g.arg]
        allowed = [r for r in range(n) if (r in designated) != (a in designated)]
    else:
        a, b = env[g.lhs], env[g.rhs]
        if isinstance(g, Impl):
            key = ("impl", a, b)
            want = a not in designated or b in designated
        else:
            key = ("ident", a, b)
            want = a == b
        allowed = [r for r in range(n) if (r in designated) == want]
    if key in tables:
        env[g] = tables[key]
        return _extend(subs, i + 1, env, tables, n, designated, f)
    for r in allowed:
        tables[key] = r
        env[g] = r
        if _extend(subs, i + 1, env, tables, n, designated, f):
            return True
    del tables[key]
    return False
