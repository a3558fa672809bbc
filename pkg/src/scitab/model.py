"""Finite models of the sentential calculus with identity.

A model is a universe ``U`` of integer elements, a designated subset ``D``
and three operation tables.  It is well formed when, for all ``a, b``:

* ``neg[a] in D``      iff ``a not in D``
* ``impl[a, b] in D``  iff ``a not in D or b in D``
* ``ident[a, b] in D`` iff ``a == b``

and both ``D`` and ``U - D`` are non-empty.

:func:`extract_model` reads such a model off an open, fully expanded
tableau branch by collapsing labels into their equality classes.
:func:`verify_model` evaluates a formula bottom-up and shares no code with
the tableau.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .equality import Label
from .errors import InvariantViolation
from .formula import Atom, Formula, Ident, Impl, Neg, atoms, children


@dataclass
class SciModel:
    universe: list[int]
    designated: frozenset[int]
    neg: dict[int, int]
    impl: dict[tuple[int, int], int]
    ident: dict[tuple[int, int], int]
    # human-readable element names, e.g. the label a class element stands for
    names: dict[int, str] = field(default_factory=dict, compare=False)

    def evaluate(self, f: Formula, atom_values: Mapping[str, int]) -> int:
        """Denotation of ``f`` under ``atom_values``, computed bottom-up."""
        if isinstance(f, Atom):
            if f.name not in atom_values:
                raise KeyError(f"no value for atom {f.name!r}")
            return atom_values[f.name]
        if isinstance(f, Neg):
            return self.neg[self.evaluate(f.arg, atom_values)]
        a = self.evaluate(f.lhs, atom_values)
        b = self.evaluate(f.rhs, atom_values)
        table = self.impl if isinstance(f, Impl) else self.ident
        return table[a, b]


@dataclass
class Valuation:
    """Atom assignment in a model, extended homomorphically to all formulas."""

    model: SciModel
    atoms: dict[str, int]

    def __call__(self, f: Formula) -> int:
        return self.model.evaluate(f, self.atoms)

    def satisfies(self, f: Formula) -> bool:
        return self(f) in self.model.designated


def verify_model(m: SciModel, atom_values: Mapping[str, int], f: Formula) -> bool:
    """Whether ``f`` is satisfied: its denotation lies in ``D``."""
    missing = [p for p in atoms(f) if p not in atom_values]
    if missing:
        raise KeyError(f"no value for atoms {missing}")
    return m.evaluate(f, atom_values) in m.designated


def check_model_wellformed(m: SciModel) -> bool:
    """Full table scan of the three semantic conditions and ``D`` splitting ``U``."""
    U = set(m.universe)
    D = m.designated
    if not D or not (U - D) or not D <= U:
        return False
    for a in U:
        r = m.neg.get(a)
        if r not in U or ((r in D) == (a in D)):
            return False
        for b in U:
            r = m.impl.get((a, b))
            if r not in U or ((r in D) != (a not in D or b in D)):
                return False
            r = m.ident.get((a, b))
            if r not in U or ((r in D) != (a == b)):
                return False
    return True


def extract_model(branch, root) -> tuple[SciModel, Valuation]:
    """Branch model of an open, fully expanded branch.

    Elements are the equality classes of the branch labels (named by their
    lowest label, so the root label represents its own class), plus a fresh
    designated default.  A fresh undesignated default is added when the root
    is positive; otherwise the root's class serves as the undesignated
    default.  Operation entries that the branch determines are read off it,
    the rest point at the defaults.

    Raises :class:`ValueError` for a closed or unfinished branch and
    :class:`InvariantViolation` if the result is not a model or disagrees
    with a labelled formula on the branch.
    """
    if branch.closed or not branch.fully_expanded:
        raise ValueError("a model needs an open, fully expanded branch")
    store = branch.store
    rep: dict[Label, int] = {}
    positive: dict[int, bool] = {}
    for lf in branch.entries:
        r = store.find(lf.label)
        rep[lf.label] = r.id
        positive[r.id] = r.positive
    if rep[root.label] != root.label.id:
        raise InvariantViolation("root label must represent its own class")

    top = max(rep.values()) + 1
    d_plus = top
    names = {r.id: str(r) for r in (store.find(lf.label) for lf in branch.entries)}
    names[d_plus] = "default+"
    if root.label.positive:
        d_minus = top + 1
        names[d_minus] = "default-"
    else:
        d_minus = rep[root.label]

    U = sorted(set(rep.values()) | {d_plus, d_minus})
    D = frozenset({e for e, pos in positive.items() if pos} | {d_plus})

    neg_closed: dict[int, int] = {}
    bin_closed: dict[type, dict[tuple[int, int], int]] = {Impl: {}, Ident: {}}

    def record(table: dict, key, value: int) -> None:
        if table.setdefault(key, value) != value:
            raise InvariantViolation(f"operation is not a function at {key}")

    for lf in branch.entries:
        f = lf.formula
        if isinstance(f, Atom):
            continue
        parts = children(f)
        if any(p not in branch.labels_of for p in parts):
            continue
        y = rep[lf.label]
        if isinstance(f, Neg):
            for v in branch.labels_of[parts[0]]:
                record(neg_closed, rep[v], y)
        else:
            for t in branch.labels_of[parts[0]]:
                for x in branch.labels_of[parts[1]]:
                    record(bin_closed[type(f)], (rep[t], rep[x]), y)

    neg = {}
    for w in U:
        if w in neg_closed:
            neg[w] = neg_closed[w]
        elif w not in D:
            neg[w] = d_plus
        else:
            neg[w] = d_minus
    impl = {}
    ident = {}
    for w in U:
        for v in U:
            key = (w, v)
            if key in bin_closed[Impl]:
                impl[key] = bin_closed[Impl][key]
            elif w not in D or v in D:
                impl[key] = d_plus
            else:
                impl[key] = d_minus
            if key in bin_closed[Ident]:
                ident[key] = bin_closed[Ident][key]
            elif w == v:
                ident[key] = d_plus
            else:
                ident[key] = d_minus

    model = SciModel(U, D, neg, impl, ident, names)
    values = {}
    for p in atoms(root.formula):
        labels = branch.labels_of.get(Atom(p))
        values[p] = rep[labels[0]] if labels else d_plus
    valuation = Valuation(model, values)

    if not check_model_wellformed(model):
        raise InvariantViolation("extracted structure violates the model conditions")
    for lf in branch.entries:
        if valuation(lf.formula) != rep[lf.label]:
            raise InvariantViolation(f"{lf} is not denoted by its label's class")
    return model, valuation
