"""Equalities and disequalities between tableau labels.

Equalities are kept as a merge-find partition, so symmetry and transitivity
hold by construction.  Disequalities are recorded symmetrically.  The store
reports a contradiction when a class would mix a plus and a minus label, or
when a recorded disequality falls inside one class.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class Polarity(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def word(self) -> str:
        return "plus" if self is Polarity.PLUS else "minus"

    def flip(self) -> Polarity:
        return Polarity.MINUS if self is Polarity.PLUS else Polarity.PLUS


PLUS = Polarity.PLUS
MINUS = Polarity.MINUS


@dataclass(frozen=True)
class Label:
    id: int
    polarity: Polarity

    @property
    def positive(self) -> bool:
        return self.polarity is PLUS

    def __lt__(self, other: Label) -> bool:
        return (self.id, self.polarity.value) < (other.id, other.polarity.value)

    def __str__(self) -> str:
        return f"w{self.id}{self.polarity.value}"


class Clash(enum.Enum):
    """Which closure condition a contradiction hit."""

    DISEQUALITY = "bot1"   # w = v together with w != v
    POLARITY = "bot2"      # w+ = v-


class EqualityStore:
    """Merge-find over labels with a disequality list.

    Methods return ``None`` when the store stays consistent and a
    :class:`Clash` otherwise.  A contradictory assertion leaves the store as
    it was: the branch is closed at that point, so nothing reads it again.
    """

    def __init__(self) -> None:
        self._parent: dict[Label, Label] = {}
        self._has_plus: dict[Label, bool] = {}
        self._has_minus: dict[Label, bool] = {}
        self._diseq: list[tuple[Label, Label]] = []
        self.merges = 0

    def register(self, w: Label) -> None:
        if w not in self._parent:
            self._parent[w] = w
            self._has_plus[w] = w.positive
            self._has_minus[w] = not w.positive

    def __contains__(self, w: Label) -> bool:
        return w in self._parent

    @property
    def labels(self) -> list[Label]:
        return list(self._parent)

    @property
    def disequalities(self) -> list[tuple[Label, Label]]:
        return list(self._diseq)

    def find(self, w: Label) -> Label:
        parent = self._parent
        if w not in parent:
            raise KeyError(f"label {w} is not registered")
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def same_class(self, w: Label, v: Label) -> bool:
        return self.find(w) == self.find(v)

    def would_clash(self, w: Label, v: Label) -> Clash | None:
        """The contradiction ``assert_equal(w, v)`` would produce, if any."""
        a, b = self.find(w), self.find(v)
        if a == b:
            return None
        if (self._has_plus[a] and self._has_minus[b]) or (
            self._has_minus[a] and self._has_plus[b]
        ):
            return Clash.POLARITY
        for x, y in self._diseq:
            rx, ry = self.find(x), self.find(y)
            if (rx == a and ry == b) or (rx == b and ry == a):
                return Clash.DISEQUALITY
        return None

    def assert_equal(self, w: Label, v: Label) -> Clash | None:
        clash = self.would_clash(w, v)
        if clash is not None:
            return clash
        a, b = self.find(w), self.find(v)
        if a == b:
            return None
        # keep the smaller label as root; representatives are then predictable
        if b < a:
            a, b = b, a
        self._parent[b] = a
        self._has_plus[a] = self._has_plus[a] or self._has_plus[b]
        self._has_minus[a] = self._has_minus[a] or self._has_minus[b]
        self.merges += 1
        return None

    def assert_unequal(self, w: Label, v: Label) -> Clash | None:
        if self.find(w) == self.find(v):
            return Clash.DISEQUALITY
        self._diseq.append((w, v))
        return None

    def classes(self) -> dict[Label, list[Label]]:
        out: dict[Label, list[Label]] = {}
        for w in self._parent:
            out.setdefault(self.find(w), []).append(w)
        return out

    def is_consistent(self) -> bool:
        for members in self.classes().values():
            if len({m.polarity for m in members}) > 1:
                return False
        return all(self.find(x) != self.find(y) for x, y in self._diseq)

    def copy(self) -> EqualityStore:
        dup = EqualityStore.__new__(EqualityStore)
        dup._parent = dict(self._parent)
        dup._has_plus = dict(self._has_plus)
        dup._has_minus = dict(self._has_minus)
        dup._diseq = list(self._diseq)
        dup.merges = self.merges
        return dup
