"""Formulas of the sentential calculus with identity: AST, parser, printer.

Concrete syntax::

    ~ or !    negation
    ==        identity of denotations
    /\\        conjunction   (abbreviation)
    \\/        disjunction   (abbreviation)
    ->        implication, right-associative
    <->       equivalence   (abbreviation)

Binding strength, tightest first: ``~``, ``==``, ``/\\``, ``\\/``, ``->``,
``<->``.  The abbreviations are expanded while parsing, so every parsed
formula is built from :class:`Atom`, :class:`Neg`, :class:`Impl` and
:class:`Ident` only.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, fields
from functools import cached_property
from typing import Iterator


class Formula:
    """Base class of the four formula constructors."""

    def __str__(self) -> str:
        return render(self)

    # formulas are dictionary keys all over the tableau; hash once per node
    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((type(self).__name__,) + tuple(getattr(self, f.name) for f in fields(self)))


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    __hash__ = Formula.__hash__

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg(Formula):
    arg: Formula

    __hash__ = Formula.__hash__


@dataclass(frozen=True)
class Impl(Formula):
    lhs: Formula
    rhs: Formula

    __hash__ = Formula.__hash__


@dataclass(frozen=True)
class Ident(Formula):
    lhs: Formula
    rhs: Formula

    __hash__ = Formula.__hash__


class ParseError(ValueError):
    """Raised for malformed formula text; ``position`` is a character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at {position}: {message}")
        self.position = position
        self.message = message


def conj(a: Formula, b: Formula) -> Formula:
    return Neg(Impl(a, Neg(b)))


def disj(a: Formula, b: Formula) -> Formula:
    return Impl(Neg(a), b)


def equiv(a: Formula, b: Formula) -> Formula:
    return conj(Impl(a, b), Impl(b, a))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"(?P<atom>[a-z][a-zA-Z0-9_]*)|<->|->|==|/\\|\\/|[~!()]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        tokens.append((m.group(), pos))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def position(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return len(self.text)

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            found = self.peek()
            what = "end of input" if found is None else repr(found)
            raise ParseError(self.position(), f"expected {tok!r}, found {what}")
        self.i += 1

    def parse(self) -> Formula:
        if not self.tokens:
            raise ParseError(0, "empty formula")
        f = self.equivalence()
        if self.peek() is not None:
            raise ParseError(self.position(), f"unexpected {self.peek()!r}")
        return f

    def equivalence(self) -> Formula:
        f = self.implication()
        while self.peek() == "<->":
            self.take()
            f = equiv(f, self.implication())
        return f

    def implication(self) -> Formula:
        f = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Impl(f, self.implication())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "\\/":
            self.take()
            f = disj(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.identity()
        while self.peek() == "/\\":
            self.take()
            f = conj(f, self.identity())
        return f

    def identity(self) -> Formula:
        f = self.unary()
        while self.peek() == "==":
            self.take()
            f = Ident(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok in ("~", "!"):
            self.take()
            return Neg(self.unary())
        if tok == "(":
            self.take()
            f = self.equivalence()
            self.expect(")")
            return f
        if tok is None:
            raise ParseError(self.position(), "unexpected end of input")
        if tok[0].isalpha():
            self.take()
            return Atom(tok)
        raise ParseError(self.position(), f"unexpected {tok!r}")


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula with all abbreviations expanded.

    >>> parse("p /\\\\ q")
    Neg(arg=Impl(lhs=Atom(name='p'), rhs=Neg(arg=Atom(name='q'))))
    """
    return _Parser(text).parse()


# -- printing --------------------------------------------------------------

def render(f: Formula) -> str:
    """Print ``f`` so that ``parse(render(f)) == f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Neg):
        inner = render(f.arg)
        return "~" + (inner if isinstance(f.arg, (Atom, Neg)) else f"({inner})")
    if isinstance(f, Impl):
        lhs = render(f.lhs)
        if isinstance(f.lhs, (Impl, Ident)):
            lhs = f"({lhs})"
        rhs = render(f.rhs)
        if isinstance(f.rhs, Ident):
            rhs = f"({rhs})"
        return f"{lhs} -> {rhs}"
    if isinstance(f, Ident):
        parts = []
        for side in (f.lhs, f.rhs):
            s = render(side)
            parts.append(f"({s})" if isinstance(side, (Impl, Ident)) else s)
        return f"{parts[0]} == {parts[1]}"
    raise TypeError(f"not a formula: {f!r}")


# -- structure -------------------------------------------------------------

def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Neg):
        return (f.arg,)
    if isinstance(f, (Impl, Ident)):
        return (f.lhs, f.rhs)
    return ()


def size(f: Formula) -> int:
    """Number of subformula occurrences (AST nodes) in ``f``."""
    return 1 + sum(size(c) for c in children(f))


def subformula_occurrences(f: Formula) -> list[tuple[tuple[int, ...], Formula]]:
    """Post-order list of ``(path, subformula)``; the root has path ``()``."""
    out: list[tuple[tuple[int, ...], Formula]] = []

    def walk(g: Formula, path: tuple[int, ...]) -> None:
        for i, c in enumerate(children(g)):
            walk(c, path + (i,))
        out.append((path, g))

    walk(f, ())
    return out


def distinct_subformulas(f: Formula) -> list[Formula]:
    """Distinct subformulas in order of first post-order occurrence."""
    seen: dict[Formula, None] = {}
    for _, g in subformula_occurrences(f):
        seen.setdefault(g, None)
    return list(seen)


def atoms(f: Formula) -> list[str]:
    """Atom names of ``f`` in order of first occurrence."""
    names: dict[str, None] = {}
    for _, g in subformula_occurrences(f):
        if isinstance(g, Atom):
            names.setdefault(g.name, None)
    return list(names)


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    for _, g in subformula_occurrences(f):
        yield g
