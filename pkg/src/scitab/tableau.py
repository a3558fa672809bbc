"""Labelled tableau search for the sentential calculus with identity.

A branch carries labelled formulas ``w: phi`` and an :class:`EqualityStore`
over their labels.  Decomposition rules break compound formulas into freshly
labelled parts; once none applies, the equality rules (F), (eq-neg),
(eq-impl) and (eq-ident) are saturated.  Closure is detected by the store as
soon as an (in)equality is asserted.

Strategy, fixed for determinism:

* decomposition before equality reasoning;
* among pending premises, non-branching rules first, then the oldest
  branching one;
* during saturation, an equality that closes the branch is preferred;
* branches are explored depth-first, alternatives left to right.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

from .equality import MINUS, PLUS, Clash, EqualityStore, Label, Polarity
from .errors import InvariantViolation
from .formula import Atom, Formula, Ident, Impl, Neg, children, parse, render, size


@dataclass(frozen=True)
class LabelledFormula:
    label: Label
    formula: Formula

    def __str__(self) -> str:
        return f"{self.label}: {render(self.formula)}"


@dataclass(frozen=True)
class Fact:
    """``lhs = rhs`` when ``equal`` holds, ``lhs != rhs`` otherwise."""

    lhs: Label
    rhs: Label
    equal: bool = True

    def __str__(self) -> str:
        return f"{self.lhs} {'=' if self.equal else '!='} {self.rhs}"


Added = Union[LabelledFormula, Fact]


@dataclass
class Alternative:
    formulas: list[LabelledFormula]
    equalities: list[tuple[Label, Label]] = field(default_factory=list)
    disequalities: list[tuple[Label, Label]] = field(default_factory=list)

    def added(self) -> list[Added]:
        out: list[Added] = list(self.formulas)
        out += [Fact(a, b, True) for a, b in self.equalities]
        out += [Fact(a, b, False) for a, b in self.disequalities]
        return out


# polarity patterns of the conclusions, one tuple per alternative;
# a trailing "=" or "!=" relates the two new labels
_PATTERNS: dict[tuple[type, Polarity], tuple[str, list[tuple]]] = {
    (Neg, PLUS): ("neg+", [(MINUS,)]),
    (Neg, MINUS): ("neg-", [(PLUS,)]),
    (Impl, PLUS): ("impl+", [(MINUS, MINUS), (MINUS, PLUS), (PLUS, PLUS)]),
    (Impl, MINUS): ("impl-", [(PLUS, MINUS)]),
    (Ident, PLUS): ("ident+", [(PLUS, PLUS, "="), (MINUS, MINUS, "=")]),
    (Ident, MINUS): (
        "ident-",
        [(PLUS, PLUS, "!="), (PLUS, MINUS), (MINUS, PLUS), (MINUS, MINUS, "!=")],
    ),
}


def rule_name(lf: LabelledFormula) -> str:
    return _PATTERNS[type(lf.formula), lf.label.polarity][0]


def is_branching(lf: LabelledFormula) -> bool:
    if isinstance(lf.formula, Atom):
        return False
    return len(_PATTERNS[type(lf.formula), lf.label.polarity][1]) > 1


def decompose(lf: LabelledFormula, next_id: int) -> list[Alternative]:
    """Conclusions of the decomposition rule for ``lf``, left to right.

    New labels take ids ``next_id``, ``next_id + 1``; alternatives live on
    different branches, so they may share ids.
    """
    if isinstance(lf.formula, Atom):
        raise ValueError(f"no decomposition rule for atomic {lf}")
    _, patterns = _PATTERNS[type(lf.formula), lf.label.polarity]
    parts = children(lf.formula)
    alternatives = []
    for pattern in patterns:
        labels = [Label(next_id + i, pol) for i, pol in enumerate(pattern[: len(parts)])]
        alt = Alternative([LabelledFormula(w, g) for w, g in zip(labels, parts)])
        if len(pattern) > len(parts):
            pair = (labels[0], labels[1])
            (alt.equalities if pattern[-1] == "=" else alt.disequalities).append(pair)
        alternatives.append(alt)
    return alternatives


class Branch:
    """Labelled formulas and (in)equalities on one tableau branch."""

    def __init__(self, root: LabelledFormula):
        self.root = root
        self.entries: list[LabelledFormula] = []
        self.store = EqualityStore()
        self.facts: list[Fact] = []
        self.labels_of: dict[Formula, list[Label]] = {}
        self.urfather: dict[Formula, Label] = {}
        self.expanded: set[int] = set()
        self.blocked: set[int] = set()
        self.next_id = root.label.id + 1
        self.applications = 0
        self.clash: Clash | None = None
        self.saturated = False
        self.add(root)

    @property
    def closed(self) -> bool:
        return self.clash is not None

    @property
    def fully_expanded(self) -> bool:
        return self.closed or self.saturated

    def add(self, lf: LabelledFormula) -> None:
        self.entries.append(lf)
        self.store.register(lf.label)
        self.labels_of.setdefault(lf.formula, []).append(lf.label)
        self.urfather.setdefault(lf.formula, lf.label)
        self.next_id = max(self.next_id, lf.label.id + 1)

    def assert_fact(self, fact: Fact) -> Clash | None:
        self.facts.append(fact)
        self.applications += 1
        if fact.equal:
            clash = self.store.assert_equal(fact.lhs, fact.rhs)
        else:
            clash = self.store.assert_unequal(fact.lhs, fact.rhs)
        if clash is not None:
            self.clash = clash
            self.applications += 1
        return clash

    def apply(self, alt: Alternative) -> Clash | None:
        for lf in alt.formulas:
            self.add(lf)
        for a, b in alt.equalities:
            if self.assert_fact(Fact(a, b, True)):
                return self.clash
        for a, b in alt.disequalities:
            if self.assert_fact(Fact(a, b, False)):
                return self.clash
        return None

    def labels(self) -> list[Label]:
        return [lf.label for lf in self.entries]

    def copy(self) -> Branch:
        dup = Branch.__new__(Branch)
        dup.root = self.root
        dup.entries = list(self.entries)
        dup.store = self.store.copy()
        dup.facts = list(self.facts)
        dup.labels_of = {f: list(ls) for f, ls in self.labels_of.items()}
        dup.urfather = dict(self.urfather)
        dup.expanded = set(self.expanded)
        dup.blocked = set(self.blocked)
        dup.next_id = self.next_id
        dup.applications = self.applications
        dup.clash = self.clash
        dup.saturated = self.saturated
        return dup


def next_premise(branch: Branch, urfather_blocking: bool = False) -> int | None:
    """Index of the entry to decompose next, or ``None`` when none is left."""
    first_branching = None
    for i, lf in enumerate(branch.entries):
        if i in branch.expanded or i in branch.blocked or isinstance(lf.formula, Atom):
            continue
        if urfather_blocking and branch.urfather[lf.formula] != lf.label:
            branch.blocked.add(i)
            continue
        if not is_branching(lf):
            return i
        if first_branching is None:
            first_branching = i
    return first_branching


@dataclass(frozen=True)
class EqualityStep:
    rule: str
    fact: Fact
    clash: Clash | None = None


_CONGRUENCE_RULE = {Neg: "eq-neg", Impl: "eq-impl", Ident: "eq-ident"}


def _equality_candidates(branch: Branch) -> list[tuple[str, Label, Label]]:
    store = branch.store
    found = []
    for labels in branch.labels_of.values():
        first = labels[0]
        for other in labels[1:]:
            if not store.same_class(first, other):
                found.append(("F", first, other))
    if found:
        return found
    # all labels of a formula now share a class, so "phi ~ psi" is a class test
    cls = {f: store.find(ls[0]) for f, ls in branch.labels_of.items()}
    seen: dict[tuple, Formula] = {}
    for f in branch.labels_of:
        if isinstance(f, Atom):
            continue
        parts = children(f)
        if any(p not in cls for p in parts):
            continue
        sig = (type(f),) + tuple(cls[p] for p in parts)
        g = seen.setdefault(sig, f)
        if g is not f and cls[g] != cls[f]:
            found.append((_CONGRUENCE_RULE[type(f)], branch.labels_of[g][0], branch.labels_of[f][0]))
    return found


def saturate_equalities(branch: Branch) -> list[EqualityStep]:
    """Apply equality rules to a fixpoint, closing the branch on a clash.

    Returns the applied steps in order; the last one carries the clash when
    the branch closed.
    """
    steps: list[EqualityStep] = []
    while not branch.closed:
        candidates = _equality_candidates(branch)
        if not candidates:
            branch.saturated = True
            break
        rule, a, b = next(
            (c for c in candidates if branch.store.would_clash(c[1], c[2])), candidates[0]
        )
        fact = Fact(a, b, True)
        clash = branch.assert_fact(fact)
        steps.append(EqualityStep(rule, fact, clash))
    return steps


# -- proof trees -----------------------------------------------------------

class NodeKind(enum.Enum):
    NORMAL = "normal"
    IDENTITY = "identity"
    CLOSED = "closure-leaf"
    OPEN = "open-leaf"


@dataclass
class ProofNode:
    kind: NodeKind
    rule: str
    added: list[Added] = field(default_factory=list)
    children: list[ProofNode] = field(default_factory=list)

    def attach(self, child: ProofNode) -> ProofNode:
        if self.kind in (NodeKind.CLOSED, NodeKind.OPEN):
            raise InvariantViolation("leaf nodes take no children")
        self.children.append(child)
        return child

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass(frozen=True)
class TreeStats:
    depth: int
    size: int


def stats(tree: ProofNode) -> TreeStats:
    """Depth (nodes on the longest root-leaf path) and total node count."""
    depth = 0
    count = 0
    stack = [(tree, 1)]
    while stack:
        node, d = stack.pop()
        count += 1
        depth = max(depth, d)
        stack.extend((c, d + 1) for c in node.children)
    return TreeStats(depth, count)


def _close(node: ProofNode, clash: Clash) -> None:
    node.attach(ProofNode(NodeKind.CLOSED, clash.value))


@dataclass
class Expansion:
    """Result of running one branch up to a leaf or a split.

    ``status`` is ``"closed"``, ``"open"`` or ``"split"``; for a split,
    ``children`` pairs each alternative's (unattached) node with its branch.
    """

    status: str
    last: ProofNode
    children: list[tuple[ProofNode, Branch]] = field(default_factory=list)


def expand_branch(
    branch: Branch, node: ProofNode, *, urfather_blocking: bool = False
) -> Expansion:
    """Extend ``branch`` below ``node`` until it closes, is saturated, or splits."""
    if branch.closed:
        return Expansion("closed", node)
    while True:
        i = next_premise(branch, urfather_blocking)
        if i is None:
            break
        lf = branch.entries[i]
        branch.expanded.add(i)
        alts = decompose(lf, branch.next_id)
        branch.applications += 1
        rule = rule_name(lf)
        if len(alts) == 1:
            node = node.attach(ProofNode(NodeKind.NORMAL, rule, alts[0].added()))
            clash = branch.apply(alts[0])
            if clash:
                _close(node, clash)
                return Expansion("closed", node)
            continue
        kids = []
        for alt in alts:
            child = branch.copy()
            child_node = ProofNode(NodeKind.NORMAL, rule, alt.added())
            clash = child.apply(alt)
            if clash:
                _close(child_node, clash)
            kids.append((child_node, child))
        return Expansion("split", node, kids)

    for step in saturate_equalities(branch):
        node = node.attach(ProofNode(NodeKind.IDENTITY, step.rule, [step.fact]))
        if step.clash:
            _close(node, step.clash)
            return Expansion("closed", node)
    node.attach(ProofNode(NodeKind.OPEN, "open"))
    return Expansion("open", node)


# -- decision --------------------------------------------------------------

class Mode(enum.Enum):
    VALIDITY = "valid"
    SATISFIABILITY = "sat"


class Status(enum.Enum):
    VALID = "Valid"
    INVALID = "Invalid"
    SAT = "Sat"
    UNSAT = "Unsat"


def application_bound(f: Formula) -> int:
    n = size(f)
    return n + n * n + 1


@dataclass
class Verdict:
    status: Status
    formula: Formula
    mode: Mode
    root: LabelledFormula
    proof: ProofNode
    urfather_blocking: bool = False
    branch: Branch | None = None
    model: object | None = None
    valuation: object | None = None
    branch_counts: list[int] = field(default_factory=list)

    @property
    def open(self) -> bool:
        return self.status in (Status.INVALID, Status.SAT)

    @property
    def stats(self) -> TreeStats:
        return stats(self.proof)


def decide(
    f: Formula | str,
    mode: Mode | str = Mode.VALIDITY,
    *,
    urfather_blocking: bool = False,
    exhaustive: bool = False,
    build_model: bool = True,
) -> Verdict:
    """Decide validity (root ``w-: f``) or satisfiability (root ``w+: f``).

    The search stops at the first open fully expanded branch unless
    ``exhaustive`` is set, in which case the whole tableau is built.  For
    open verdicts the branch model of the leftmost open branch is attached.
    """
    from .model import extract_model

    if isinstance(f, str):
        f = parse(f)
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    polarity = MINUS if mode is Mode.VALIDITY else PLUS
    root = LabelledFormula(Label(0, polarity), f)
    branch = Branch(root)
    tree = ProofNode(NodeKind.NORMAL, "root", [root])
    bound = application_bound(f)
    n = size(f)
    counts: list[int] = []
    first_open: list[Branch] = []

    def leaf(b: Branch) -> None:
        counts.append(b.applications)
        if b.applications > bound:
            raise InvariantViolation(
                f"{b.applications} rule applications on a branch exceed {bound}"
            )
        if len(b.entries) > n:
            raise InvariantViolation(f"{len(b.entries)} labels on a branch exceed |f| = {n}")

    # explicit stack keeps deep tableaux off the Python call stack
    stack: list[tuple[ProofNode, Branch]] = [(tree, branch)]
    while stack:
        node, b = stack.pop()
        result = expand_branch(b, node, urfather_blocking=urfather_blocking)
        if result.status == "split":
            for child_node, child in reversed(result.children):
                stack.append((child_node, child))
            result.last.children.extend(cn for cn, _ in result.children)
            continue
        leaf(b)
        if result.status == "open" and not first_open:
            first_open.append(b)
            if not exhaustive:
                break

    if not exhaustive and first_open:
        _prune_unvisited(tree)

    if first_open:
        status = Status.INVALID if mode is Mode.VALIDITY else Status.SAT
    else:
        status = Status.VALID if mode is Mode.VALIDITY else Status.UNSAT
    verdict = Verdict(status, f, mode, root, tree, urfather_blocking, branch_counts=counts)
    if first_open:
        verdict.branch = first_open[0]
        if build_model:
            verdict.model, verdict.valuation = extract_model(first_open[0], root)
    return verdict


def _prune_unvisited(tree: ProofNode) -> None:
    """Drop alternative stubs the search never entered after stopping early."""
    for node in tree.walk():
        node.children = [c for c in node.children if _visited(c)]


def _visited(node: ProofNode) -> bool:
    return node.kind in (NodeKind.CLOSED, NodeKind.OPEN) or bool(node.children)
