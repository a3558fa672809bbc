"""Command-line driver: ``decide``, ``fuzz`` and ``bench``.

Exit status: 0 for Valid or Unsat, 1 for Invalid or Sat, 2 for bad input,
3 for an internal invariant violation (including a solver/oracle mismatch).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from .errors import CapacityError, InvariantViolation
from .export import model_to_json, proof_to_dot, proof_to_json
from .formula import Formula, Neg, ParseError, atoms, parse, render
from .generate import random_formulas
from .model import Valuation, check_model_wellformed, verify_model
from .normal_form import transform_t
from .oracle import oracle_sat
from .tableau import Mode, Status, Verdict, application_bound, decide

EXIT_NEGATIVE = 0
EXIT_POSITIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

# atomic instances of the eight axiom schemes
BENCH_DEFAULT = [
    "p -> (q -> p)",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "(~p -> ~q) -> (q -> p)",
    "p == p",
    "p == q -> ~p == ~q",
    "p == q -> (r == s -> (p -> r) == (q -> s))",
    "p == q -> (r == s -> (p == r) == (q == s))",
    "p == q -> (p -> q)",
]


@dataclass
class RunReport:
    """One solver run, as printed by ``decide --stats`` and collected by ``bench``."""

    formula: str
    mode: str
    options: dict
    verdict: str
    depth: int
    size: int
    branch_counts: list[int]
    wall_time: float
    bound: int = field(default=0)

    def check(self) -> None:
        if self.depth > self.size:
            raise InvariantViolation(f"depth {self.depth} exceeds size {self.size}")
        worst = max(self.branch_counts, default=0)
        if worst > self.bound:
            raise InvariantViolation(f"branch used {worst} rule applications, bound {self.bound}")

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def run_decide(f: Formula, mode: Mode, *, ub: bool, via_t: bool, exhaustive: bool = False):
    """Decide ``f``; with ``via_t`` the transformed formula is proved instead.

    Satisfiability through the transformation is reduced to validity:
    ``f`` is satisfiable iff ``~f`` is not valid iff ``T(~f)`` is not valid.
    Returns the verdict on the formula actually run, the status for ``f``
    and a report.
    """
    if via_t:
        target = transform_t(f if mode is Mode.VALIDITY else Neg(f))
        run_mode = Mode.VALIDITY
    else:
        target, run_mode = f, mode
    start = time.perf_counter()
    verdict = decide(target, run_mode, urfather_blocking=ub, exhaustive=exhaustive)
    elapsed = time.perf_counter() - start
    status = verdict.status
    if via_t and mode is Mode.SATISFIABILITY:
        status = Status.SAT if verdict.open else Status.UNSAT
    st = verdict.stats
    report = RunReport(
        render(f), mode.value, {"ub": ub, "transform_t": via_t, "exhaustive": exhaustive},
        status.value, st.depth, st.size, list(verdict.branch_counts), round(elapsed, 6),
        application_bound(target),
    )
    report.check()
    return verdict, status, report


def _oracle_status(f: Formula, mode: Mode) -> Status:
    if mode is Mode.VALIDITY:
        return Status.INVALID if oracle_sat(Neg(f)) else Status.VALID
    return Status.SAT if oracle_sat(f) else Status.UNSAT


def _check_model(verdict: Verdict, f: Formula, mode: Mode) -> Valuation:
    """Model of the verdict restricted to ``f``'s atoms, checked against ``f``."""
    model = verdict.model
    values = {p: verdict.valuation.atoms[p] for p in atoms(f)}
    want = mode is Mode.SATISFIABILITY
    if not check_model_wellformed(model) or verify_model(model, values, f) != want:
        raise InvariantViolation("extracted model does not witness the verdict")
    return Valuation(model, values)


def _read_formula_text(args) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read().strip()
    if args.formula is None:
        raise ValueError("give a formula or --file")
    return args.formula


def _report_parse_error(text: str, err: ParseError) -> None:
    print(f"parse error at offset {err.position}: {err.message}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print(f"  {' ' * err.position}^", file=sys.stderr)


def cmd_decide(args) -> int:
    text = _read_formula_text(args)
    f = parse(text)
    mode = Mode(args.mode)
    verdict, status, report = run_decide(f, mode, ub=args.ub, via_t=args.transform_t)
    print(status.value, flush=True)

    if args.oracle:
        try:
            expected = _oracle_status(f, mode)
        except CapacityError as err:
            print(f"oracle skipped: {err}", file=sys.stderr)
        else:
            if expected is not status:
                print(f"oracle disagrees: {expected.value}", file=sys.stderr)
                return EXIT_INTERNAL
            print(f"oracle: {expected.value}", file=sys.stderr)

    if args.stats:
        print(report.to_json())
    if args.proof == "dot":
        print(proof_to_dot(verdict.proof), end="")
    elif args.proof == "json":
        print(proof_to_json(verdict.proof))
    if args.model == "json":
        if verdict.model is None:
            print("no model: the tableau is closed", file=sys.stderr)
        else:
            valuation = _check_model(verdict, f, mode)
            print(model_to_json(verdict.model, valuation))
    return EXIT_POSITIVE if status in (Status.INVALID, Status.SAT) else EXIT_NEGATIVE


def cmd_fuzz(args) -> int:
    checked = skipped = 0
    disagreements = []
    for f in random_formulas(args.count, args.atoms, args.depth, args.seed):
        try:
            expected = oracle_sat(f).sat
        except CapacityError:
            skipped += 1
            continue
        checked += 1
        for ub in (False, True):
            verdict = decide(f, Mode.SATISFIABILITY, urfather_blocking=ub)
            if verdict.open != expected:
                disagreements.append((render(f), ub, verdict.status.value, expected))
            elif verdict.open:
                _check_model(verdict, f, Mode.SATISFIABILITY)
    for text, ub, got, expected in disagreements:
        print(f"disagreement: {text} ub={ub} tableau={got} oracle={'Sat' if expected else 'Unsat'}")
    print(f"checked {checked}, skipped {skipped}, disagreements {len(disagreements)}")
    return EXIT_INTERNAL if disagreements else 0


def cmd_bench(args) -> int:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
        texts = [ln for ln in lines if ln and not ln.startswith("#")]
    else:
        texts = BENCH_DEFAULT
    rows = []
    for text in texts:
        f = parse(text)
        cells = []
        for ub in (False, True):
            _, status, report = run_decide(
                f, Mode.VALIDITY, ub=ub, via_t=args.transform_t, exhaustive=True
            )
            cells.append(f"{report.depth}/{report.size}")
        rows.append((text, status.value, *cells))
    width = max(len(r[0]) for r in rows)
    print(f"{'formula':<{width}} | {'verdict':<7} | {'TC':>12} | {'TC+UB':>12}")
    print(f"{'-' * width}-+-{'-' * 7}-+-{'-' * 12}-+-{'-' * 12}")
    for text, verdict, plain, ub in rows:
        print(f"{text:<{width}} | {verdict:<7} | {plain:>12} | {ub:>12}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scitab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide validity or satisfiability of one formula")
    d.add_argument("formula", nargs="?")
    d.add_argument("--file")
    d.add_argument("--mode", choices=["valid", "sat"], default="valid")
    d.add_argument("--ub", action="store_true", help="urfather blocking")
    d.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    d.add_argument("--transform-t", action="store_true", help="prove the identity-clause form")
    d.add_argument("--proof", choices=["dot", "json"])
    d.add_argument("--model", choices=["json"])
    d.add_argument("--stats", action="store_true", help="print a JSON run report")
    d.set_defaults(run=cmd_decide)

    z = sub.add_parser("fuzz", help="compare the tableau with the oracle on random formulas")
    z.add_argument("--count", type=int, default=100)
    z.add_argument("--atoms", type=int, default=2)
    z.add_argument("--depth", type=int, default=4)
    z.add_argument("--seed", type=int, default=0)
    z.set_defaults(run=cmd_fuzz)

    b = sub.add_parser("bench", help="depth/size table with and without urfather blocking")
    b.add_argument("--file", help="one formula per line; '#' starts a comment line")
    b.add_argument("--transform-t", action="store_true")
    b.set_defaults(run=cmd_bench)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as err:
        text = getattr(args, "formula", None) or ""
        if getattr(args, "file", None) and args.command == "decide":
            text = _read_formula_text(args)
        _report_parse_error(text, err)
        return EXIT_INPUT
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run_cli())
