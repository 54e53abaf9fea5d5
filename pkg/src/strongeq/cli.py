"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict (not
equivalent, or mismatches found), 2 usage or parse error, 3 resource
guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import conditions
from .discovery import TupleShape, language_symbols, test_conjecture
from .errors import ParseError, TooManyAtomsError
from .oracle import SE_ATOM_LIMIT, countermodel_json, strongly_equivalent
from .semantics import ANSWER_SET_ATOM_LIMIT, answer_sets
from .simplify import simplify, verify_simplification
from .syntax import Program, Symbols, bits_of, format_program, parse_program

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

# verify runs enumerating more tuples than this demand an explicit opt-in
LONG_RUN_TUPLES = 100_000_000

# Registered conditions for `verify`: name -> (shape, predicate, exact).
# s_implies is a deliberately incomplete 1-1-0 condition, kept around to
# show the harness catching a conjecture that does not cover the oracle.
CONDITIONS: dict[str, tuple[TupleShape, object, bool]] = {
    "cond_0_1_0": (TupleShape(0, 1, 0), conditions.cond_0_1_0, True),
    "cond_1_1_0": (TupleShape(1, 1, 0), conditions.cond_1_1_0, True),
    "cond_0_1_1": (TupleShape(0, 1, 1), conditions.cond_0_1_1, True),
    "cond_2_1_0": (TupleShape(2, 1, 0), conditions.cond_2_1_0, True),
    "cond_0_2_1": (TupleShape(0, 2, 1), conditions.cond_0_2_1, True),
    "cond_0_2_2": (TupleShape(0, 2, 2), conditions.cond_0_2_2, True),
    "s_implies": (TupleShape(1, 1, 0), conditions.s_implies, False),
}


def _load_program(path: str, symbols: Symbols) -> Program:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))
    try:
        return parse_program(text, symbols)
    except ParseError as exc:
        raise SystemExit(_usage_error(f"{path}:{exc}"))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _guard_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_GUARD


def _set_names(mask: int, symbols: Symbols) -> list[str]:
    return sorted(symbols.name(i) for i in bits_of(mask))


def cmd_answersets(args: argparse.Namespace) -> int:
    symbols = Symbols()
    program = _load_program(args.path, symbols)
    limit = args.max_atoms if args.max_atoms is not None else ANSWER_SET_ATOM_LIMIT
    try:
        sets = answer_sets(program, max_atoms=limit)
    except TooManyAtomsError as exc:
        return _guard_error(str(exc))
    listed = sorted((_set_names(x, symbols) for x in sets), key=lambda s: (len(s), s))
    if args.json:
        print(json.dumps(listed))
        return EXIT_OK
    if not listed:
        print("no answer sets")
        return EXIT_OK
    for names in listed:
        print("{" + ", ".join(names) + "}")
    return EXIT_OK


def cmd_check_se(args: argparse.Namespace) -> int:
    symbols = Symbols()
    p1 = _load_program(args.path1, symbols)
    p2 = _load_program(args.path2, symbols)
    limit = args.max_atoms if args.max_atoms is not None else SE_ATOM_LIMIT
    try:
        verdict = strongly_equivalent(p1, p2, max_atoms=limit)
    except TooManyAtomsError as exc:
        return _guard_error(str(exc))
    if args.json:
        payload = {
            "equivalent": verdict.equivalent,
            "countermodel": None
            if verdict.countermodel is None
            else countermodel_json(verdict.countermodel, symbols),
        }
        print(json.dumps(payload))
    elif verdict.equivalent:
        print("strongly equivalent")
    else:
        cm = countermodel_json(verdict.countermodel, symbols)
        print("NOT strongly equivalent")
        print(f"countermodel: x={{{', '.join(cm['x'])}}} y={{{', '.join(cm['y'])}}}")
    return EXIT_OK if verdict.equivalent else EXIT_NEGATIVE


def cmd_simplify(args: argparse.Namespace) -> int:
    symbols = Symbols()
    program = _load_program(args.path, symbols)
    limit = args.max_atoms if args.max_atoms is not None else SE_ATOM_LIMIT
    simplified, trace = simplify(program)
    text = format_program(simplified, symbols)
    if args.trace:
        Path(args.trace).write_text(trace.json_lines(symbols), encoding="utf-8")
    verified: bool | None = None
    if args.verify:
        try:
            verified = verify_simplification(program, simplified, max_atoms=limit)
        except TooManyAtomsError as exc:
            return _guard_error(str(exc))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        rules = [line for line in text.splitlines() if line]
        print(json.dumps({"rules": rules, "verified": verified, "steps": len(trace.steps)}))
    elif not args.out:
        sys.stdout.write(text)
    if verified is False:
        print("error: simplified program is NOT strongly equivalent", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        k, m, n = (int(part) for part in args.shape.split(","))
        shape = TupleShape(k, m, n)
    except ValueError as exc:
        return _usage_error(f"bad --shape: {exc}")
    entry = CONDITIONS.get(args.condition)
    if entry is None:
        known = ", ".join(sorted(CONDITIONS))
        return _usage_error(f"unknown condition {args.condition!r}; known: {known}")
    expected_shape, predicate, _exact = entry
    if expected_shape != shape:
        return _usage_error(
            f"condition {args.condition} is for shape "
            f"{expected_shape.k},{expected_shape.m},{expected_shape.n}, not {args.shape}"
        )
    limit = args.max_atoms if args.max_atoms is not None else 7
    rule_count = (
        4**args.atoms - 1 if args.canonical else 2 ** (3 * args.atoms) - 1
    )
    tuple_count = rule_count**shape.length
    if tuple_count > LONG_RUN_TUPLES and not args.allow_long:
        return _usage_error(
            f"this run enumerates {tuple_count:,} tuples; "
            "pass --allow-long if you really want it"
        )
    try:
        report = test_conjecture(
            shape,
            args.atoms,
            predicate,
            canonical_only=args.canonical,
            modulo_iso=args.modulo_iso,
            job_count=args.jobs,
            max_atoms=limit,
        )
    except TooManyAtomsError as exc:
        return _guard_error(str(exc))
    payload = report.to_json(language_symbols(args.atoms))
    if args.report:
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps(payload))
    else:
        print(
            f"shape {shape.k}-{shape.m}-{shape.n} over {args.atoms} atoms: "
            f"{report.total_tuples} tuples, {report.se_positive_count} oracle-positive, "
            f"{report.condition_positive_count} condition-positive, "
            f"{report.mismatch_count} mismatches "
            f"({report.elapsed_ms:.0f} ms)"
        )
    return EXIT_OK if report.mismatch_count == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongeq",
        description="Strong equivalence toolkit for ground disjunctive logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_as = sub.add_parser("answersets", help="print the answer sets of a program file")
    p_as.add_argument("path")
    p_as.add_argument("--json", action="store_true")
    p_as.add_argument("--max-atoms", type=int, default=None)
    p_as.set_defaults(fn=cmd_answersets)

    p_se = sub.add_parser("check-se", help="decide strong equivalence of two program files")
    p_se.add_argument("path1")
    p_se.add_argument("path2")
    p_se.add_argument("--json", action="store_true")
    p_se.add_argument("--max-atoms", type=int, default=None)
    p_se.set_defaults(fn=cmd_check_se)

    p_si = sub.add_parser("simplify", help="simplify a program, preserving strong equivalence")
    p_si.add_argument("path")
    p_si.add_argument("--out", default=None, help="write the result here instead of stdout")
    p_si.add_argument("--verify", action="store_true", help="re-check the result with the oracle")
    p_si.add_argument("--trace", default=None, help="write the JSON-lines rewrite trace here")
    p_si.add_argument("--json", action="store_true")
    p_si.add_argument("--max-atoms", type=int, default=None)
    p_si.set_defaults(fn=cmd_simplify)

    p_v = sub.add_parser("verify", help="exhaustively check a condition against the oracle")
    p_v.add_argument("--shape", required=True, help="k,m,n")
    p_v.add_argument("--atoms", type=int, required=True)
    p_v.add_argument("--condition", required=True)
    p_v.add_argument("--canonical", action="store_true", help="enumerate canonical rules only")
    p_v.add_argument("--modulo-iso", action="store_true", help="one tuple per renaming class")
    p_v.add_argument("--jobs", type=int, default=1)
    p_v.add_argument("--report", default=None, help="write the JSON report here")
    p_v.add_argument("--json", action="store_true")
    p_v.add_argument("--max-atoms", type=int, default=None)
    p_v.add_argument(
        "--allow-long",
        action="store_true",
        help="opt in to runs over 100 million tuples (hours to days)",
    )
    p_v.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return EXIT_OK if exc.code is None else EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
