"""Command-line entry point: ``bdenum {enum,verify,audit,bench}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from .bitword import EMPTY, BitWord
from .core import (
    AugmentedSolution,
    delay_profile,
    memory_audit,
    prefix_check,
    replay_check,
    resume_equivalence_check,
    run_enumeration,
)
from .errors import BudgetExceeded, EnumerationError, ParseError
from .formats import parse_instance
from .graph import Graph
from .gray import GrayInstance
from .hypergraph import Hypergraph
from .oracle import ORDER_MODES, verify_stream
from .problems import PROBLEMS, Problem
from .sat import ClauseSet, XorSystem
from .witness import CONST, POLY, WitnessInstance

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2

MAX_RESUME_CHECKS = 256

_EXPECTED = {"hypergraph": Hypergraph, "graph": Graph, "cnf": ClauseSet, "xor": XorSystem}


class UsageError(Exception):
    pass


def _word(text: str) -> BitWord:
    try:
        return BitWord.from_str(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_instance(problem: Problem, args: argparse.Namespace) -> Any:
    if problem.source in _EXPECTED:
        if not args.input:
            raise UsageError(f"--input is required for {problem.spec.problem}")
        instance = parse_instance(Path(args.input), problem.fragment)
        if not isinstance(instance, _EXPECTED[problem.source]):
            raise UsageError(f"{args.input} is not a {problem.source} file")
        if problem.spec.problem == "reach" and instance.source is None:
            instance = Graph(instance.n, instance.arcs, 1)
        return instance
    word = _word(args.word) if args.word else None
    if word is None and args.input:
        parsed = parse_instance(Path(args.input))
        if not isinstance(parsed, BitWord):
            raise UsageError(f"{args.input} does not hold a binary word")
        word = parsed
    if problem.source == "witness":
        x = _word(args.x) if args.x else word
        if x is None:
            raise UsageError("witness problems need --x WORD or an --input file with the word")
        return WitnessInstance(x, CONST if problem.spec.problem == "witness-const" else POLY)
    n = args.n if args.n is not None else (word.length if word is not None else None)
    if n is None:
        raise UsageError("Gray problems need --n (or --word)")
    name = problem.spec.problem
    if name in ("gray-word", "gray-ordered-word") and word is None:
        raise UsageError(f"{name} needs --word")
    try:
        rank = args.rank if name in ("gray-rank", "gray-ordered-rank") else None
        if rank is None and name in ("gray-rank", "gray-ordered-rank"):
            rank = 0
        return GrayInstance(n, rank=rank, word=word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_resume(text: str) -> AugmentedSolution:
    head, _, memory = text.partition(":")
    return AugmentedSolution(_word(head), _word(memory) if memory else EMPTY)


def cmd_enum(problem: Problem, instance: Any, args: argparse.Namespace) -> int:
    resume = _parse_resume(args.resume_from) if args.resume_from else None
    result = run_enumeration(problem.spec, instance, args.limit, resume_from=resume)
    out = sys.stdout
    for word in result.solutions:
        out.write(f"{word}\n")
    out.write(f"# count={len(result.solutions)}\n")
    return EXIT_OK


def cmd_verify(problem: Problem, instance: Any, args: argparse.Namespace) -> int:
    verdict = verify_stream(problem.spec, instance, args.order)
    print(f"{problem.spec.problem}: {verdict}")
    return EXIT_OK if verdict.ok else EXIT_FAILED


def cmd_audit(problem: Problem, instance: Any, args: argparse.Namespace) -> int:
    spec = problem.spec
    ok = True
    try:
        overhead = memory_audit(spec, instance)
        print(f"memory: max overhead {overhead} bits, budget {spec.budget} -> ok")
    except BudgetExceeded as exc:
        print(f"memory: {exc}")
        ok = False
    result = run_enumeration(spec, instance, check=False)
    k = len(result.solutions)
    indices = list(range(k + 1))
    if len(indices) > MAX_RESUME_CHECKS:
        step = len(indices) / MAX_RESUME_CHECKS
        indices = sorted({int(i * step) for i in range(MAX_RESUME_CHECKS)} | {k})
    bad = [i for i in indices if not resume_equivalence_check(spec, instance, i)]
    print(f"restart: {len(indices) - len(bad)}/{len(indices)} resume points reproduce the suffix")
    ok &= not bad
    pure = replay_check(spec, result)
    print(f"purity: {'ok' if pure else 'successor depends on call history'}")
    prefix = prefix_check(spec, result)
    print(f"prefix: {'ok' if prefix else 'decoded word is not a prefix of the augmented word'}")
    return EXIT_OK if ok and pure and prefix else EXIT_FAILED


def cmd_bench(problem: Problem, instance: Any, args: argparse.Namespace) -> int:
    stats = delay_profile(problem.spec, instance)
    print(
        f"{problem.spec.problem}: {stats.samples} successor calls, "
        f"min {stats.min_ns} ns, median {stats.median_ns:.0f} ns, max {stats.max_ns} ns"
    )
    return EXIT_OK


COMMANDS = {"enum": cmd_enum, "verify": cmd_verify, "audit": cmd_audit, "bench": cmd_bench}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bdenum", description="Bounded-delay enumerators.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
        p.add_argument("--input", help="instance file")
        p.add_argument("--n", type=int, help="word length for Gray problems")
        p.add_argument("--rank", type=int, help="start rank for gray-rank / gray-ordered-rank")
        p.add_argument("--word", help="start word for gray-word / gray-ordered-word")
        p.add_argument("--x", help="input word for witness problems")
        if name == "enum":
            p.add_argument("--limit", type=int)
            p.add_argument("--resume-from", metavar="WORD[:MEM]")
        if name == "verify":
            p.add_argument("--order", choices=ORDER_MODES)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    problem = PROBLEMS[args.problem]
    try:
        instance = build_instance(problem, args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](problem, instance, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
