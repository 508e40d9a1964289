"""Brute-force oracles and stream verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .bitword import BitWord
from .core import EnumeratorSpec, run_enumeration
from .errors import EnumerationError, TooLargeForOracle

ORACLE_MAX_LENGTH = 20
ORDER_MODES = ("set", "lex-1<0", "lex-0<1", "gray-adjacent")


@dataclass(frozen=True)
class OracleResult:
    solutions: frozenset[BitWord]

    @property
    def count(self) -> int:
        return len(self.solutions)


def oracle_enumerate(instance: Any, checker: Callable[[Any, BitWord], bool], length: int) -> OracleResult:
    """Keep every word of the given length accepted by ``checker``."""
    if length > ORACLE_MAX_LENGTH:
        raise TooLargeForOracle(f"{length}-bit words are beyond the {ORACLE_MAX_LENGTH}-bit oracle")
    found = frozenset(
        word for word in (BitWord(v, length) for v in range(2**length)) if checker(instance, word)
    )
    return OracleResult(found)


@dataclass
class Verdict:
    ok: bool
    count: int = 0
    expected: int | None = None
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)

    def __str__(self) -> str:
        if self.ok:
            return f"pass ({self.count} solutions)"
        return "fail: " + "; ".join(self.failures)


def check_order(words: list[BitWord], mode: str) -> str | None:
    """First violation of ``mode`` in consecutive words, or None."""
    if mode not in ORDER_MODES:
        raise ValueError(f"unknown order mode {mode!r}")
    for i, (a, b) in enumerate(zip(words, words[1:]), start=1):
        if mode == "lex-1<0" and not b.value < a.value:
            return f"positions {i},{i + 1}: {b} does not follow {a} with 1<0"
        if mode == "lex-0<1" and not b.value > a.value:
            return f"positions {i},{i + 1}: {b} does not follow {a} with 0<1"
        if mode == "gray-adjacent" and a.hamming(b) != 1:
            return f"positions {i},{i + 1}: {a} -> {b} changes {a.hamming(b)} bits"
    return None


def verify_stream(
    spec: EnumeratorSpec,
    instance: Any,
    order: str | None = None,
    oracle: OracleResult | None = None,
) -> Verdict:
    """Compare the stream with a brute-force oracle and check its order property."""
    mode = order or spec.order
    if oracle is None:
        if spec.checker is None or spec.length is None:
            raise ValueError(f"{spec.problem}: no checker/length to build an oracle from")
        oracle = oracle_enumerate(instance, spec.checker, spec.length(instance))
    verdict = Verdict(ok=True, expected=oracle.count)
    try:
        result = run_enumeration(spec, instance, check=False)
    except EnumerationError as exc:
        verdict.fail(f"{type(exc).__name__}: {exc}")
        return verdict
    verdict.count = len(result.solutions)
    seen: set[BitWord] = set()
    for i, word in enumerate(result.solutions, start=1):
        if word in seen:
            verdict.fail(f"duplicate {word} at position {i}")
            break
        seen.add(word)
    extra = seen - oracle.solutions
    missing = oracle.solutions - seen
    if extra:
        verdict.fail(f"non-solution emitted: {min(extra, key=str)}")
    if missing:
        verdict.fail(f"solution never emitted: {min(missing, key=str)}")
    keyed = [spec.ordered_word(result.artifact, aug) for aug in result.trace]
    violation = check_order(keyed, mode)
    if violation:
        verdict.fail(f"order {mode}: {violation}")
    return verdict
