"""Driver for successor-style enumerators.

An enumerator is a bundle of pure functions: ``precompute`` turns an instance
into an immutable artifact, ``first`` produces the first augmented solution,
``next`` maps an augmented solution to the following one and returns its input
unchanged once the stream is exhausted.  Augmented solutions carry the visible
solution bits followed by auxiliary memory bits.
"""

from __future__ import annotations

import os
import statistics
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .bitword import EMPTY, BitWord
from .errors import BudgetExceeded, InvalidPredecessor, NoFixpoint, NonSolutionEmitted

STEP_CAP_ENV = "ENUM_STEP_CAP"


@dataclass(frozen=True)
class MemoryBudget:
    kind: str  # "none", "constant", "polynomial" or "unbounded"
    bits: int = 0
    poly: Callable[[int], int] | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if self.kind not in ("none", "constant", "polynomial", "unbounded"):
            raise ValueError(f"unknown budget kind {self.kind!r}")
        if self.kind == "constant" and self.bits < 0:
            raise ValueError("constant budget must be nonnegative")
        if self.kind == "polynomial" and self.poly is None:
            raise ValueError("polynomial budget needs a bound function")

    def bound(self, input_length: int) -> float:
        if self.kind == "none":
            return 0
        if self.kind == "constant":
            return self.bits
        if self.kind == "polynomial":
            value = self.poly(input_length)
            if value < 0:
                raise ValueError("polynomial bound evaluated negative")
            return value
        return float("inf")

    def __str__(self) -> str:
        if self.kind == "constant":
            return f"constant({self.bits})"
        if self.kind == "polynomial":
            return f"polynomial({self.description or 'p'})"
        return self.kind


NO_MEMORY = MemoryBudget("none")


def constant(bits: int) -> MemoryBudget:
    return MemoryBudget("constant", bits=bits)


def polynomial(poly: Callable[[int], int], description: str = "") -> MemoryBudget:
    return MemoryBudget("polynomial", poly=poly, description=description)


@dataclass(frozen=True, slots=True)
class AugmentedSolution:
    solution: BitWord
    memory: BitWord = EMPTY

    def serialize(self) -> BitWord:
        return self.solution.concat(self.memory)

    @classmethod
    def deserialize(cls, word: BitWord, solution_length: int) -> AugmentedSolution:
        head, tail = word.split(solution_length)
        return cls(head, tail)

    @property
    def overhead(self) -> int:
        return self.memory.length

    def __str__(self) -> str:
        return f"{self.solution}:{self.memory}" if self.memory.length else str(self.solution)


def strip_memory(aug: AugmentedSolution) -> BitWord:
    return aug.solution


@dataclass(frozen=True)
class EnumeratorSpec:
    """A problem-specific enumerator.

    ``present`` maps the internal solution encoding to the public one (only
    Krom needs it, for the M-word to assignment translation).  ``checker``
    works on presented words.  ``order`` names the order property the stream
    is expected to satisfy, see :mod:`bdenum.oracle`; ``order_key`` projects
    a decoded word onto the part that property talks about (the free
    variables of an XOR system).  ``length`` gives the length of presented
    words for an instance, which is what a brute-force oracle scans.
    """

    problem: str
    precompute: Callable[[Any], Any]
    first: Callable[[Any], AugmentedSolution | None]
    next: Callable[[Any, AugmentedSolution], AugmentedSolution]
    budget: MemoryBudget = NO_MEMORY
    decode: Callable[[AugmentedSolution], BitWord] = strip_memory
    present: Callable[[Any, BitWord], BitWord] | None = None
    checker: Callable[[Any, BitWord], bool] | None = None
    size: Callable[[Any], int] = lambda instance: 0
    order: str = "set"
    order_key: Callable[[Any, BitWord], BitWord] | None = None
    length: Callable[[Any], int] | None = None

    def ordered_word(self, artifact: Any, aug: AugmentedSolution) -> BitWord:
        """The word on which the declared order property is stated."""
        word = self.decode(aug)
        return self.order_key(artifact, word) if self.order_key is not None else word

    def output(self, artifact: Any, aug: AugmentedSolution) -> BitWord:
        word = self.decode(aug)
        return self.present(artifact, word) if self.present is not None else word


@dataclass
class EnumerationResult:
    solutions: list[BitWord]
    steps: int = 0
    delays_ns: list[int] = field(default_factory=list)
    max_overhead: int = 0
    trace: list[AugmentedSolution] = field(default_factory=list)
    artifact: Any = None

    def __len__(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class DelayStats:
    samples: int
    min_ns: int
    median_ns: float
    max_ns: int

    def as_dict(self) -> dict[str, float]:
        return {"samples": self.samples, "min_ns": self.min_ns, "median_ns": self.median_ns, "max_ns": self.max_ns}


def default_step_cap(solution_length: int) -> int:
    override = os.environ.get(STEP_CAP_ENV)
    if override:
        return int(override)
    return 2**solution_length + 1


def _walk(
    spec: EnumeratorSpec, artifact: Any, start: AugmentedSolution, cap: int, timed: bool = False
) -> Iterator[tuple[AugmentedSolution, int]]:
    """Yield ``start`` then every successor until the fixpoint.

    Each item carries the nanoseconds spent in the successor call that
    produced it (0 for ``start``).  ``cap`` bounds the number of circuit
    invocations including the one that produced ``start``.
    """
    yield start, 0
    current = start
    steps = 1
    while True:
        if steps >= cap:
            raise NoFixpoint(f"{spec.problem}: no fixpoint after {steps} steps")
        t0 = time.perf_counter_ns() if timed else 0
        following = spec.next(artifact, current)
        elapsed = time.perf_counter_ns() - t0 if timed else 0
        steps += 1
        if following == current:
            return
        yield following, elapsed
        current = following


def run_enumeration(
    spec: EnumeratorSpec,
    instance: Any,
    limit: int | None = None,
    *,
    step_cap: int | None = None,
    resume_from: AugmentedSolution | None = None,
    timed: bool = False,
    check: bool = True,
) -> EnumerationResult:
    """Drive ``spec`` on ``instance`` until the fixpoint (or ``limit`` outputs).

    With ``resume_from`` the stream restarts from that augmented solution:
    it is validated and then fed straight into ``next``; only the words after
    it are reported.
    """
    artifact = spec.precompute(instance)
    result = EnumerationResult(solutions=[], artifact=artifact)
    if artifact is None:
        result.steps = 1
        return result
    if resume_from is not None:
        word = spec.output(artifact, resume_from)
        if spec.checker is not None and not spec.checker(instance, word):
            raise InvalidPredecessor(f"{spec.problem}: {resume_from} is not a solution")
        start = resume_from
    else:
        start = spec.first(artifact)
        if start is None:
            result.steps = 1
            return result
    cap = step_cap if step_cap is not None else default_step_cap(start.solution.length)
    steps = 0
    for aug, elapsed in _walk(spec, artifact, start, cap, timed):
        steps += 1
        if steps > 1 and timed:
            result.delays_ns.append(elapsed)
        if steps == 1 and resume_from is not None:
            continue
        word = spec.output(artifact, aug)
        if check and spec.checker is not None and not spec.checker(instance, word):
            raise NonSolutionEmitted(f"{spec.problem}: emitted non-solution {word}")
        result.solutions.append(word)
        result.trace.append(aug)
        result.max_overhead = max(result.max_overhead, aug.overhead)
        if limit is not None and len(result.solutions) >= limit:
            break
    else:
        # the fixpoint call counts as a step
        steps += 1
    result.steps = steps
    return result


def resume_equivalence_check(spec: EnumeratorSpec, instance: Any, index: int) -> bool:
    """Restart from the ``index``-th augmented solution and compare suffixes.

    The augmented solution is round-tripped through its serialized bits so
    that only ``(artifact, bits)`` reach the successor.  ``index = 0`` restarts
    from ``first``.
    """
    full = run_enumeration(spec, instance, check=False)
    if index < 0 or index > len(full.trace):
        raise ValueError(f"resume index {index} outside 0..{len(full.trace)}")
    artifact = full.artifact
    if artifact is None:
        return index == 0
    cap = default_step_cap(full.trace[0].solution.length) if full.trace else 2
    try:
        if index == 0:
            start = spec.first(artifact)
            if start is None:
                return not full.trace
            replay = [aug for aug, _ in _walk(spec, artifact, start, cap)]
        else:
            held = full.trace[index - 1]
            restored = AugmentedSolution.deserialize(held.serialize(), held.solution.length)
            replay = [aug for aug, _ in _walk(spec, artifact, restored, cap)][1:]
    except NoFixpoint:
        return False
    expected = full.trace[index:] if index else full.trace
    return replay == expected


def replay_check(spec: EnumeratorSpec, result: EnumerationResult) -> bool:
    """Call ``next`` twice on every recorded augmented solution; results must agree."""
    artifact = result.artifact
    for i, aug in enumerate(result.trace):
        a = spec.next(artifact, aug)
        b = spec.next(artifact, aug)
        if a != b:
            return False
        following = result.trace[i + 1] if i + 1 < len(result.trace) else aug
        if a != following:
            return False
    return True


def prefix_check(spec: EnumeratorSpec, result: EnumerationResult) -> bool:
    """The decoded solution must be the leading bits of the serialized augmented word."""
    for aug in result.trace:
        word = spec.decode(aug)
        head, _ = aug.serialize().split(word.length)
        if head != word:
            return False
    return True


def memory_audit(spec: EnumeratorSpec, instance: Any) -> int:
    """Maximum auxiliary-memory overhead over the whole stream, checked against the budget."""
    result = run_enumeration(spec, instance, check=False)
    bound = spec.budget.bound(spec.size(instance))
    if result.max_overhead > bound:
        raise BudgetExceeded(
            f"{spec.problem}: overhead {result.max_overhead} bits exceeds {spec.budget} = {bound}"
        )
    return result.max_overhead


def delay_profile(spec: EnumeratorSpec, instance: Any) -> DelayStats:
    """Wall-clock statistics of successor calls.  A report, never a verdict."""
    result = run_enumeration(spec, instance, timed=True, check=False)
    samples = result.delays_ns or [0]
    return DelayStats(
        samples=len(result.delays_ns),
        min_ns=min(samples),
        median_ns=statistics.median(samples),
        max_ns=max(samples),
    )
