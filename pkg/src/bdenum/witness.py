"""Parity witnesses: enumerators that need auxiliary memory.

For an input x of length n the solutions are every m-bit word other than
0^m and 1^m, followed by 1^m when x has an even number of ones and 0^m
otherwise.  The last word can only be chosen after the parity of x has been
threaded through the memory, one bit per step (constant variant) or one
level of a pairwise XOR tree per step (polynomial variant).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitword import BitWord
from .core import AugmentedSolution, EnumeratorSpec, constant, polynomial
from .errors import InstanceTooSmall, InvalidPredecessor

CONST = "const-mem"
POLY = "poly-mem"


def _ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def _ceil_loglog2(n: int) -> int:
    e = 0
    while 2 ** (2**e) < n:
        e += 1
    return e


def solution_length(n: int, variant: str) -> int:
    if variant == CONST:
        return _ceil_log2(n) + 1
    if variant == POLY:
        # n = 2 gives 1; widened to 2 so that the set of middle words is non-empty
        return max(_ceil_loglog2(n) + 1, 2)
    raise ValueError(f"unknown witness variant {variant!r}")


@dataclass(frozen=True)
class WitnessInstance:
    x: BitWord
    variant: str = CONST

    @property
    def n(self) -> int:
        return self.x.length

    @property
    def m(self) -> int:
        return solution_length(self.n, self.variant)

    @property
    def t(self) -> int:
        return 2**self.m - 2


def halve(b: BitWord) -> BitWord:
    """One level of the XOR tree: XOR adjacent pairs, an odd last bit passes through."""
    bits = list(b)
    out = [bits[i] ^ bits[i + 1] for i in range(0, len(bits) - 1, 2)]
    if len(bits) % 2:
        out.append(bits[-1])
    return BitWord.from_bits(out)


def _check(inst: WitnessInstance) -> None:
    n = inst.n
    if n < 2:
        raise InstanceTooSmall(f"input of length {n} leaves no room for the middle words")
    needed = n if inst.variant == CONST else _ceil_log2(n)
    if inst.t < needed:
        raise InstanceTooSmall(f"{inst.t} middle words cannot absorb {needed} parity steps")


def rl_membership(inst: WitnessInstance, y: BitWord) -> bool:
    m = inst.m
    if y.length != m:
        return False
    if 0 < y.value < 2**m - 1:
        return True
    even = inst.x.popcount() % 2 == 0
    return y.value == (2**m - 1 if even else 0)


def rl_first(inst: WitnessInstance) -> AugmentedSolution:
    _check(inst)
    z1 = BitWord(1, inst.m)
    if inst.variant == CONST:
        return AugmentedSolution(z1, BitWord(inst.x.at(1), 1))
    return AugmentedSolution(z1, halve(inst.x))


def rl_next(inst: WitnessInstance, aug: AugmentedSolution) -> AugmentedSolution:
    m, t = inst.m, inst.t
    z, b = aug.solution, aug.memory
    if z.length != m or b.length == 0:
        raise InvalidPredecessor(f"{aug} is not an augmented witness word")
    if z.value in (0, 2**m - 1):
        return aug
    if z.value == t:
        parity = b.value if inst.variant == CONST else b.at(1)
        last = BitWord.zeros(m) if parity else BitWord.ones(m)
        return AugmentedSolution(last, b)
    i = z.value + 1
    if inst.variant == CONST:
        bit = b.value ^ inst.x.at(i) if i <= inst.n else b.value
        return AugmentedSolution(BitWord(i, m), BitWord(bit, 1))
    return AugmentedSolution(BitWord(i, m), halve(b) if b.length > 1 else b)


def rl_enumerate(inst: WitnessInstance) -> list[BitWord]:
    from .core import run_enumeration

    return run_enumeration(spec_for(inst.variant), inst).solutions


WITNESS_CONST = EnumeratorSpec(
    problem="witness-const",
    precompute=lambda inst: inst,
    first=rl_first,
    next=rl_next,
    budget=constant(1),
    checker=rl_membership,
    size=lambda inst: inst.n,
    length=lambda inst: inst.m,
    order="set",
)

WITNESS_POLY = EnumeratorSpec(
    problem="witness-poly",
    precompute=lambda inst: inst,
    first=rl_first,
    next=rl_next,
    budget=polynomial(lambda n: n, "n"),
    checker=rl_membership,
    size=lambda inst: inst.n,
    length=lambda inst: inst.m,
    order="set",
)


def spec_for(variant: str) -> EnumeratorSpec:
    return WITNESS_CONST if variant == CONST else WITNESS_POLY


__all__ = [
    "CONST",
    "POLY",
    "WITNESS_CONST",
    "WITNESS_POLY",
    "WitnessInstance",
    "halve",
    "rl_enumerate",
    "rl_first",
    "rl_membership",
    "rl_next",
    "solution_length",
    "spec_for",
]
