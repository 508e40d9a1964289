"""Binary reflected Gray code: conversions and the six enumeration variants.

Words are written a_{n-1}...a_1 a_0, so position 0 is the rightmost bit
(bit 0 of ``BitWord.value``).  The one-bit step state used by ordered
enumeration is 1 when the next step is odd (flip position 0) and 0 when it is
even (flip the position just above the lowest 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitword import BitWord
from .core import AugmentedSolution, EnumeratorSpec, NO_MEMORY, constant
from .errors import InvalidPredecessor, RankOutOfRange

ODD = 1
EVEN = 0


def _check_rank(n: int, r: int) -> None:
    if n < 1:
        raise ValueError("Gray code length must be at least 1")
    if not 0 <= r < 2**n:
        raise RankOutOfRange(f"rank {r} not in [0, 2^{n})")


def gray_word_from_rank(n: int, r: int) -> BitWord:
    _check_rank(n, r)
    value = 0
    for j in range(n):
        b_j = (r >> j) & 1
        b_next = (r >> (j + 1)) & 1  # b_n = 0
        value |= ((b_j + b_next) % 2) << j
    return BitWord(value, n)


def gray_rank_from_word(w: BitWord) -> int:
    rank = 0
    acc = 0
    for j in range(w.length - 1, -1, -1):
        acc ^= w.position(j)
        rank |= acc << j
    return rank


def lex_next(w: BitWord) -> BitWord:
    """Binary successor; 1^n is the fixpoint."""
    if w.value == (1 << w.length) - 1:
        return w
    return BitWord(w.value + 1, w.length)


def _lowest_one(w: BitWord) -> int:
    if w.value == 0:
        return -1
    return (w.value & -w.value).bit_length() - 1


def _even_step(w: BitWord) -> BitWord | None:
    """Flip the position above the lowest 1, or None when that overflows."""
    i = _lowest_one(w)
    if i < 0 or i + 1 >= w.length:
        return None
    return w.flip_position(i + 1)


def ordered_gray_next(w: BitWord, state: int) -> tuple[BitWord, int]:
    if state == ODD:
        return w.flip_position(0), EVEN
    stepped = _even_step(w)
    if stepped is None:
        return w, state
    return stepped, ODD


def ordered_from_rank_first(n: int, r: int) -> tuple[BitWord, int]:
    _check_rank(n, r)
    return gray_word_from_rank(n, r), ODD if r % 2 == 0 else EVEN


def ordered_from_word_precompute(x: BitWord) -> int:
    return gray_rank_from_word(x)


def unordered_rank_first(n: int, r: int) -> BitWord:
    _check_rank(n, r)
    return gray_word_from_rank(n, r)


def unordered_rank_next(n: int, r: int, y: BitWord) -> BitWord:
    """Memoryless successor over {G_s : s >= r}.

    Even r walks the even ranks upward to 10...01, jumps to 10...00 and
    walks the odd ranks back down to G_{r+1}.  Odd r mirrors this with the
    two boundary words swapped and the double step applied in reverse.
    """
    _check_rank(n, r)
    if y.length != n:
        raise InvalidPredecessor(f"word {y} has length {y.length}, expected {n}")
    if gray_rank_from_word(y) < r:
        raise InvalidPredecessor(f"word {y} ranks below {r}")
    if n == 1:
        # G^1 = [0, 1]
        return BitWord(1, 1) if r == 0 and y.value == 0 else y
    if r == 2**n - 1:
        return y
    if y == gray_word_from_rank(n, r + 1):
        return y
    top = 1 << (n - 1)
    if r % 2 == 0:
        if y.value == top | 1:
            return BitWord(top, n)
        return _even_step(y.flip_position(0))
    if y.value == top:
        return BitWord(top | 1, n)
    return _even_step(y).flip_position(0)


def unordered_word_first(x: BitWord) -> BitWord:
    return x


def unordered_word_next(x: BitWord, y: BitWord) -> BitWord:
    return unordered_rank_next(x.length, gray_rank_from_word(x), y)


@dataclass(frozen=True)
class GrayInstance:
    n: int
    rank: int | None = None
    word: BitWord | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.word is not None and self.word.length != self.n:
            raise ValueError("start word length differs from n")
        if self.rank is not None:
            _check_rank(self.n, self.rank)


def _state_word(state: int) -> BitWord:
    return BitWord(state, 1)


def _ordered_next(_artifact, aug: AugmentedSolution) -> AugmentedSolution:
    if aug.memory.length != 1:
        raise InvalidPredecessor("ordered Gray enumeration carries exactly one memory bit")
    word, state = ordered_gray_next(aug.solution, aug.memory.value)
    return AugmentedSolution(word, _state_word(state))


def _ordered_rank_first(artifact: tuple[int, int]) -> AugmentedSolution:
    word, state = ordered_from_rank_first(*artifact)
    return AugmentedSolution(word, _state_word(state))


def _at_least(rank: int):
    return lambda inst, w: w.length == inst.n and gray_rank_from_word(w) >= rank


def _rank_of(inst: GrayInstance) -> int:
    if inst.rank is not None:
        return inst.rank
    if inst.word is not None:
        return gray_rank_from_word(inst.word)
    return 0


def _any_word(inst: GrayInstance, w: BitWord) -> bool:
    return w.length == inst.n


LEX = EnumeratorSpec(
    problem="gray-lex",
    precompute=lambda inst: inst.n,
    first=lambda n: AugmentedSolution(BitWord.zeros(n)),
    next=lambda n, aug: AugmentedSolution(lex_next(aug.solution)),
    checker=_any_word,
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="lex-0<1",
)

ORDERED = EnumeratorSpec(
    problem="gray-ordered",
    precompute=lambda inst: (inst.n, 0),
    first=_ordered_rank_first,
    next=_ordered_next,
    budget=constant(1),
    checker=_any_word,
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="gray-adjacent",
)

ORDERED_FROM_RANK = EnumeratorSpec(
    problem="gray-ordered-rank",
    precompute=lambda inst: (inst.n, _rank_of(inst)),
    first=_ordered_rank_first,
    next=_ordered_next,
    budget=constant(1),
    checker=lambda inst, w: _at_least(_rank_of(inst))(inst, w),
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="gray-adjacent",
)

# rank is computed once during precomputation; the successor never sees the start word
ORDERED_FROM_WORD = EnumeratorSpec(
    problem="gray-ordered-word",
    precompute=lambda inst: (inst.n, ordered_from_word_precompute(inst.word)),
    first=_ordered_rank_first,
    next=_ordered_next,
    budget=constant(1),
    checker=lambda inst, w: _at_least(_rank_of(inst))(inst, w),
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="gray-adjacent",
)

UNORDERED_FROM_RANK = EnumeratorSpec(
    problem="gray-rank",
    precompute=lambda inst: (inst.n, _rank_of(inst)),
    first=lambda art: AugmentedSolution(unordered_rank_first(*art)),
    next=lambda art, aug: AugmentedSolution(unordered_rank_next(art[0], art[1], aug.solution)),
    checker=lambda inst, w: _at_least(_rank_of(inst))(inst, w),
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="set",
)

UNORDERED_FROM_WORD = EnumeratorSpec(
    problem="gray-word",
    precompute=lambda inst: inst.word,
    first=lambda x: AugmentedSolution(unordered_word_first(x)),
    next=lambda x, aug: AugmentedSolution(unordered_word_next(x, aug.solution)),
    checker=lambda inst, w: _at_least(_rank_of(inst))(inst, w),
    size=lambda inst: inst.n,
    length=lambda inst: inst.n,
    order="set",
)

__all__ = [
    "EVEN",
    "GrayInstance",
    "LEX",
    "ODD",
    "ORDERED",
    "ORDERED_FROM_RANK",
    "ORDERED_FROM_WORD",
    "UNORDERED_FROM_RANK",
    "UNORDERED_FROM_WORD",
    "gray_rank_from_word",
    "gray_word_from_rank",
    "lex_next",
    "ordered_from_rank_first",
    "ordered_from_word_precompute",
    "ordered_gray_next",
    "unordered_rank_first",
    "unordered_rank_next",
    "unordered_word_first",
    "unordered_word_next",
]
