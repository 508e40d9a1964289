"""Fixed-length binary words.

A word is stored as an integer plus a length.  Printed form puts the most
significant bit first, so index 1 (leftmost, vertex/variable 1) is bit
``length - 1`` of the integer and Gray position 0 is bit 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, slots=True)
class BitWord:
    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative word length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitWord:
        text = text.strip()
        if any(c not in "01" for c in text):
            raise ValueError(f"not a binary word: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitWord:
        value = 0
        length = 0
        for b in bits:
            value = (value << 1) | (1 if b else 0)
            length += 1
        return cls(value, length)

    @classmethod
    def zeros(cls, length: int) -> BitWord:
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> BitWord:
        return cls((1 << length) - 1, length)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        for shift in range(self.length - 1, -1, -1):
            yield (self.value >> shift) & 1

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def at(self, index: int) -> int:
        """Bit at 1-based index counted from the left."""
        if not 1 <= index <= self.length:
            raise IndexError(index)
        return (self.value >> (self.length - index)) & 1

    def position(self, pos: int) -> int:
        """Bit at 0-based position counted from the right."""
        if not 0 <= pos < self.length:
            raise IndexError(pos)
        return (self.value >> pos) & 1

    def flip_position(self, pos: int) -> BitWord:
        if not 0 <= pos < self.length:
            raise IndexError(pos)
        return BitWord(self.value ^ (1 << pos), self.length)

    def complement(self) -> BitWord:
        return BitWord(self.value ^ ((1 << self.length) - 1), self.length)

    def popcount(self) -> int:
        return bin(self.value).count("1")

    def hamming(self, other: BitWord) -> int:
        if other.length != self.length:
            raise ValueError("length mismatch")
        return bin(self.value ^ other.value).count("1")

    def concat(self, other: BitWord) -> BitWord:
        return BitWord((self.value << other.length) | other.value, self.length + other.length)

    def split(self, head: int) -> tuple[BitWord, BitWord]:
        """Cut into the first ``head`` bits and the remainder."""
        if not 0 <= head <= self.length:
            raise ValueError("split point out of range")
        tail = self.length - head
        return BitWord(self.value >> tail, head), BitWord(self.value & ((1 << tail) - 1), tail)


EMPTY = BitWord(0, 0)


def mask_to_word(mask: int, n: int) -> BitWord:
    """Subset bitmask (bit ``i-1`` set for element ``i``) to a word with element 1 leftmost."""
    value = 0
    for i in range(n):
        if mask >> i & 1:
            value |= 1 << (n - 1 - i)
    return BitWord(value, n)


def word_to_mask(word: BitWord) -> int:
    mask = 0
    n = word.length
    for i in range(n):
        if word.value >> (n - 1 - i) & 1:
            mask |= 1 << i
    return mask
