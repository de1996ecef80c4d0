"""Packed binary strings and the palindromic id encoding.

Positions are 1-indexed throughout.  Internally a string of length ``n`` is a
Python int whose most significant of ``n`` bits is position 1, so the
positionwise checks reduce to a couple of big-int operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class Mode(enum.Enum):
    DOMINATION = "SC"
    ORTHOGONALITY = "OVC"


class Op(enum.Enum):
    COMPLEMENT = "complement"
    REVERSE = "reverse"


@dataclass(frozen=True)
class BitString:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value does not fit in length")

    @classmethod
    def from_str(cls, text: str) -> BitString:
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitString:
        bits = list(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        return cls.from_str("".join(map(str, bits)))

    @classmethod
    def zeros(cls, n: int) -> BitString:
        return cls(0, n)

    @classmethod
    def ones(cls, n: int) -> BitString:
        return cls((1 << n) - 1, n)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, "b").zfill(self.length) if self.length else ""

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __iter__(self) -> Iterator[int]:
        return (int(ch) for ch in str(self))

    def at(self, i: int) -> int:
        """Character at 1-indexed position ``i``."""
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside 1..{self.length}")
        return (self.value >> (self.length - i)) & 1

    def __add__(self, other: BitString) -> BitString:
        return BitString((self.value << other.length) | other.value,
                         self.length + other.length)

    def __mul__(self, k: int) -> BitString:
        return concat([self] * k)

    def slice(self, start: int, length: int) -> BitString:
        """Substring of ``length`` characters starting at 1-indexed ``start``."""
        if start < 1 or length < 0 or start - 1 + length > self.length:
            raise IndexError("slice out of range")
        shift = self.length - (start - 1) - length
        return BitString((self.value >> shift) & ((1 << length) - 1), length)

    def count_ones(self) -> int:
        return bin(self.value).count("1")

    @property
    def mask(self) -> int:
        return (1 << self.length) - 1


def concat(parts: Iterable[BitString]) -> BitString:
    value, length = 0, 0
    for p in parts:
        value = (value << p.length) | p.value
        length += p.length
    return BitString(value, length)


def complement(s: BitString) -> BitString:
    return BitString(s.value ^ s.mask, s.length)


def reverse(s: BitString) -> BitString:
    return BitString.from_str(str(s)[::-1])


def transform(s: BitString, op: Op) -> BitString:
    if op is Op.COMPLEMENT:
        return complement(s)
    if op is Op.REVERSE:
        return reverse(s)
    raise ValueError(f"unknown op {op!r}")


def is_palindrome(s: BitString) -> bool:
    return s == reverse(s)


def nb(i: int, q: int) -> BitString:
    """Fixed-width MSB-first q-bit encoding of ``i - 1``."""
    if not 1 <= i <= (1 << q):
        raise ValueError(f"index {i} out of range for width {q}")
    return BitString(i - 1, q)


def id_encode(i: int, q: int) -> BitString:
    """``1 . nb . ~nb . reverse(~nb) . reverse(nb) . 1``, length 4q+2."""
    b = nb(i, q)
    nb_bar = complement(b)
    one = BitString(1, 1)
    return concat([one, b, nb_bar, reverse(nb_bar), reverse(b), one])


def check_pair(s: BitString, t: BitString, mode: Mode) -> bool:
    if s.length != t.length:
        raise ValueError(f"length mismatch: {s.length} != {t.length}")
    if mode is Mode.DOMINATION:
        return t.value & ~s.value == 0
    if mode is Mode.ORTHOGONALITY:
        return s.value & t.value == 0
    raise ValueError(f"unknown mode {mode!r}")
