"""Static bit-sequence primitives: rank, select, succ and pred.

A bit sequence is a Python sequence of 0/1 ints, index 0 first;
``parse_bits``/``format_bits`` convert to the ASCII '0'/'1' form used by
the CLI and by test fixtures.

The index conventions are load-bearing (the navigation formulas in
``louds`` depend on them exactly):

- ``rank(b, i, s)`` takes a 0-based prefix length ``i`` and counts the
  occurrences of ``b`` among the first ``i`` bits; ``i`` past the end
  of the sequence saturates to ``len(s)``.
- ``select(b, i, s)`` returns the position of the ``i``-th occurrence
  of ``b`` counting positions from 1, so ``select(b, i, s) - 1`` is the
  0-based index of that occurrence.  Selecting the 0th occurrence gives
  0, and when fewer than ``i`` occurrences exist the result is
  ``len(s) + 1``.
- ``succ``/``pred`` take a 1-based index and return the 1-based
  position of the next/previous occurrence; both are compositions of
  rank and select.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Bit = int
BitSeq = Sequence[int]

__all__ = [
    "Bit",
    "BitSeq",
    "RankIndex",
    "build_rank_index",
    "format_bits",
    "parse_bits",
    "pred",
    "rank",
    "select",
    "succ",
]


def parse_bits(text: str) -> list[int]:
    """Parse an ASCII bit string; whitespace between groups is ignored."""
    bits = []
    for offset, ch in enumerate(text):
        if ch == "0":
            bits.append(0)
        elif ch == "1":
            bits.append(1)
        elif not ch.isspace():
            raise ValueError(f"invalid bit character {ch!r} at offset {offset}")
    return bits


def format_bits(bits: BitSeq) -> str:
    return "".join("1" if b else "0" for b in bits)


def rank(b: Bit, i: int, s: BitSeq) -> int:
    """Number of positions j < i with s[j] == b."""
    if i < 0:
        raise ValueError("prefix length must be non-negative")
    return s[:i].count(b)


def select(b: Bit, i: int, s: BitSeq) -> int:
    """1-based position of the i-th occurrence of b (see module docs)."""
    if i < 0:
        raise ValueError("occurrence ordinal must be non-negative")
    if i == 0:
        return 0
    remaining = i
    for pos, x in enumerate(s):
        if x == b:
            remaining -= 1
            if remaining == 0:
                return pos + 1
    return len(s) + 1


def succ(b: Bit, s: BitSeq, y: int) -> int:
    """1-based position of the first b at or after 1-based index y."""
    if y < 1:
        raise ValueError("succ indexes from 1")
    return select(b, rank(b, y - 1, s) + 1, s)


def pred(b: Bit, s: BitSeq, y: int) -> int:
    """1-based position of the last b at or before 1-based index y; 0 if none."""
    if y < 1:
        raise ValueError("pred indexes from 1")
    return select(b, rank(b, y, s), s)


@dataclass(frozen=True)
class RankIndex:
    """One-level rank accelerator: cumulative 1-counts at block boundaries.

    Answers exactly like ``rank``, in one table lookup plus a scan of at
    most ``block_size`` bits.
    """

    source: tuple[int, ...]
    block_size: int
    block_counts: tuple[int, ...]

    @property
    def source_length(self) -> int:
        return len(self.source)

    def rank(self, b: Bit, i: int) -> int:
        if i < 0:
            raise ValueError("prefix length must be non-negative")
        i = min(i, len(self.source))
        block = i // self.block_size
        ones = self.block_counts[block] + self.source[block * self.block_size : i].count(1)
        return ones if b == 1 else i - ones


def build_rank_index(s: BitSeq, block_size: int) -> RankIndex:
    if block_size < 1:
        raise ValueError("block_size must be at least 1")
    source = tuple(s)
    counts = [0]
    full_blocks = len(source) // block_size
    for k in range(full_blocks):
        start = k * block_size
        counts.append(counts[-1] + source[start : start + block_size].count(1))
    return RankIndex(source, block_size, tuple(counts))
