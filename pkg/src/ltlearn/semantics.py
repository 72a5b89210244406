"""Bit-parallel semantics tables.

All words of a batch are laid out end to end in one Python int: position
``i`` of word ``j`` is bit ``offset[j] + i``.  A formula's table is then a
single int and every operator is a handful of shifts and masks, so one
combination step costs O(total length / word size).
"""
from __future__ import annotations

from typing import Sequence

from .formula import (
    And, Bottom, Eventually, Formula, Globally, Letter, NegLetter, Next, Or,
    Top, Until,
)

__all__ = ["TraceBatch", "SemanticsTable", "semantics_table"]


class TraceBatch:
    """Masks over a fixed list of non-empty words."""

    def __init__(self, words: Sequence[Sequence[str]]):
        words = [tuple(w) for w in words]
        for w in words:
            if not w:
                raise ValueError("words must be non-empty")
        self.words = words
        self.offsets = []
        total = 0
        for w in words:
            self.offsets.append(total)
            total += len(w)
        self.total = total
        self.full = (1 << total) - 1
        self.max_len = max((len(w) for w in words), default=0)
        first = 0
        for off in self.offsets:
            first |= 1 << off
        self.first = first
        self._letters: dict[str, int] = {}
        for off, w in zip(self.offsets, words):
            for i, c in enumerate(w):
                self._letters[c] = self._letters.get(c, 0) | (1 << (off + i))
        self._shift_masks: dict[int, int] = {}
        self.not_last = self.shift_mask(1)

    def shift_mask(self, s: int) -> int:
        """Positions ``i`` with ``i + s`` still inside the same word."""
        m = self._shift_masks.get(s)
        if m is None:
            m = 0
            for off, w in zip(self.offsets, self.words):
                if len(w) > s:
                    m |= ((1 << (len(w) - s)) - 1) << off
            self._shift_masks[s] = m
        return m

    def first_mask(self, indices) -> int:
        m = 0
        for j in indices:
            m |= 1 << self.offsets[j]
        return m

    # operators on tables ------------------------------------------------
    def letter(self, name: str) -> int:
        return self._letters.get(name, 0)

    def neg_letter(self, name: str) -> int:
        return self.full ^ self._letters.get(name, 0)

    def next(self, t: int) -> int:
        return (t >> 1) & self.not_last

    def eventually(self, t: int) -> int:
        r = t
        s = 1
        while s < self.max_len:
            r |= (r >> s) & self.shift_mask(s)
            s <<= 1
        return r

    def globally(self, t: int) -> int:
        r = t
        s = 1
        while s < self.max_len:
            m = self.shift_mask(s)
            r &= (r >> s) | (self.full ^ m)
            s <<= 1
        return r

    def until(self, a: int, b: int) -> int:
        r = b
        guard = a & self.not_last
        while True:
            nr = b | (guard & (r >> 1))
            if nr == r:
                return r
            r = nr

    def table(self, phi: Formula, memo: dict | None = None) -> int:
        if memo is None:
            memo = {}
        hit = memo.get(phi)
        if hit is not None:
            return hit
        t = type(phi)
        if t is Top:
            r = self.full
        elif t is Bottom:
            r = 0
        elif t is Letter:
            r = self.letter(phi.name)
        elif t is NegLetter:
            r = self.neg_letter(phi.name)
        elif t is Next:
            r = self.next(self.table(phi.child, memo))
        elif t is Eventually:
            r = self.eventually(self.table(phi.child, memo))
        elif t is Globally:
            r = self.globally(self.table(phi.child, memo))
        elif t is Until:
            r = self.until(self.table(phi.left, memo), self.table(phi.right, memo))
        elif t is And:
            r = self.table(phi.left, memo) & self.table(phi.right, memo)
        elif t is Or:
            r = self.table(phi.left, memo) | self.table(phi.right, memo)
        else:
            raise TypeError(f"unknown node {t.__name__}")
        memo[phi] = r
        return r


class SemanticsTable:
    """Satisfaction bits of one formula at every position of every word."""

    __slots__ = ("batch", "bits")

    def __init__(self, batch: TraceBatch, bits: int):
        self.batch = batch
        self.bits = bits

    def bit(self, j: int, i: int) -> bool:
        w = self.batch.words[j]
        if not 0 <= i < len(w):
            raise IndexError(f"position {i} out of range for word {j}")
        return bool((self.bits >> (self.batch.offsets[j] + i)) & 1)

    def row(self, j: int) -> list[int]:
        off = self.batch.offsets[j]
        return [(self.bits >> (off + i)) & 1 for i in range(len(self.batch.words[j]))]

    def rows(self) -> list[list[int]]:
        return [self.row(j) for j in range(len(self.batch.words))]

    def accepts(self, j: int) -> bool:
        return self.bit(j, 0)

    def __eq__(self, other):
        if not isinstance(other, SemanticsTable):
            return NotImplemented
        return self.batch.words == other.batch.words and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"SemanticsTable({self.rows()})"


def semantics_table(phi: Formula, words: Sequence[Sequence[str]] | TraceBatch) -> SemanticsTable:
    batch = words if isinstance(words, TraceBatch) else TraceBatch(words)
    return SemanticsTable(batch, batch.table(phi))
