"""Samples of positive and negative words, learning results, subword helpers."""
from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .formula import Formula
from .semantics import TraceBatch

__all__ = [
    "Word", "as_word", "Sample", "Status", "LearnResult", "SampleError",
    "separates", "is_subword", "is_weak_subword", "is_non_repeating",
    "collapse_runs", "common_weak_subword_avoiding", "load_sample",
    "save_sample", "parse_sample_text", "format_sample_text", "word_text",
]

Word = tuple


class SampleError(ValueError):
    """Malformed or inconsistent sample."""


def as_word(w) -> tuple:
    """Strings are split into characters; sequences are taken as letter tokens."""
    if isinstance(w, str):
        return tuple(w)
    out = tuple(w)
    for c in out:
        if not isinstance(c, str) or not c:
            raise SampleError(f"letters must be non-empty strings, got {c!r}")
    return out


def word_text(w: Sequence[str]) -> str:
    """Compact display: concatenate single-character letters, else space-separate."""
    if all(len(c) == 1 for c in w):
        return "".join(w)
    return " ".join(w)


def _dedup(words):
    seen = set()
    out = []
    for w in words:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class Sample:
    """Positive and negative words over an alphabet.

    ``positive`` and ``negative`` keep duplicates as given; ``P`` and ``N``
    are the deduplicated views the learners work with.
    """

    positive: tuple
    negative: tuple
    alphabet: tuple = None
    P: tuple = field(init=False, repr=False, compare=False)
    N: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = tuple(as_word(w) for w in self.positive)
        neg = tuple(as_word(w) for w in self.negative)
        for w in pos + neg:
            if not w:
                raise SampleError("empty words are not allowed")
        if self.alphabet is None:
            alpha = tuple(sorted({c for w in pos + neg for c in w}))
        else:
            alpha = tuple(dict.fromkeys(as_word(self.alphabet)))
            known = set(alpha)
            for w in pos + neg:
                for c in w:
                    if c not in known:
                        raise SampleError(f"letter {c!r} of word {word_text(w)!r} is not in the alphabet")
        shared = set(pos) & set(neg)
        if shared:
            w = sorted(shared)[0]
            raise SampleError(f"word {word_text(w)!r} is both positive and negative")
        object.__setattr__(self, "positive", pos)
        object.__setattr__(self, "negative", neg)
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "P", _dedup(pos))
        object.__setattr__(self, "N", _dedup(neg))

    @property
    def words(self) -> tuple:
        return self.P + self.N

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def swapped(self) -> "Sample":
        return Sample(self.negative, self.positive, self.alphabet)

    def batch(self) -> TraceBatch:
        return TraceBatch(self.words)

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "positive": [list(w) for w in self.positive],
            "negative": [list(w) for w in self.negative],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Sample":
        if not isinstance(data, dict):
            raise SampleError("sample must be a JSON object")
        for key in ("positive", "negative"):
            if key not in data or not isinstance(data[key], list):
                raise SampleError(f"sample needs a list field {key!r}")
        alphabet = data.get("alphabet")
        if alphabet is not None and not isinstance(alphabet, list):
            raise SampleError("'alphabet' must be a list")
        for key in ("positive", "negative"):
            for w in data[key]:
                if not isinstance(w, (list, str)):
                    raise SampleError(f"words must be lists of letters, got {w!r}")
        return cls(tuple(data["positive"]), tuple(data["negative"]),
                   None if alphabet is None else tuple(alphabet))


class Status(enum.Enum):
    FOUND = "found"
    NO_SEPARATOR = "no-separator"
    NONE_WITHIN_BOUND = "none-within-bound"


@dataclass(frozen=True)
class LearnResult:
    status: Status
    formula: Formula | None = None
    bound: int | None = None
    method: str = ""

    @classmethod
    def found(cls, formula: Formula, method: str = "") -> "LearnResult":
        return cls(Status.FOUND, formula, None, method)

    @classmethod
    def no_separator(cls, method: str = "") -> "LearnResult":
        return cls(Status.NO_SEPARATOR, None, None, method)

    @classmethod
    def none_within(cls, bound: int, method: str = "") -> "LearnResult":
        return cls(Status.NONE_WITHIN_BOUND, None, bound, method)

    @property
    def is_found(self) -> bool:
        return self.status is Status.FOUND

    @property
    def size(self) -> int | None:
        return None if self.formula is None else self.formula.size

    def to_dict(self) -> dict:
        d = {"status": self.status.value, "method": self.method}
        if self.formula is not None:
            d["formula"] = str(self.formula)
            d["size"] = self.formula.size
        if self.bound is not None:
            d["bound"] = self.bound
        return d


def separates(phi: Formula, sample: Sample) -> bool:
    batch = sample.batch()
    t = batch.table(phi)
    np_ = len(sample.P)
    pf = batch.first_mask(range(np_))
    nf = batch.first_mask(range(np_, len(batch.words)))
    return (t & pf) == pf and (t & nf) == 0


def is_subword(u: Sequence, w: Sequence) -> bool:
    """Strictly increasing embedding of ``u`` into ``w``."""
    it = iter(w)
    return all(c in it for c in u)


def is_weak_subword(u: Sequence, w: Sequence) -> bool:
    """Weakly increasing embedding: a position of ``w`` may be reused."""
    p, n = 0, len(w)
    for c in u:
        while p < n and w[p] != c:
            p += 1
        if p == n:
            return False
    return True


def is_non_repeating(u: Sequence) -> bool:
    return all(u[i] != u[i + 1] for i in range(len(u) - 1))


def collapse_runs(u: Sequence) -> tuple:
    out = []
    for c in u:
        if not out or out[-1] != c:
            out.append(c)
    return tuple(out)


def _advance(word, cursor, c):
    # weak embedding cursor: next match may reuse the current position
    for p in range(cursor, len(word)):
        if word[p] == c:
            return p
    return None


def common_weak_subword_avoiding(P: Iterable, v: Sequence) -> tuple | None:
    """Shortest, then lexicographically smallest, weak subword of every word
    of ``P`` that is not a weak subword of ``v``; ``None`` if there is none.

    Breadth-first search over one greedy cursor per word of ``P`` plus one in
    ``v``, so the state space is the product of the word lengths.
    """
    P = [as_word(u) for u in P]
    v = as_word(v)
    if not P:
        raise ValueError("P must be non-empty")
    common = set(P[0])
    for u in P[1:]:
        common &= set(u)
    letters = sorted(common)
    start = (tuple(0 for _ in P), 0)
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (cur, vc), word = queue.popleft()
        for c in letters:
            nxt = tuple(_advance(u, p, c) for u, p in zip(P, cur))
            if None in nxt:
                continue
            nv = _advance(v, vc, c)
            w2 = word + (c,)
            if nv is None:
                return w2
            state = (nxt, nv)
            if state not in seen:
                seen.add(state)
                queue.append((state, w2))
    return None


# file formats -------------------------------------------------------------

def parse_sample_text(text: str) -> Sample:
    """Line format: ``+`` / ``-`` start a section, one word per line with
    space-separated letters, ``#`` comments, optional ``alphabet: a b c``."""
    section = None
    pos: list = []
    neg: list = []
    alphabet = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("+", "-"):
            section = line
            continue
        if line.startswith("alphabet:"):
            alphabet = tuple(line[len("alphabet:"):].split())
            continue
        if section is None:
            raise SampleError(f"line {lineno}: word outside a '+' or '-' section")
        (pos if section == "+" else neg).append(tuple(line.split()))
    return Sample(tuple(pos), tuple(neg), alphabet)


def format_sample_text(sample: Sample) -> str:
    lines = ["alphabet: " + " ".join(sample.alphabet), "+"]
    lines += [" ".join(w) for w in sample.positive]
    lines.append("-")
    lines += [" ".join(w) for w in sample.negative]
    return "\n".join(lines) + "\n"


def load_sample(path) -> Sample:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SampleError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if path.suffix == ".json" or stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SampleError(f"{path}: invalid JSON: {exc}") from exc
        return Sample.from_dict(data)
    return parse_sample_text(text)


def save_sample(sample: Sample, path) -> None:
    path = Path(path)
    if path.suffix == ".txt":
        path.write_text(format_sample_text(sample), encoding="utf-8")
    else:
        path.write_text(json.dumps(sample.to_dict()) + "\n", encoding="utf-8")
