"""Patterns: the normal form of LTL(X, and), and a greedy learner for it.

A pattern pins letters at fixed (1-based) positions, e.g. positions
(1, 3) with letters (a, a) is ``a & X X a``.  Its size as a formula is
``last + 2 * (width - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .formula import (
    And, Bottom, Eventually, Formula, Letter, Next, Op, Or, Top, evaluate,
    in_fragment, next_n,
)
from .sample import LearnResult, Sample, as_word, separates

__all__ = [
    "Pattern", "pattern_to_formula", "normalize_to_pattern", "GreedyState",
    "greedy_approx_xand", "learn_greedy_xand", "remove_disjunctions",
]


@dataclass(frozen=True, order=True)
class Pattern:
    positions: tuple
    letters: tuple

    def __post_init__(self):
        pos = tuple(int(p) for p in self.positions)
        lets = tuple(as_word(self.letters))
        if not pos:
            raise ValueError("a pattern needs at least one position")
        if len(pos) != len(lets):
            raise ValueError("positions and letters differ in length")
        if pos[0] < 1 or any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions must be strictly increasing and >= 1, got {pos}")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "letters", lets)

    @property
    def width(self) -> int:
        return len(self.positions)

    @property
    def last(self) -> int:
        return self.positions[-1]

    @property
    def size(self) -> int:
        return self.last + 2 * (self.width - 1)

    def matches(self, word: Sequence[str]) -> bool:
        return len(word) >= self.last and all(
            word[p - 1] == c for p, c in zip(self.positions, self.letters))

    def __str__(self):
        return " ".join(f"{p}:{c}" for p, c in zip(self.positions, self.letters))


def pattern_to_formula(pat: Pattern) -> Formula:
    """Nested form X^(p1-1)(c1 & X^(p2-p1)(c2 & ...))."""
    pos, lets = pat.positions, pat.letters
    phi: Formula = Letter(lets[-1])
    for q in range(len(pos) - 2, -1, -1):
        phi = And(Letter(lets[q]), next_n(pos[q + 1] - pos[q], phi))
    return next_n(pos[0] - 1, phi)


def normalize_to_pattern(phi: Formula) -> Pattern | None:
    """Equivalent pattern of size at most ``phi.size``; ``None`` when ``phi``
    is unsatisfiable (two letters demanded at one position, or ``false``)."""
    if not in_fragment(phi, {Op.X, Op.AND}):
        raise ValueError("normalize_to_pattern expects a formula in LTL(X, and)")
    demands: dict[int, str] = {}
    need_len = 0
    stack = [(phi, 1)]
    while stack:
        node, at = stack.pop()
        t = type(node)
        if t is Letter:
            if demands.setdefault(at, node.name) != node.name:
                return None
        elif t is Next:
            stack.append((node.child, at + 1))
        elif t is And:
            stack.append((node.right, at))
            stack.append((node.left, at))
        elif t is Bottom:
            return None
        elif t is Top:
            need_len = max(need_len, at)
        else:  # pragma: no cover - excluded by the fragment check
            raise ValueError(f"unexpected node {t.__name__}")
    if not demands:
        raise ValueError("a formula without letters has no pattern form")
    pos = tuple(sorted(demands))
    if need_len > pos[-1]:
        raise ValueError("X^k true beyond the last letter has no pattern form")
    return Pattern(pos, tuple(demands[p] for p in pos))


@dataclass
class GreedyState:
    """Book-keeping of one greedy run.

    ``agree`` lists the positions where all positives carry the same letter
    (``letter[i]``); ``kills[i]`` are the negatives a letter demand at ``i``
    rejects.  ``covered`` always equals the union of ``kills`` over ``chosen``.
    """

    agree: list
    letter: dict
    kills: dict
    n: int
    chosen: list = field(default_factory=list)
    covered: set = field(default_factory=set)
    history: list = field(default_factory=list)

    @classmethod
    def from_sample(cls, sample: Sample) -> "GreedyState":
        P, N = sample.P, sample.N
        m = min(len(u) for u in P)
        agree, letter, kills = [], {}, {}
        for i in range(1, m + 1):
            c = P[0][i - 1]
            if all(u[i - 1] == c for u in P):
                agree.append(i)
                letter[i] = c
                kills[i] = frozenset(j for j, v in enumerate(N) if len(v) < i or v[i - 1] != c)
        return cls(agree, letter, kills, len(N))

    def reset(self):
        self.chosen = []
        self.covered = set()
        self.history = []

    def add(self, i: int):
        self.chosen.append(i)
        self.covered |= self.kills[i]
        self.history.append(len(self.covered))
        assert self.covered == set().union(*(self.kills[j] for j in self.chosen))

    def run(self, last: int) -> Pattern | None:
        """Greedy cover using ``last`` plus positions before it."""
        self.reset()
        self.add(last)
        pool = [i for i in self.agree if i < last]
        while len(self.covered) < self.n:
            best, gain = None, 0
            for i in pool:
                g = len(self.kills[i] - self.covered)
                if g > gain:
                    best, gain = i, g
            if best is None:
                return None
            self.add(best)
            pool.remove(best)
        pos = tuple(sorted(self.chosen))
        return Pattern(pos, tuple(self.letter[p] for p in pos))


def greedy_approx_xand(sample: Sample) -> Pattern | None:
    """Greedy set-cover approximation of the smallest separating pattern.

    Returns ``None`` exactly when no LTL(X, and) formula separates the
    sample.  Needs at least one positive word.
    """
    if not sample.P:
        raise ValueError("greedy_approx_xand needs at least one positive word")
    st = GreedyState.from_sample(sample)
    if not st.agree:
        return None
    if not sample.N:
        i = st.agree[0]
        return Pattern((i,), (st.letter[i],))
    best = None
    for last in st.agree:
        pat = st.run(last)
        if pat is not None and (best is None or pat.size < best.size):
            best = pat
    return best


def learn_greedy_xand(sample: Sample) -> LearnResult:
    if not sample.P:
        raise ValueError("greedy learning needs at least one positive word")
    pat = greedy_approx_xand(sample)
    if pat is None:
        return LearnResult.no_separator("greedy-xand")
    phi = pattern_to_formula(pat)
    assert separates(phi, sample)
    return LearnResult.found(phi, "greedy-xand")


def remove_disjunctions(phi: Formula, sample: Sample) -> Formula:
    """A disjunction-free separator no larger than ``phi``.

    For one positive word the disjunctions are dead weight: follow the
    disjunct that the positive satisfies, and split the negatives among
    conjuncts by which one rejects them.  F is kept (the positive's first
    witness position is followed).
    """
    if len(sample.P) != 1:
        raise ValueError("remove_disjunctions needs exactly one positive word")
    if not in_fragment(phi, {Op.X, Op.F, Op.AND, Op.OR}):
        raise ValueError("remove_disjunctions handles LTL(F, X, and, or)")
    if not separates(phi, sample):
        raise ValueError("formula does not separate the sample")
    u = sample.P[0]

    def pick(f: Formula, p: int, negs: list) -> Formula:
        t = type(f)
        if t is And:
            left = [(v, j) for v, j in negs if not evaluate(f.left, v, j)]
            right = [(v, j) for v, j in negs if evaluate(f.left, v, j)]
            return And(pick(f.left, p, left), pick(f.right, p, right))
        if t is Or:
            side = f.left if evaluate(f.left, u, p) else f.right
            return pick(side, p, negs)
        if t is Next:
            return Next(pick(f.child, p + 1, [(v, j + 1) for v, j in negs if j + 1 < len(v)]))
        if t is Eventually:
            q = next(q for q in range(p, len(u)) if evaluate(f.child, u, q))
            return Eventually(pick(f.child, q, [(v, k) for v, j in negs for k in range(j, len(v))]))
        return f

    psi = pick(phi, 0, [(v, 0) for v in sample.N])
    assert psi.size <= phi.size and separates(psi, sample)
    return psi
