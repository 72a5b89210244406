"""LTL(F, and): fatterns, the subword characterization, forest formulas.

A formula of LTL(F, and) says two things about a word z: some fixed
non-repeating words are subwords of z, and (optionally) z starts with a
given letter.  ``characterize_Fand`` computes that pair; ``forest_formula``
turns it back into a formula, sharing common prefixes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .formula import (
    And, Bottom, Eventually, Formula, Globally, Letter, Op, Top, FALSE, TRUE,
    conjunction, evaluate, in_fragment,
)
from .sample import (
    LearnResult, Sample, as_word, collapse_runs, common_weak_subword_avoiding,
    is_non_repeating, is_subword, is_weak_subword, separates, word_text,
)

__all__ = [
    "Fattern", "fattern_of", "FandCharacterization", "characterize_Fand",
    "forest_formula", "prefix_forest", "shrink_chain", "FatternConjunction",
    "normalize_Fand", "normalize_Fand_single_positive", "learn_Fand_heuristic",
]


@dataclass(frozen=True)
class Fattern:
    """Nested-F formula of a non-repeating word.

    Ungrounded: ``F(w1 & F(w2 & ... F wk))``, size ``3k - 1``.
    Grounded: ``w1 & F(w2 & ... F wk)``, size ``3k - 2``; the word must
    start with ``w1``.
    """

    word: tuple
    grounded: bool = False

    def __post_init__(self):
        w = as_word(self.word)
        if not w:
            raise ValueError("a fattern needs a non-empty word")
        if not is_non_repeating(w):
            raise ValueError(f"fattern word {word_text(w)!r} repeats a letter")
        object.__setattr__(self, "word", w)

    @property
    def size(self) -> int:
        return 3 * len(self.word) - (2 if self.grounded else 1)

    @property
    def formula(self) -> Formula:
        w = self.word
        phi: Formula = Eventually(Letter(w[-1]))
        for c in reversed(w[1:-1]):
            phi = Eventually(And(Letter(c), phi))
        if len(w) == 1:
            return Letter(w[0]) if self.grounded else phi
        head = And(Letter(w[0]), phi)
        return head if self.grounded else Eventually(head)

    def matches(self, z: Sequence[str]) -> bool:
        if self.grounded:
            return bool(z) and z[0] == self.word[0] and is_subword(self.word[1:], z[1:])
        return is_weak_subword(self.word, z)


def fattern_of(w, grounded: bool = False) -> Fattern:
    return Fattern(as_word(w), grounded)


@dataclass(frozen=True)
class FandCharacterization:
    """``z`` is accepted iff every word of ``words`` is a subword of ``z``
    and ``z`` starts with ``initial`` (when set).  ``unsat`` marks the
    unsatisfiable formula."""

    words: tuple = ()
    initial: str | None = None
    unsat: bool = False

    def accepts(self, z: Sequence[str]) -> bool:
        if self.unsat:
            return False
        if self.initial is not None and z[0] != self.initial:
            return False
        return all(is_subword(w, z) for w in self.words)

    def reduced(self) -> "FandCharacterization":
        """Canonical shape: with an initial letter c, a word c w is the same
        demand as w; words contained in other words are dropped."""
        if self.unsat:
            return self
        ws = set()
        for w in self.words:
            if self.initial is not None and w and w[0] == self.initial:
                w = w[1:]
            if w:
                ws.add(w)
        keep = [w for w in ws if not any(w != x and is_subword(w, x) for x in ws)]
        return FandCharacterization(tuple(sorted(keep)), self.initial)

    @property
    def total_length(self) -> int:
        return sum(len(w) for w in self.words)


_UNSAT = FandCharacterization(unsat=True)


def characterize_Fand(phi: Formula) -> FandCharacterization:
    if not in_fragment(phi, {Op.F, Op.AND}):
        raise ValueError("characterize_Fand expects a formula in LTL(F, and)")
    return _char(phi).reduced()


def _char(phi: Formula) -> FandCharacterization:
    t = type(phi)
    if t is Top:
        return FandCharacterization()
    if t is Bottom:
        return _UNSAT
    if t is Letter:
        return FandCharacterization((), phi.name)
    if t is And:
        a, b = _char(phi.left), _char(phi.right)
        if a.unsat or b.unsat:
            return _UNSAT
        if a.initial is not None and b.initial is not None and a.initial != b.initial:
            return _UNSAT
        init = a.initial if a.initial is not None else b.initial
        return FandCharacterization(a.words + b.words, init).reduced()
    if t is Eventually:
        a = _char(phi.child)
        if a.unsat or a.initial is None:
            return a
        c = a.initial
        # take the first c of z: the suffix from there is the best witness
        words = tuple(collapse_runs((c,) + w) for w in a.words) or ((c,),)
        return FandCharacterization(words).reduced()
    raise ValueError(f"unexpected node {t.__name__}")


def prefix_forest(words) -> dict:
    """Trie of the words as nested dicts letter -> subtrie, insertion ordered."""
    root: dict = {}
    for w in words:
        node = root
        for c in w:
            node = node.setdefault(c, {})
    return root


def _forest_parts(trie: dict) -> list[Formula]:
    out = []
    for c, sub in trie.items():
        body = conjunction([Letter(c)] + _forest_parts(sub))
        out.append(Eventually(body))
    return out


def forest_formula(words, initial: str | None = None) -> Formula:
    """Formula whose characterization is ``(words, initial)``.

    Each trie node ``t`` labelled ``c`` becomes ``F(c & children)``; the
    initial letter, if any, is conjoined in front.
    """
    ws = [as_word(w) for w in words]
    for w in ws:
        if not w or not is_non_repeating(w):
            raise ValueError(f"forest words must be non-empty and non-repeating, got {word_text(w)!r}")
    parts = _forest_parts(prefix_forest(ws))
    if initial is not None:
        parts.insert(0, Letter(initial))
    return conjunction(parts)


def shrink_chain(chain: Sequence[Formula], v, mode: str = "F") -> list[int]:
    """Indices (0-based) of a short subchain.

    ``mode="F"``: ``v`` falsifies F(p1 & F(p2 & ... F pr)); the returned
    subchain is still falsified and is implied by the full chain.
    ``mode="G"``: ``v`` satisfies G(p1 | G(p2 | ... G pr)); the subchain is
    still satisfied and implies the full chain.  At most ``|v|`` indices.

    The scan keeps, for each prefix of the chain, the leftmost position of
    ``v`` where it can still be matched, and records the indices where that
    position moves.
    """
    v = as_word(v)
    if mode not in ("F", "G"):
        raise ValueError("mode must be 'F' or 'G'")
    want = mode == "F"

    def holds(i, q):
        return evaluate(chain[i], v, q) == want

    n = len(v)
    p = 0
    keep = []
    for i in range(len(chain)):
        q = p
        while q < n and not holds(i, q):
            q += 1
        if q > p:
            keep.append(i)
            p = q
        if p == n:
            break
    if p < n:
        raise ValueError("precondition violated: the word does not "
                         + ("falsify the F-chain" if want else "satisfy the G-chain"))
    return keep


@dataclass(frozen=True)
class FatternConjunction:
    """Conjunction of ungrounded fatterns plus an optional initial letter."""

    fatterns: tuple
    initial: str | None = None

    @property
    def formula(self) -> Formula:
        parts = [Letter(self.initial)] if self.initial is not None else []
        parts += [f.formula for f in self.fatterns]
        return conjunction(parts)

    @property
    def size(self) -> int:
        return self.formula.size


def _check_fand(phi: Formula, sample: Sample):
    if not in_fragment(phi, {Op.F, Op.AND}):
        raise ValueError("expected a formula in LTL(F, and)")
    if not separates(phi, sample):
        raise ValueError("formula does not separate the sample")


def normalize_Fand(phi: Formula, sample: Sample) -> FatternConjunction:
    """At most |N| fatterns (plus an initial letter) that still separate."""
    _check_fand(phi, sample)
    ch = characterize_Fand(phi)
    if ch.unsat:
        # only possible without positives; false itself is not a fattern
        raise ValueError("unsatisfiable formula has no fattern form")
    need_initial = False
    picked: list = []
    for v in sample.N:
        if ch.initial is not None and v[0] != ch.initial:
            need_initial = True
            continue
        w = next(w for w in ch.words if not is_subword(w, v))
        if w not in picked:
            picked.append(w)
    out = FatternConjunction(tuple(Fattern(w) for w in picked),
                             ch.initial if need_initial else None)
    assert len(out.fatterns) <= len(sample.N)
    assert separates(out.formula, sample)
    return out


def normalize_Fand_single_positive(phi: Formula, sample: Sample) -> Fattern:
    """One fattern, no larger than ``phi``, that still separates.

    Embed every characterizing word leftmost into the positive word and
    read off the letters at all used positions.
    """
    if len(sample.P) != 1:
        raise ValueError("exactly one positive word is required")
    _check_fand(phi, sample)
    u = sample.P[0]
    ch = characterize_Fand(phi)
    used = set()
    if ch.initial is not None:
        used.add(0)
    for w in ch.words:
        q = 0
        for c in w:
            while u[q] != c:
                q += 1
            used.add(q)
            q += 1
    if not used:
        raise ValueError("a formula equivalent to true has no fattern form")
    word = collapse_runs([u[q] for q in sorted(used)])
    fat = Fattern(word, grounded=ch.initial is not None)
    assert fat.size <= phi.size and separates(fat.formula, sample)
    return fat


def learn_Fand_heuristic(sample: Sample) -> LearnResult:
    """A separator in LTL(F, and), or a proof that none exists.

    Negatives that do not start with the positives' common first letter
    are rejected by that letter; every other negative gets the shortest
    common weak subword of the positives that it avoids.
    """
    if not sample.N:
        return LearnResult.found(TRUE, "fattern")
    if not sample.P:
        return LearnResult.found(FALSE, "fattern")
    firsts = {u[0] for u in sample.P}
    initial = next(iter(firsts)) if len(firsts) == 1 else None
    need_initial = False
    picked: list = []
    for v in sample.N:
        if initial is not None and v[0] != initial:
            need_initial = True
            continue
        w = common_weak_subword_avoiding(sample.P, v)
        if w is None:
            return LearnResult.no_separator("fattern")
        w = collapse_runs(w)
        if w not in picked:
            picked.append(w)
    out = FatternConjunction(tuple(Fattern(w) for w in picked),
                             initial if need_initial else None)
    phi = out.formula
    assert separates(phi, sample)
    return LearnResult.found(phi, "fattern")
