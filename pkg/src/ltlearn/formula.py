"""Formula trees for LTL over finite words, in negation normal form.

Nodes are immutable and compare structurally.  They are also totally
ordered: first by size, then by operator rank, then by children (left
first) or letter name.  Every learner that returns "the" minimal formula
uses this order to break ties.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Formula", "Top", "Bottom", "Letter", "NegLetter", "Next", "Eventually",
    "Globally", "Until", "And", "Or", "TRUE", "FALSE", "Op", "OperatorSet",
    "parse_operators", "operators_of", "in_fragment", "formula_size",
    "dualize", "evaluate", "conjunction", "disjunction", "next_n",
    "UnsupportedOperatorError", "subformulas", "letters_of", "count_nodes",
    "FULL_OPS",
]

# Operator ranks used by the total order.
_RANK = {
    "Top": 0, "Bottom": 1, "Letter": 2, "NegLetter": 3, "Next": 4,
    "Eventually": 5, "Globally": 6, "Until": 7, "And": 8, "Or": 9,
}


class UnsupportedOperatorError(ValueError):
    """Raised when an operation meets an operator it cannot handle."""


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()
    size: int
    _key: tuple
    _hash: int

    def children(self) -> tuple["Formula", ...]:
        return ()

    def _init_cache(self, size: int, key: tuple) -> None:
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Formula):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other: "Formula") -> bool:
        return self._key < other._key

    def __le__(self, other: "Formula") -> bool:
        return self._key <= other._key

    def __gt__(self, other: "Formula") -> bool:
        return self._key > other._key

    def __ge__(self, other: "Formula") -> bool:
        return self._key >= other._key

    @property
    def sort_key(self) -> tuple:
        return self._key

    def __str__(self) -> str:
        from .syntax import format_formula
        return format_formula(self)

    def __repr__(self) -> str:
        return f"Formula({str(self)!r})"

    # operator sugar, handy in tests and notebooks
    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)


def _leaf_key(kind: str, name: str = "") -> tuple:
    size = 2 if kind == "NegLetter" else 1
    return (size, _RANK[kind], name)


@dataclass(frozen=True, eq=False, repr=False)
class Top(Formula):
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        self._init_cache(1, _leaf_key("Top"))


@dataclass(frozen=True, eq=False, repr=False)
class Bottom(Formula):
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        self._init_cache(1, _leaf_key("Bottom"))


@dataclass(frozen=True, eq=False, repr=False)
class Letter(Formula):
    name: str
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError(f"letter must be a non-empty string, got {self.name!r}")
        self._init_cache(1, _leaf_key("Letter", self.name))


@dataclass(frozen=True, eq=False, repr=False)
class NegLetter(Formula):
    name: str
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError(f"letter must be a non-empty string, got {self.name!r}")
        self._init_cache(2, _leaf_key("NegLetter", self.name))


class _Unary(Formula):
    __slots__ = ()
    child: Formula

    def children(self):
        return (self.child,)

    def __post_init__(self):
        if not isinstance(self.child, Formula):
            raise TypeError(f"expected a Formula, got {type(self.child).__name__}")
        c = self.child
        size = c.size + 1
        self._init_cache(size, (size, _RANK[type(self).__name__], c._key))


class _Binary(Formula):
    __slots__ = ()
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)

    def __post_init__(self):
        for c in (self.left, self.right):
            if not isinstance(c, Formula):
                raise TypeError(f"expected a Formula, got {type(c).__name__}")
        size = self.left.size + self.right.size + 1
        key = (size, _RANK[type(self).__name__], self.left._key, self.right._key)
        self._init_cache(size, key)


@dataclass(frozen=True, eq=False, repr=False)
class Next(_Unary):
    child: Formula
    size: int = field(init=False, compare=False)


@dataclass(frozen=True, eq=False, repr=False)
class Eventually(_Unary):
    child: Formula
    size: int = field(init=False, compare=False)


@dataclass(frozen=True, eq=False, repr=False)
class Globally(_Unary):
    child: Formula
    size: int = field(init=False, compare=False)


@dataclass(frozen=True, eq=False, repr=False)
class Until(_Binary):
    left: Formula
    right: Formula
    size: int = field(init=False, compare=False)


@dataclass(frozen=True, eq=False, repr=False)
class And(_Binary):
    left: Formula
    right: Formula
    size: int = field(init=False, compare=False)


@dataclass(frozen=True, eq=False, repr=False)
class Or(_Binary):
    left: Formula
    right: Formula
    size: int = field(init=False, compare=False)


TRUE = Top()
FALSE = Bottom()


class Op(enum.Enum):
    U = "U"
    F = "F"
    G = "G"
    X = "X"
    AND = "and"
    OR = "or"
    NOT = "not"

    def __lt__(self, other):
        return _OP_ORDER.index(self) < _OP_ORDER.index(other)


_OP_ORDER = [Op.U, Op.F, Op.G, Op.X, Op.AND, Op.OR, Op.NOT]

OperatorSet = frozenset
FULL_OPS = frozenset({Op.F, Op.G, Op.X, Op.AND, Op.OR})

_OP_TOKENS = {
    "u": Op.U, "until": Op.U,
    "f": Op.F, "g": Op.G, "x": Op.X,
    "and": Op.AND, "&": Op.AND, "∧": Op.AND,
    "or": Op.OR, "|": Op.OR, "∨": Op.OR,
    "not": Op.NOT, "!": Op.NOT, "¬": Op.NOT,
}


def parse_operators(spec: str | Iterable[str | Op]) -> frozenset:
    """Turn ``"F,X,and"`` (or an iterable of tokens / Op members) into an operator set."""
    if isinstance(spec, str):
        tokens: Iterable = [t for t in spec.replace(" ", "").split(",") if t]
    else:
        tokens = spec
    out = set()
    for tok in tokens:
        if isinstance(tok, Op):
            out.add(tok)
            continue
        op = _OP_TOKENS.get(str(tok).strip().lower())
        if op is None:
            raise ValueError(f"unknown operator token {tok!r}")
        out.add(op)
    return frozenset(out)


def format_operators(ops: Iterable[Op]) -> str:
    return ",".join(o.value for o in sorted(ops))


_NODE_OP = {
    Next: Op.X, Eventually: Op.F, Globally: Op.G, Until: Op.U,
    And: Op.AND, Or: Op.OR, NegLetter: Op.NOT,
}


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Pre-order walk; shared subtrees are visited once per occurrence."""
    stack = [phi]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def operators_of(phi: Formula) -> frozenset:
    return frozenset(_NODE_OP[type(n)] for n in subformulas(phi) if type(n) in _NODE_OP)


def in_fragment(phi: Formula, ops: Iterable[Op]) -> bool:
    """True iff every operator of ``phi`` is in ``ops``.  Constants and letters always are."""
    return operators_of(phi) <= frozenset(ops)


def letters_of(phi: Formula) -> frozenset:
    return frozenset(n.name for n in subformulas(phi) if isinstance(n, (Letter, NegLetter)))


def count_nodes(phi: Formula, kind: type) -> int:
    return sum(1 for n in subformulas(phi) if isinstance(n, kind))


def formula_size(phi: Formula) -> int:
    return phi.size


def conjunction(parts: Sequence[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``true``."""
    parts = list(parts)
    return reduce(And, parts) if parts else TRUE


def disjunction(parts: Sequence[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``false``."""
    parts = list(parts)
    return reduce(Or, parts) if parts else FALSE


def next_n(k: int, phi: Formula) -> Formula:
    for _ in range(k):
        phi = Next(phi)
    return phi


def dualize(phi: Formula) -> Formula:
    """Push a negation through ``phi``.  Defined only without X and U."""
    if isinstance(phi, Top):
        return FALSE
    if isinstance(phi, Bottom):
        return TRUE
    if isinstance(phi, Letter):
        return NegLetter(phi.name)
    if isinstance(phi, NegLetter):
        return Letter(phi.name)
    if isinstance(phi, Eventually):
        return Globally(dualize(phi.child))
    if isinstance(phi, Globally):
        return Eventually(dualize(phi.child))
    if isinstance(phi, And):
        return Or(dualize(phi.left), dualize(phi.right))
    if isinstance(phi, Or):
        return And(dualize(phi.left), dualize(phi.right))
    # ¬Xφ is not X¬φ on finite words (the last position falsifies both)
    raise UnsupportedOperatorError(f"cannot dualize {type(phi).__name__} nodes")


def evaluate(phi: Formula, word: Sequence[str], pos: int = 0) -> bool:
    """Does the suffix of ``word`` starting at ``pos`` (0-based) satisfy ``phi``?"""
    n = len(word)
    if n == 0:
        raise ValueError("words must be non-empty")
    if not 0 <= pos < n:
        raise IndexError(f"position {pos} out of range for a word of length {n}")
    memo: dict[tuple[int, int], bool] = {}

    def sat(f: Formula, i: int) -> bool:
        key = (id(f), i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        t = type(f)
        if t is Top:
            r = True
        elif t is Bottom:
            r = False
        elif t is Letter:
            r = word[i] == f.name
        elif t is NegLetter:
            r = word[i] != f.name
        elif t is Next:
            r = i + 1 < n and sat(f.child, i + 1)
        elif t is Eventually:
            r = any(sat(f.child, j) for j in range(i, n))
        elif t is Globally:
            r = all(sat(f.child, j) for j in range(i, n))
        elif t is Until:
            r = False
            for j in range(i, n):
                if sat(f.right, j):
                    r = True
                    break
                if not sat(f.left, j):
                    break
        elif t is And:
            r = sat(f.left, i) and sat(f.right, i)
        elif t is Or:
            r = sat(f.left, i) or sat(f.right, i)
        else:
            raise TypeError(f"unknown node {t.__name__}")
        memo[key] = r
        return r

    return sat(phi, pos)
