"""Random and exhaustive generators shared by the tests."""
from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from ltlearn.formula import (
    FALSE, TRUE, And, Eventually, Globally, Letter, NegLetter, Next, Op, Or, Until,
)

_UNARY = {Op.X: Next, Op.F: Eventually, Op.G: Globally}
_BINARY = {Op.AND: And, Op.OR: Or, Op.U: Until}


def all_words(alphabet, max_len, min_len=1):
    return [w for n in range(min_len, max_len + 1) for w in itertools.product(alphabet, repeat=n)]


def random_word(rng: random.Random, alphabet, max_len, min_len=1):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))


def random_formula(rng: random.Random, size: int, letters, ops, constants=False):
    """A formula of exactly ``size`` nodes when possible, else the largest
    smaller one the operator set allows."""
    unary = [_UNARY[o] for o in ops if o in _UNARY]
    binary = [_BINARY[o] for o in ops if o in _BINARY]
    neg = Op.NOT in ops

    def leaf():
        if constants and rng.random() < 0.1:
            return rng.choice((TRUE, FALSE))
        return Letter(rng.choice(letters))

    def gen(n):
        choices = []
        if n == 1:
            return leaf()
        if n == 2 and neg:
            choices.append("neg")
        if unary:
            choices.append("unary")
        if binary and n >= 3:
            choices.append("binary")
        if not choices:
            return gen(n - 1)
        kind = rng.choice(choices)
        if kind == "neg":
            return NegLetter(rng.choice(letters))
        if kind == "unary":
            return rng.choice(unary)(gen(n - 1))
        left = rng.randint(1, n - 2)
        return rng.choice(binary)(gen(left), gen(n - 1 - left))

    return gen(size)


def formulas(letters=("a", "b", "c"), ops=(Op.X, Op.F, Op.G, Op.AND, Op.OR),
             max_leaves=6, neg=False, constants=False):
    """Hypothesis strategy for formulas over the given operators."""
    leaves = [st.sampled_from([Letter(c) for c in letters])]
    if neg:
        leaves.append(st.sampled_from([NegLetter(c) for c in letters]))
    if constants:
        leaves.append(st.sampled_from([TRUE, FALSE]))
    leaf = st.one_of(*leaves)

    def extend(inner):
        parts = [st.builds(_UNARY[o], inner) for o in ops if o in _UNARY]
        parts += [st.builds(_BINARY[o], inner, inner) for o in ops if o in _BINARY]
        return st.one_of(*parts)

    return st.recursive(leaf, extend, max_leaves=max_leaves)


def words(alphabet=("a", "b", "c"), max_len=6):
    return st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_len).map(tuple)
