"""Input checking shared by the estimators and the CLI."""
from __future__ import annotations

import numpy as np

from .formula import Formula, Op, parse_operators
from .sample import SampleError, as_word
from .syntax import parse

__all__ = ["check_words", "check_labels", "check_fragment", "check_formulas"]


def check_words(X) -> list[tuple]:
    """Words as tuples of letters.

    Accepts a list of strings (one letter per character), a list of letter
    sequences, or a 2-D array whose rows are equal-length words.
    """
    if isinstance(X, str):
        raise SampleError("expected a collection of words, got a single string")
    if isinstance(X, np.ndarray) and X.ndim == 2:
        rows = [[str(c) for c in row] for row in X]
    else:
        try:
            rows = list(X)
        except TypeError:
            raise SampleError(f"expected a collection of words, got {type(X).__name__}") from None
    words = []
    for w in rows:
        if isinstance(w, np.ndarray):
            w = [str(c) for c in w]
        word = as_word(w)
        if not word:
            raise SampleError("empty words are not allowed")
        words.append(word)
    return words


def check_labels(y, n: int):
    """Binary labels; returns ``(classes, mask)`` with mask True for the
    positive class (the larger label)."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise ValueError(f"labels must be one-dimensional, got shape {y.shape}")
    if len(y) != n:
        raise ValueError(f"{n} words but {len(y)} labels")
    classes = np.unique(y)
    if len(classes) > 2:
        raise ValueError(f"binary labels expected, got {len(classes)} classes")
    if len(classes) == 0:
        raise ValueError("no labels given")
    return classes, y == classes[-1]


def check_fragment(ops) -> frozenset:
    if isinstance(ops, frozenset) and all(isinstance(o, Op) for o in ops):
        return ops
    return parse_operators(ops)


def check_formulas(formulas) -> list[Formula]:
    out = []
    for f in formulas:
        if isinstance(f, Formula):
            out.append(f)
        elif isinstance(f, str):
            out.append(parse(f))
        else:
            raise TypeError(f"expected a formula or its text, got {type(f).__name__}")
    return out
