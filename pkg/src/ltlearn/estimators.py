"""scikit-learn wrappers: a formula classifier and a formula feature map."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dispatch import learn
from .formula import evaluate
from .sample import Sample
from .validation import check_formulas, check_fragment, check_labels, check_words

__all__ = ["LTLClassifier", "SemanticsTransformer", "NotSeparableError"]


class NotSeparableError(ValueError):
    """The training words cannot be separated within the fragment and bound."""


class LTLClassifier(ClassifierMixin, BaseEstimator):
    """Learn a small LTL formula that labels the training words exactly.

    Parameters
    ----------
    fragment : str or set
        Allowed operators, e.g. ``"F,G,X,and,or"``.
    mode : str
        ``auto``, ``exact``, ``minimal``, ``greedy-xand`` or ``fattern``.
    max_size : int or None
        Size bound for the search.
    jobs : int
        Worker processes for the exact search.
    """

    def __init__(self, fragment="F,G,X,and,or", mode="auto", max_size=None, jobs=1):
        self.fragment = fragment
        self.mode = mode
        self.max_size = max_size
        self.jobs = jobs

    def fit(self, X, y):
        words = check_words(X)
        classes, pos = check_labels(y, len(words))
        ops = check_fragment(self.fragment)
        P = [w for w, p in zip(words, pos) if p]
        N = [w for w, p in zip(words, pos) if not p]
        sample = Sample(tuple(P), tuple(N))
        res = learn(sample, ops, self.mode, self.max_size, self.jobs)
        if not res.is_found:
            raise NotSeparableError(f"no separating formula ({res.status.value})")
        self.classes_ = classes
        self.result_ = res
        self.formula_ = res.formula
        self.size_ = res.formula.size
        self.alphabet_ = sample.alphabet
        return self

    def decision_function(self, X):
        check_is_fitted(self, "formula_")
        words = check_words(X)
        return np.array([evaluate(self.formula_, w) for w in words], dtype=bool)

    def predict(self, X):
        hits = self.decision_function(X)
        if len(self.classes_) == 1:
            return np.full(len(hits), self.classes_[0])
        return np.where(hits, self.classes_[1], self.classes_[0])


class SemanticsTransformer(TransformerMixin, BaseEstimator):
    """Map each word to the truth values of a fixed list of formulas."""

    def __init__(self, formulas=()):
        self.formulas = formulas

    def fit(self, X=None, y=None):
        self.formulas_ = check_formulas(self.formulas)
        return self

    def transform(self, X):
        check_is_fitted(self, "formulas_")
        words = check_words(X)
        out = np.zeros((len(words), len(self.formulas_)), dtype=bool)
        for i, w in enumerate(words):
            for j, f in enumerate(self.formulas_):
                out[i, j] = evaluate(f, w)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "formulas_")
        return np.array([str(f) for f in self.formulas_], dtype=object)
