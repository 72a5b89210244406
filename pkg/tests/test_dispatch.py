import itertools

import pytest

from ltlearn import Sample, Status, learn, learn_exact, parse_operators, separates
from ltlearn.dispatch import MODES

from strategies import all_words

FRAGMENTS = ["and,or", "F", "F,G,X", "G,and", "F,or", "X,and", "F,and", "F,and,or",
             "G,and,or", "F,G,and,or", "X,and,or", "F,G,X,and,or"]


def _samples():
    ws = ["".join(w) for w in all_words("ab", 2)]
    groups = list(itertools.combinations(ws, 1)) + list(itertools.combinations(ws, 2))
    for P in groups:
        for N in groups:
            if not set(P) & set(N):
                yield Sample(P, N, ("a", "b"))


@pytest.mark.parametrize("frag", FRAGMENTS)
def test_auto_is_minimal(frag):
    ops = parse_operators(frag)
    for s in _samples():
        r = learn(s, ops)
        e = learn_exact(s, ops, 9)
        assert r.is_found == e.is_found, (s, r, e)
        if r.is_found:
            assert separates(r.formula, s) and r.size == e.size


def test_multi_positive_disjunction():
    r = learn(Sample(("b", "aba"), ("ab",)), parse_operators("F,and,or"))
    assert r.is_found and r.size == 7


def test_bound_applies():
    s = Sample(("ab",), ("aa", "bb"))
    assert learn(s, parse_operators("F,and"), max_size=1).status is Status.NONE_WITHIN_BOUND
    assert learn(s, parse_operators("F,and"), max_size=4).size == 4


def test_fragment_as_string():
    s = Sample(("ab", "abb"), ("ba", "bb"))
    assert learn(s, "F,G,X,and,or").formula == learn(s, parse_operators("F,G,X,and,or")).formula


def test_until_falls_back_to_exact():
    r = learn(Sample(("aab", "b"), ("aca",)), parse_operators("U"), max_size=3)
    assert r.is_found and r.method == "auto"


def test_modes():
    s = Sample(("ab",), ("ba",))
    for mode in MODES:
        ops = parse_operators("F,and" if mode == "fattern" else "X,and")
        assert learn(s, ops, mode=mode, max_size=5).is_found
    with pytest.raises(ValueError):
        learn(s, parse_operators("F"), mode="magic")
    with pytest.raises(ValueError):
        learn(s, parse_operators("F"), mode="fattern")
