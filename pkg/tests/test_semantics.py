import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltlearn import Globally, Letter, Op, TraceBatch, evaluate, parse, semantics_table

from strategies import all_words, formulas, words


def test_examples():
    assert semantics_table(Letter("a"), ["ab"]).row(0) == [1, 0]
    t = semantics_table(Globally(Letter("a")), ["aa", "ab"])
    assert t.rows() == [[1, 1], [0, 0]]
    assert semantics_table(parse("F b"), ["ab"]).row(0) == [1, 1]


def test_accepts_reads_first_position():
    t = semantics_table(parse("X b"), ["ab", "ba", "a"])
    assert [t.accepts(j) for j in range(3)] == [True, False, False]


def test_rejects_empty_words():
    with pytest.raises(ValueError):
        TraceBatch([("a",), ()])


def test_batch_layout():
    batch = TraceBatch(["ab", "c", "abc"])
    assert batch.offsets == [0, 2, 3]
    assert batch.total == 6
    assert batch.max_len == 3
    assert batch.first == 0b1101
    assert batch.first_mask([1]) == 0b100


@settings(max_examples=150, deadline=None)
@given(formulas(ops=(Op.X, Op.F, Op.G, Op.U, Op.AND, Op.OR), neg=True, constants=True),
       st.lists(words(max_len=5), min_size=1, max_size=6))
def test_table_matches_evaluate(phi, ws):
    t = semantics_table(phi, ws)
    for j, w in enumerate(ws):
        for i in range(len(w)):
            assert t.bit(j, i) == evaluate(phi, w, i)


def test_exhaustive_small_formulas():
    ws = all_words("ab", 4)
    batch = TraceBatch(ws)
    atoms = ["a", "b", "!a", "X a", "F b", "G a", "(a U b)", "true", "false"]
    shapes = ["X {}", "F {}", "G {}", "({} & {})", "({} | {})", "({} U {})"]
    for shape in shapes:
        n = shape.count("{}")
        for args in itertools.product(atoms, repeat=n):
            phi = parse(shape.format(*args))
            t = semantics_table(phi, batch)
            for j, w in enumerate(ws):
                assert t.row(j) == [int(evaluate(phi, w, i)) for i in range(len(w))]
