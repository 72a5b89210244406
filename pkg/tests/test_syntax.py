import pytest
from hypothesis import given

from ltlearn import FALSE, TRUE, And, Eventually, Letter, NegLetter, Op, Or, Until, parse
from ltlearn.syntax import FormulaSyntaxError, check_letter, format_formula

from strategies import formulas


def test_parse_examples():
    assert parse("F (a & F b)") == Eventually(And(Letter("a"), Eventually(Letter("b"))))
    assert parse("(a U b)") == Until(Letter("a"), Letter("b"))
    assert parse("true") == TRUE and parse("false") == FALSE
    assert parse("!a") == NegLetter("a")


def test_round_trip_example():
    assert format_formula(parse("G (!a | X b)")) == "G (!a | X b)"


def test_unicode_operators():
    assert parse("(a ∧ ¬b)") == And(Letter("a"), NegLetter("b"))
    assert parse("(a ∨ b)") == Or(Letter("a"), Letter("b"))


def test_lenient_forms():
    a, b, c = Letter("a"), Letter("b"), Letter("c")
    assert parse("(a & b & c)") == And(And(a, b), c)
    assert parse("((a))") == a
    assert parse("  F   a ") == Eventually(a)


def test_multi_character_letters():
    assert parse("(a1 & b_2)") == And(Letter("a1"), Letter("b_2"))
    assert parse("F 0") == Eventually(Letter("0"))


@pytest.mark.parametrize("text", ["", "F", "(a & b", "a b", "(a &)", "!F a", "(a U b U c)",
                                  "G (a | )", "a)", "#"])
def test_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse(text)


def test_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse("(a & b")
    assert info.value.position == 6


@pytest.mark.parametrize("name", ["X", "true", "U", "a-b", ""])
def test_check_letter_rejects(name):
    with pytest.raises(ValueError):
        check_letter(name)


def test_formatting_deep_formula():
    phi = Letter("a")
    for _ in range(5000):
        phi = Eventually(phi)
    text = format_formula(phi)
    assert text.startswith("F F F") and text.endswith("F a")


@given(formulas(ops=(Op.X, Op.F, Op.G, Op.U, Op.AND, Op.OR), neg=True, constants=True,
                max_leaves=10))
def test_round_trip(phi):
    text = format_formula(phi)
    assert parse(text) == phi
    assert format_formula(parse(text)) == text
