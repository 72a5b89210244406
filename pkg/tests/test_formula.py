import itertools

import pytest
from hypothesis import given, settings

from ltlearn import (
    FALSE, TRUE, And, Eventually, Globally, Letter, NegLetter, Next, Op, Or, Until,
    dualize, evaluate, formula_size, in_fragment, parse, parse_operators,
)
from ltlearn.formula import (
    UnsupportedOperatorError, conjunction, count_nodes, disjunction, format_operators,
    letters_of, next_n, operators_of,
)

from strategies import all_words, formulas

a, b, c = Letter("a"), Letter("b"), Letter("c")


class TestSize:
    def test_examples(self):
        assert formula_size(Eventually(And(a, Eventually(b)))) == 5
        assert formula_size(a) == 1
        assert formula_size(Next(Next(a))) == 3

    def test_negated_letter_counts_two(self):
        assert NegLetter("a").size == 2
        assert Or(NegLetter("a"), b).size == 4

    def test_constants(self):
        assert TRUE.size == FALSE.size == 1

    @given(formulas(neg=True, constants=True))
    def test_size_is_node_count(self, phi):
        nodes = 0
        stack = [phi]
        while stack:
            f = stack.pop()
            nodes += 2 if isinstance(f, NegLetter) else 1
            stack.extend(f.children())
        assert phi.size == nodes


class TestOrder:
    def test_size_first(self):
        assert a < Next(a) < And(a, b)

    def test_rank_within_size(self):
        assert TRUE < FALSE < a
        assert NegLetter("a") < Next(a) < Eventually(a) < Globally(a)
        assert Until(a, b) < And(a, b) < Or(a, b)

    def test_children_then_names(self):
        assert a < b
        assert And(a, b) < And(b, a)
        assert Eventually(a) < Eventually(b)

    @given(formulas(), formulas())
    def test_total(self, f, g):
        assert (f < g) + (g < f) + (f == g) == 1
        if f == g:
            assert hash(f) == hash(g)

    def test_sorting_is_deterministic(self):
        fs = [Or(a, b), a, Next(b), Eventually(a), And(a, a), b]
        assert sorted(fs) == sorted(reversed(fs))
        assert sorted(fs)[:2] == [a, b]


class TestEvaluate:
    def test_next_on_last_position(self):
        assert not evaluate(Next(a), ("b",), 0)
        assert not evaluate(Next(a), ("a",), 0)

    def test_true_everywhere(self):
        for w in all_words("ab", 3):
            assert all(evaluate(TRUE, w, i) for i in range(len(w)))
            assert not any(evaluate(FALSE, w, i) for i in range(len(w)))

    def test_nested_eventually(self):
        phi = Eventually(And(b, Eventually(a)))
        assert evaluate(phi, tuple("aba"), 0)
        assert not evaluate(phi, tuple("ab"), 0)

    def test_until(self):
        phi = Until(a, b)
        assert evaluate(phi, tuple("aab"))
        assert evaluate(phi, tuple("b"))
        assert not evaluate(phi, tuple("aca"))
        assert not evaluate(phi, tuple("aa"))

    def test_globally_includes_current(self):
        assert evaluate(Globally(a), tuple("ba"), 1)
        assert not evaluate(Globally(a), tuple("ba"), 0)

    def test_negated_letter(self):
        assert evaluate(NegLetter("a"), tuple("b"))
        assert not evaluate(NegLetter("a"), tuple("a"))

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            evaluate(a, ())

    def test_position_out_of_range(self):
        with pytest.raises(IndexError):
            evaluate(a, tuple("ab"), 2)

    def test_prefix_fact_off_by_one(self):
        # one X and a cut at N = 0 would keep only "b"; the word needs two letters
        phi = Next(a)
        assert evaluate(phi, tuple("ba"))
        assert not evaluate(phi, tuple("ba")[:1])

    @settings(max_examples=200)
    @given(formulas(ops=(Op.X, Op.F, Op.G, Op.U, Op.AND, Op.OR), neg=True))
    def test_fixpoint_laws(self, phi):
        for w in all_words("abc", 3):
            for i in range(len(w)):
                nxt = i + 1 < len(w)
                assert evaluate(Eventually(phi), w, i) == (
                    evaluate(phi, w, i) or (nxt and evaluate(Eventually(phi), w, i + 1)))
                assert evaluate(Globally(phi), w, i) == (
                    evaluate(phi, w, i) and (not nxt or evaluate(Globally(phi), w, i + 1)))


class TestDualize:
    def test_examples(self):
        assert dualize(Eventually(a)) == Globally(NegLetter("a"))
        assert dualize(And(a, b)) == Or(NegLetter("a"), NegLetter("b"))
        assert dualize(Globally(Or(b, Eventually(a)))) == \
            Eventually(And(NegLetter("b"), Globally(NegLetter("a"))))

    def test_involution_on_constants(self):
        assert dualize(TRUE) == FALSE and dualize(FALSE) == TRUE

    @pytest.mark.parametrize("phi", [Next(a), Until(a, b), Eventually(Next(a))])
    def test_rejects_next_and_until(self, phi):
        with pytest.raises(UnsupportedOperatorError):
            dualize(phi)

    @settings(max_examples=200)
    @given(formulas(ops=(Op.F, Op.G, Op.AND, Op.OR), neg=True, constants=True))
    def test_negates(self, phi):
        d = dualize(phi)
        assert dualize(d) == phi
        for w in all_words("abc", 4):
            assert evaluate(d, w) != evaluate(phi, w)


class TestFragments:
    def test_examples(self):
        assert in_fragment(Eventually(a), {Op.F, Op.AND})
        assert not in_fragment(Or(a, b), {Op.F, Op.AND})
        assert in_fragment(Next(And(a, b)), {Op.X, Op.AND})

    def test_letters_and_constants_always_allowed(self):
        assert in_fragment(a, set())
        assert in_fragment(TRUE, set())
        assert not in_fragment(NegLetter("a"), set())

    def test_parse_operators(self):
        assert parse_operators("F, X,and") == {Op.F, Op.X, Op.AND}
        assert parse_operators("u,|,!") == {Op.U, Op.OR, Op.NOT}
        assert parse_operators([Op.G, "∧"]) == {Op.G, Op.AND}
        assert parse_operators("") == frozenset()
        with pytest.raises(ValueError):
            parse_operators("F,W")

    def test_format_operators_round_trip(self):
        ops = parse_operators("F,G,X,and,or,U,not")
        assert parse_operators(format_operators(ops)) == ops

    def test_operators_and_letters_of(self):
        phi = parse("(F (a & X b) | G !c)")
        assert operators_of(phi) == {Op.F, Op.X, Op.AND, Op.OR, Op.G, Op.NOT}
        assert letters_of(phi) == {"a", "b", "c"}
        assert count_nodes(phi, Next) == 1


class TestBuilders:
    def test_conjunction_disjunction(self):
        assert conjunction([]) == TRUE
        assert disjunction([]) == FALSE
        assert conjunction([a, b, c]) == And(And(a, b), c)
        assert disjunction([a]) == a

    def test_next_n(self):
        assert next_n(0, a) == a
        assert next_n(2, a) == Next(Next(a))

    def test_operator_sugar(self):
        assert (a & b) == And(a, b)
        assert (a | b) == Or(a, b)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            a.name = "b"

    def test_structural_equality(self):
        assert Eventually(And(a, b)) == Eventually(And(Letter("a"), Letter("b")))
        assert len({Eventually(a), Eventually(Letter("a"))}) == 1

    def test_repr_and_str(self):
        phi = Eventually(And(a, Eventually(b)))
        assert str(phi) == "F (a & F b)"
        assert repr(phi) == "Formula('F (a & F b)')"


def test_fact_one_exhaustive_small():
    # every size-3 body, all words up to length 4 over {a, b}
    bodies = [a, b, Next(a), Eventually(b), Globally(a), And(a, b), Or(a, Next(b))]
    ws = all_words("ab", 4)
    for phi, psi in itertools.product(bodies, repeat=2):
        for lhs, rhs in [
            (Globally(Globally(phi)), Globally(phi)),
            (Eventually(Next(phi)), Next(Eventually(phi))),
            (Globally(Next(phi)), FALSE),
            (Globally(Eventually(phi)), Eventually(Globally(phi))),
            (Eventually(Or(phi, psi)), Or(Eventually(phi), Eventually(psi))),
        ]:
            for w in ws:
                assert evaluate(lhs, w) == evaluate(rhs, w)
