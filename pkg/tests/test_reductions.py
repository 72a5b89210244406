import json

import pytest

from ltlearn import Sample, SampleError, evaluate, learn_exact, parse, separates
from ltlearn.reductions import (
    SOLVER_LIMIT, HittingSetInstance, SetCoverInstance, fixed3_constants,
    gen_hitting_Fand_fixed3, gen_hitting_Fand_unbounded, gen_hitting_For, gen_hitting_Gor_fixed3,
    gen_setcover_Xand, gor_claimed_witness, gor_complement_witness, pad_for_X_fragments,
    solve_hitting_set, solve_set_cover,
)


class TestSolvers:
    def test_hitting_set(self):
        assert solve_hitting_set(HittingSetInstance(2, [{1}, {2}])) == (2, (1, 2))
        assert solve_hitting_set(HittingSetInstance(3, [{1, 2}, {2, 3}])) == (1, (2,))
        assert solve_hitting_set(HittingSetInstance(3, [])) == (0, ())

    def test_set_cover(self):
        assert solve_set_cover(SetCoverInstance(2, [{1}, {2}])) == (2, (1, 2))
        assert solve_set_cover(SetCoverInstance(2, [{1}, set()])) is None
        assert solve_set_cover(SetCoverInstance(0, [{}])) == (0, ())

    def test_limits_and_validation(self):
        with pytest.raises(ValueError):
            solve_hitting_set(HittingSetInstance(SOLVER_LIMIT + 1, [{1}]))
        with pytest.raises(ValueError):
            HittingSetInstance(2, [{3}])
        with pytest.raises(ValueError):
            HittingSetInstance(2, [set()])
        with pytest.raises(ValueError):
            SetCoverInstance(1, [{2}])


class TestHittingFor:
    def test_example(self):
        b = gen_hitting_For(HittingSetInstance(2, [{1}, {2}], 2))
        assert set(b.sample.P) == {("a1", "b2"), ("b1", "a2")}
        assert b.sample.N == (("b1", "b2"),)
        assert b.witness == parse("F (a1 | a2)") and b.witness.size == 4 == b.K

    def test_budget_zero(self):
        b = gen_hitting_For(HittingSetInstance(2, [{1}], 0))
        assert b.K == 0 and b.witness is None

    def test_single_set(self):
        b = gen_hitting_For(HittingSetInstance(1, [{1}], 1))
        assert b.witness == parse("F a1") and b.witness.size == 2

    def test_minimum_can_undercut_threshold(self):
        # element 1 in every set: the positives all start with a1
        b = gen_hitting_For(HittingSetInstance(1, [{1}], 1))
        assert learn_exact(b.sample, "F,or", 2).formula == parse("a1")


class TestSetCoverXand:
    def test_example(self):
        b = gen_setcover_Xand(SetCoverInstance(2, [{1}, {2}], 2))
        assert b.sample.P == (("a", "a", "a"),)
        assert set(b.sample.N) == {("b", "a", "a"), ("a", "b", "a"), ("a", "a", "b")}
        assert b.K == 2 + 2 * 2 + 1 == b.witness.size
        assert learn_exact(b.sample, "X,and", b.K).size == b.K

    def test_empty_universe(self):
        b = gen_setcover_Xand(SetCoverInstance(0, [{}], 0))
        assert b.witness == parse("X a") and b.witness.size == 2

    def test_tiny(self):
        b = gen_setcover_Xand(SetCoverInstance(1, [{1}], 1))
        assert set(b.sample.N) == {("b", "a"), ("a", "b")}
        assert b.witness == parse("(a & X a)")

    def test_uncoverable(self):
        b = gen_setcover_Xand(SetCoverInstance(2, [{1}], 1))
        assert b.sample is None and b.witness is None
        assert b.provenance["unsatisfiable_cover"] is True


class TestHittingFandUnbounded:
    def test_examples(self):
        b = gen_hitting_Fand_unbounded(HittingSetInstance(2, [{1}], 1))
        assert b.sample.P == (("0", "1", "2"),) and b.sample.N == (("0", "2"),)
        assert b.witness == parse("F 1") and b.witness.size == 2
        b = gen_hitting_Fand_unbounded(HittingSetInstance(2, [{1}, {2}], 2))
        assert b.witness.size == 5 == b.K

    def test_budget_above_minimum(self):
        b = gen_hitting_Fand_unbounded(HittingSetInstance(2, [{1}], 2))
        assert b.witness == parse("F 1")


class TestFixed3:
    def test_constants(self):
        assert fixed3_constants(1, 1) == {"m": 1, "M": 5, "k'": 1, "K_fand": 41, "K_gor": 45}

    def test_fand_example(self):
        b = gen_hitting_Fand_fixed3(HittingSetInstance(1, [{1}], 1))
        assert b.K == 41 and b.witness.size == 41
        assert b.provenance["witness_word_length"] == 14
        assert separates(b.witness, b.sample)

    def test_budget_zero_is_no(self):
        b = gen_hitting_Fand_fixed3(HittingSetInstance(1, [{1}], 0))
        assert b.K == 9 + 2 and b.witness is None
        assert b.provenance["expected_answer"] is False
        assert b.provenance["lower_bound"] > b.K

    def test_gor_claimed_witness_recorded(self):
        b = gen_hitting_Gor_fixed3(HittingSetInstance(1, [{1}], 1))
        prov = b.provenance
        assert b.K == 45 and prov["claimed_witness_size"] == 45
        # the claim does not separate; it is kept in provenance only
        assert prov["claimed_witness_separates"] is False and b.witness is None
        assert prov["complement_witness_separates"] is True
        assert prov["complement_witness_size"] > b.K

    def test_gor_witness_shapes(self):
        assert gor_claimed_witness("ab") == parse("G (b | G a)")
        assert gor_complement_witness("ac") == parse("G ((b | c) | G (a | b))")


class TestPadding:
    def test_lengths(self):
        s = pad_for_X_fragments(Sample(("ab",), ("ba",)))
        assert len(s.P[0]) == 60 and len(s.N[0]) == 54

    def test_dual(self):
        s = pad_for_X_fragments(Sample(("ba",), ("ab",)), dual=True)
        assert len(s.P) == 1 and len(s.N[0]) == 60

    def test_preserves_minimum(self):
        s = Sample(("ab",), ("aa", "bb"))
        orig = learn_exact(s, "X,and", 4)
        pad = learn_exact(pad_for_X_fragments(s), "F,X,and,or", 4)
        assert orig.size == pad.size

    def test_errors(self):
        with pytest.raises(SampleError):
            pad_for_X_fragments(Sample(("ab", "aa"), ("bb",)))
        with pytest.raises(SampleError):
            pad_for_X_fragments(Sample(("ab",), ("b",)))


def test_write_manifest(tmp_path):
    b = gen_hitting_For(HittingSetInstance(2, [{1}, {2}], 2))
    sp, mp = b.write(tmp_path, "demo")
    man = json.loads(mp.read_text())
    assert man["K"] == 4 and man["witness"] == "F (a1 | a2)" and man["sample"] == "demo.sample.json"
    assert man["fragment"] == "F,or"
    data = json.loads(sp.read_text())
    assert data["negative"] == [["b1", "b2"]]
    for w in b.sample.P:
        assert evaluate(b.witness, w)
