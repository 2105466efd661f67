"""Test representability decisions and their witnesses"""

import time

import pytest
from hypothesis import given, settings, strategies as st

from src.core.bitcore import BitString, StringSet, closure
from src.core.errors import DegenerateWidth, EmptySet, LengthMismatch
from src.core.formula import NegVar, Var, evaluate
from src.core.represent import (
    build_family, decide, decide_text, decide_with_negation, zero_join_conditions,
)
from src.utils import all_string_sets, all_targets, random_string_set, random_target
from tests.conftest import set_and_target


class TestBuildFamily:
    """Test T_i and t_i"""

    def test_w1_family(self, w1):
        """Test zero members and joins per position"""
        family = build_family(w1)
        assert family.members_at(1) == frozenset({1, 2})
        assert family.members_at(2) == frozenset({2})
        assert family.members_at(3) == frozenset({0})
        assert family.members_at(4) == frozenset({0, 1})
        assert family.join_at(1).to_text() == '0111'
        assert family.join_at(4).to_text() == '1110'

    def test_position_without_zero(self):
        """Test a column of ones has an empty T and no join"""
        family = build_family(StringSet.from_texts(['10', '11']))
        assert family.members_at(1) == frozenset()
        assert family.join_at(1) is None


class TestDecide:
    """Test decide on fixed cases"""

    def test_w1_target_0100(self, w1):
        """Test 0100 is generable with one clause per distinct T_i"""
        verdict = decide(w1, BitString.from_text('0100'))
        assert verdict.representable
        assert verdict.witness.to_json() == {'type': 'cnf', 'clauses': [['1', '2'], ['0'], ['0', '1']]}
        assert evaluate(verdict.witness, w1).to_text() == '0100'

    def test_w1_target_1010_not_generable(self, w1):
        """Test a target outside the closure is refused"""
        verdict = decide(w1, BitString.from_text('1010'))
        assert not verdict.representable
        assert verdict.witness is None
        assert verdict.to_json() == {'representable': False, 'witness': None}

    def test_all_ones_needs_or_of_everything(self):
        """Test the all-ones target uses the OR of all members"""
        w = StringSet.from_texts(['10', '01'])
        verdict = decide(w, BitString.from_text('11'))
        assert verdict.representable
        assert verdict.witness.to_json()['clauses'] == [['0', '1']]
        assert not decide(StringSet.from_texts(['10', '00']), BitString.from_text('11')).representable

    def test_empty_t_rule(self):
        """Test a zero position no member zeroes makes the target unreachable"""
        assert not decide(StringSet.from_texts(['11']), BitString.from_text('00')).representable

    def test_member_is_generable(self, w1):
        """Test every member is generable from the set"""
        for s in w1:
            assert decide(w1, s).representable

    def test_input_guards(self, w1):
        """Test width mismatch, empty sets and width 0"""
        with pytest.raises(LengthMismatch):
            decide(w1, BitString.from_text('010'))
        with pytest.raises(EmptySet):
            decide(StringSet([], width=2), BitString.from_text('01'))
        with pytest.raises(DegenerateWidth):
            decide(StringSet([BitString.zeros(0)]), BitString.zeros(0))

    def test_decide_text(self, w1):
        """Test literal targets with and without negation"""
        assert decide_text(w1, '0100').representable
        assert decide_text(w1, '1010', allow_negation=True).representable

    @settings(max_examples=200)
    @given(set_and_target())
    def test_witness_evaluates_to_target(self, case):
        """Test every positive verdict carries a witness that evaluates to the target"""
        w, s = case
        verdict = decide(w, s)
        if verdict.representable:
            assert evaluate(verdict.witness, w) == s

    @settings(max_examples=200)
    @given(set_and_target(), st.data())
    def test_adding_a_string_keeps_positive_verdicts(self, case, data):
        """Test a target generable from w stays generable once another string joins w"""
        w, s = case
        extra = BitString.from_bits(data.draw(st.lists(st.integers(0, 1), min_size=w.width, max_size=w.width)))
        grown = StringSet(list(w) + [extra])
        if decide(w, s).representable:
            assert decide(grown, s).representable
        if decide_with_negation(w, s).representable:
            assert decide_with_negation(grown, s).representable


class TestDecideWithNegation:
    """Test decide_with_negation"""

    def test_single_complement(self):
        """Test 0011 from {1100} is the complement leaf"""
        w = StringSet.from_texts(['1100'])
        verdict = decide_with_negation(w, BitString.from_text('0011'))
        assert verdict.representable
        assert NegVar(0) in verdict.witness.leaves()
        assert evaluate(verdict.witness, w).to_text() == '0011'

    def test_leaves_refer_to_original_indices(self, w1):
        """Test witness leaves only name indices of the input set"""
        verdict = decide_with_negation(w1, BitString.from_text('1010'))
        assert verdict.representable
        assert {leaf.index for leaf in verdict.witness.leaves()} <= {0, 1, 2}
        assert evaluate(verdict.witness, w1).to_text() == '1010'

    def test_positive_leaves_for_members(self):
        """Test original members appear as plain Var leaves"""
        w = StringSet.from_texts(['10', '01'])
        verdict = decide_with_negation(w, BitString.from_text('10'))
        assert Var(0) in verdict.witness.leaves()


class TestOracleAgreement:
    """Test decide against the closure oracle"""

    @pytest.mark.slow
    def test_exhaustive_small_sets(self):
        """Test every set of up to 3 strings of width up to 4, every target"""
        for width in range(1, 5):
            for w in all_string_sets(width, 3):
                plain = closure(w)
                negated = closure(w, allow_negation=True)
                for s in all_targets(width):
                    assert decide(w, s).representable == (s in plain)
                    assert decide_with_negation(w, s).representable == (s in negated)

    @settings(max_examples=100)
    @given(set_and_target())
    def test_random_agreement(self, case):
        """Test random cases agree with the closure"""
        w, s = case
        assert decide(w, s).representable == (s in closure(w))
        assert decide_with_negation(w, s).representable == (s in closure(w, allow_negation=True))


class TestZeroJoinConditions:
    """Test the three equivalent characterisations"""

    @settings(max_examples=200)
    @given(set_and_target())
    def test_conditions_agree_with_decide(self, case):
        """Test nonempty T plus each of the other two conditions matches decide"""
        w, s = case
        if s.is_all_ones():
            return
        nonempty, ones_covered, meet_equals = zero_join_conditions(w, s)
        expected = decide(w, s).representable
        assert (nonempty and ones_covered) == expected
        assert (nonempty and meet_equals) == expected


class TestPerformance:
    """Test decide stays fast on large square instances"""

    @pytest.mark.slow
    def test_decide_2048(self, rng):
        """Test m = n = 2048 completes within two seconds"""
        w = random_string_set(rng, 2048, 2048)
        s = random_target(rng, 2048)
        decide(w, s)  # warm the cached matrices
        start = time.perf_counter()
        decide(w, s)
        assert time.perf_counter() - start < 2.0
