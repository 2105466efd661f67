"""Test utility functions"""

import os

import pytest

from src.core.bitcore import closure
from src.core.counting import AbstractPoset
from src.core.formula import count_not_nodes, evaluate
from src.core.optimize import CompareInstance
from src.utils import (
    all_string_sets, all_targets, brute_force_antichains, brute_force_compare_set, brute_force_set_cover,
    brute_force_upper_sets, get_db_engine, random_family, random_formula, random_instance, random_poset,
    random_string_set, random_target,
)


class TestGenerators:
    """Test random instance generation"""

    def test_random_string_set_shape(self, rng):
        """Test n strings of the requested width"""
        w = random_string_set(rng, 5, 70)
        assert w.n == 5 and w.width == 70

    def test_random_instance_bounds(self, rng):
        """Test sizes stay within the maxima"""
        for _ in range(20):
            w = random_instance(rng, 4, 6)
            assert 1 <= w.n <= 4
            assert 1 <= w.width <= 6

    def test_random_target_width(self, rng):
        assert random_target(rng, 9).length == 9

    def test_random_poset_is_valid(self, rng):
        """Test generated relations close into a poset of the right size"""
        p = random_poset(rng, 7, density=0.5)
        assert p.size == 7

    def test_random_formula_without_negation(self, rng):
        """Test negation-free trees only use plain leaves"""
        w = random_string_set(rng, 3, 8)
        for _ in range(20):
            f = random_formula(rng, 3, 4, allow_negation=False)
            assert count_not_nodes(f) == 0
            assert evaluate(f, w) in closure(w)

    def test_random_family_covers(self, rng):
        """Test families cover first..m with nonempty members"""
        for _ in range(20):
            family = random_family(rng, 6, 3, first=2)
            assert set().union(*family) == set(range(2, 7))
            assert all(family)


class TestEnumerators:
    """Test exhaustive enumeration helpers"""

    def test_all_string_sets_count(self):
        """Test every set of up to 2 distinct strings of width 2"""
        assert sum(1 for _ in all_string_sets(2, 2)) == 4 + 6

    def test_all_targets(self):
        assert [t.to_text() for t in all_targets(2)] == ['00', '01', '10', '11']


class TestOracles:
    """Test the brute-force oracles on known values"""

    def test_antichains_and_upper_sets(self):
        """Test a 2-chain and a 3-antichain"""
        assert brute_force_antichains(AbstractPoset.chain(2)) == 3
        assert brute_force_upper_sets(AbstractPoset.antichain(3)) == 8

    def test_set_cover(self, table_family):
        assert brute_force_set_cover(*table_family) == 2

    def test_set_cover_rejects_gaps(self):
        with pytest.raises(ValueError):
            brute_force_set_cover(2, [frozenset({1})])

    def test_compare_set(self):
        """Test two singletons need both items"""
        inst = CompareInstance((1, 2), (frozenset({1}), frozenset({2})))
        assert brute_force_compare_set(inst) == 2


class TestDatabaseEngine:
    """Test database engine creation"""

    def test_creates_parent_directory(self, tmp_path):
        """Test the SQLite file's directory is created"""
        db_path = tmp_path / 'nested' / 'bitrep.db'
        engine = get_db_engine(str(db_path))
        assert os.path.isdir(tmp_path / 'nested')
        assert str(engine.url).endswith('bitrep.db')
