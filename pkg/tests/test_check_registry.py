"""Test check registration, discovery and the tag filter"""

import numpy as np
import pandas as pd
import pytest

from src.core.check_registry import CheckInterface, CheckOutcome, CheckRegistry, register_check
from src.core.tag_filter import TagFilter

EXPECTED_CHECKS = {
    'decide_oracle', 'decide_negation_oracle', 'count_oracle', 'count_negation_oracle',
    'poset_parsimony', 'antichain_upper_set', 'formula_laws', 'minrep_bounds', 'minspan_bounds',
    'compare_set_transfer', 'table_construction', 'set_cover_reductions', 'decide_scaling',
}


@pytest.fixture
def catalog():
    return pd.DataFrame([
        {'name': 'a', 'tags': 'oracle,decide', 'description': ''},
        {'name': 'b', 'tags': 'oracle,counting,negation', 'description': ''},
        {'name': 'c', 'tags': 'slow,performance', 'description': ''},
        {'name': 'd', 'tags': '', 'description': ''},
    ])


class TestCheckRegistry:
    """Test discovery of the audit checks"""

    def test_auto_discovery_finds_every_check(self):
        """Test importing the checks package registers all checks"""
        assert EXPECTED_CHECKS <= set(CheckRegistry.get_all_checks())

    def test_catalog_sorted_with_tags(self):
        """Test the catalog lists names in order with comma-joined tags"""
        catalog = CheckRegistry.catalog()
        assert list(catalog.columns) == ['name', 'tags', 'description']
        assert list(catalog['name']) == sorted(catalog['name'])
        row = catalog.set_index('name').loc['decide_scaling']
        assert row['tags'] == 'slow,performance,decide'

    def test_unknown_check(self):
        assert CheckRegistry.get_check('no_such_check') is None

    def test_register_decorator_validates(self):
        """Test classes without the interface methods are refused"""
        with pytest.raises(ValueError):
            register_check('broken')(type('Broken', (), {}))

    def test_table_construction_passes(self, limits):
        """Test the cheap construction check runs clean"""
        check = CheckRegistry.get_check('table_construction')
        outcome = check.run(np.random.default_rng(0), limits)
        assert outcome.passed
        assert outcome.cases == 3


class TestCheckOutcome:
    def test_passed_means_no_mismatches(self):
        assert CheckOutcome(5, 0).passed
        assert not CheckOutcome(5, 1).passed


class TestTagFilter:
    """Test include/exclude logic"""

    def test_no_filter_keeps_everything(self, catalog):
        assert len(TagFilter().filter_checks(catalog)) == 4

    def test_include_any(self, catalog):
        """Test OR logic over include tags"""
        filtered = TagFilter(include_tags=['decide', 'counting']).filter_checks(catalog)
        assert list(filtered['name']) == ['a', 'b']

    def test_include_all(self, catalog):
        """Test AND logic over include tags"""
        filtered = TagFilter(include_tags=['oracle', 'negation'], require_all=True).filter_checks(catalog)
        assert list(filtered['name']) == ['b']

    def test_exclude_wins(self, catalog):
        """Test excluded tags drop a check even when included"""
        filtered = TagFilter(include_tags=['oracle'], exclude_tags=['negation']).filter_checks(catalog)
        assert list(filtered['name']) == ['a']

    def test_exclude_only(self, catalog):
        filtered = TagFilter(exclude_tags=['slow']).filter_checks(catalog)
        assert list(filtered['name']) == ['a', 'b', 'd']

    def test_all_tags(self, catalog):
        assert TagFilter.get_all_tags(catalog) == {'oracle', 'decide', 'counting', 'negation', 'slow', 'performance'}

    def test_split_tags_strips_blanks(self):
        assert TagFilter.split_tags(' a, ,b ') == {'a', 'b'}


class TestCheckInterface:
    def test_interface_is_abstract(self):
        """Test the interface cannot be instantiated directly"""
        with pytest.raises(TypeError):
            CheckInterface()
