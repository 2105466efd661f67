"""Shared test fixtures and configuration"""

import numpy as np
import pytest
from hypothesis import strategies as st

from src.config.config_manager import Limits
from src.core.bitcore import BitString, StringSet
from src.core.counting import AbstractPoset


@pytest.fixture
def w1():
    """The three-string set {1100, 0110, 0011}"""
    return StringSet.from_texts(['1100', '0110', '0011'])


@pytest.fixture
def table_family():
    """Set-cover example: u1..u4 covered by f1={1,3,4}, f2={1,2}, f3={2,3}"""
    return 4, [frozenset({1, 3, 4}), frozenset({1, 2}), frozenset({2, 3})]


@pytest.fixture
def rng():
    """Seeded generator so random sweeps are reproducible"""
    return np.random.default_rng(20240601)


@pytest.fixture
def limits():
    return Limits()


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path"""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


# Hypothesis strategies shared by the property tests

@st.composite
def string_sets(draw, max_n=6, max_width=8, min_width=1):
    width = draw(st.integers(min_value=min_width, max_value=max_width))
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = draw(st.lists(st.lists(st.booleans(), min_size=width, max_size=width), min_size=n, max_size=n))
    return StringSet.from_bit_matrix(np.array(rows, dtype=bool).reshape(n, width))


@st.composite
def set_and_target(draw, max_n=5, max_width=6):
    w = draw(string_sets(max_n=max_n, max_width=max_width))
    bits = draw(st.lists(st.integers(0, 1), min_size=w.width, max_size=w.width))
    return w, BitString.from_bits(bits)


@st.composite
def posets(draw, max_size=8):
    size = draw(st.integers(min_value=0, max_value=max_size))
    order = draw(st.permutations(list(range(1, size + 1))))
    pairs = [(order[i], order[j]) for i in range(size) for j in range(i + 1, size) if draw(st.booleans())]
    return AbstractPoset.from_relations(size, pairs)
