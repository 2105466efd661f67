"""Random instance generators, brute-force oracles and the results database engine"""

import os
from itertools import combinations
from typing import Iterator, List, Tuple

import numpy as np
from sqlalchemy import create_engine

from .core.bitcore import BitString, StringSet
from .core.counting import AbstractPoset, Poset
from .core.formula import And, Formula, Not, Or, NegVar, Var
from .core.optimize import CompareInstance
from .logging_config import get_main_logger

DB_PATH = 'outputs/bitrep.db'

logger = get_main_logger()


def random_string_set(rng: np.random.Generator, n: int, width: int) -> StringSet:
    """n uniformly random strings of the given width"""
    bits = rng.integers(0, 2, size=(n, width)).astype(bool)
    return StringSet.from_bit_matrix(bits)


def random_instance(rng: np.random.Generator, max_n: int, max_width: int) -> StringSet:
    n = int(rng.integers(1, max_n + 1))
    width = int(rng.integers(1, max_width + 1))
    return random_string_set(rng, n, width)


def random_target(rng: np.random.Generator, width: int) -> BitString:
    return BitString.from_bits(rng.integers(0, 2, size=width))


def random_poset(rng: np.random.Generator, size: int, density: float = 0.3) -> AbstractPoset:
    """Random order: pairs i < j of a hidden linear extension kept with probability density"""
    labels = rng.permutation(size) + 1
    pairs = [(int(labels[i]), int(labels[j]))
             for i in range(size) for j in range(i + 1, size) if rng.random() < density]
    return AbstractPoset.from_relations(size, pairs)


def random_formula(rng: np.random.Generator, n: int, depth: int, allow_negation: bool = True) -> Formula:
    """Random operator tree over string indices 0..n-1"""
    if depth == 0 or rng.random() < 0.25:
        index = int(rng.integers(0, n))
        if allow_negation and rng.random() < 0.3:
            return NegVar(index)
        return Var(index)
    choice = rng.random()
    if allow_negation and choice < 0.15:
        return Not(random_formula(rng, n, depth - 1, allow_negation))
    left = random_formula(rng, n, depth - 1, allow_negation)
    right = random_formula(rng, n, depth - 1, allow_negation)
    return And(left, right) if choice < 0.575 else Or(left, right)


def random_family(rng: np.random.Generator, universe_size: int, count: int,
                  first: int = 1) -> List[frozenset]:
    """count random nonempty subsets of first..universe_size, jointly covering it"""
    elements = list(range(first, universe_size + 1))
    family = []
    for _ in range(count):
        size = int(rng.integers(1, len(elements) + 1))
        family.append(frozenset(int(e) for e in rng.choice(elements, size=size, replace=False)))
    covered = set().union(*family) if family else set()
    for element in elements:
        if element not in covered:
            index = int(rng.integers(0, len(family)))
            family[index] = family[index] | {element}
    return family


def all_string_sets(width: int, max_n: int) -> Iterator[StringSet]:
    """Every set of 1..max_n distinct strings of the given width, in lexicographic order"""
    texts = [format(v, f'0{width}b') for v in range(2 ** width)]
    for n in range(1, max_n + 1):
        for combo in combinations(texts, n):
            yield StringSet.from_texts(combo)


def all_targets(width: int) -> Iterator[BitString]:
    for v in range(2 ** width):
        yield BitString.from_text(format(v, f'0{width}b'))


def brute_force_antichains(p: Poset) -> int:
    """Subset scan: masks whose members are pairwise incomparable"""
    total = 0
    for mask in range(1 << p.size):
        members = [i for i in range(p.size) if mask >> i & 1]
        if all(not p.leq(i, j) and not p.leq(j, i) for i, j in combinations(members, 2)):
            total += 1
    return total


def brute_force_upper_sets(p: Poset) -> int:
    total = 0
    for mask in range(1 << p.size):
        if all(p.up[i] & ~mask == 0 for i in range(p.size) if mask >> i & 1):
            total += 1
    return total


def brute_force_set_cover(universe_size: int, family: List[frozenset]) -> int:
    universe = set(range(1, universe_size + 1))
    for size in range(0, len(family) + 1):
        for combo in combinations(family, size):
            if set().union(*combo) >= universe:
                return size
    raise ValueError("family does not cover the universe")


def brute_force_compare_set(inst: CompareInstance) -> int:
    """Size of the smallest item subset preserving every inclusion and non-inclusion"""
    subsets = list(inst.subsets)
    relation = [[a <= b for b in subsets] for a in subsets]
    for size in range(0, len(inst.items) + 1):
        for combo in combinations(inst.items, size):
            chosen = set(combo)
            restricted = [a & chosen for a in subsets]
            if all((restricted[i] <= restricted[j]) == relation[i][j]
                   for i in range(len(subsets)) for j in range(len(subsets))):
                return size
    raise ValueError("unreachable: every item set is a compare set")


def get_db_engine(db_path: str = DB_PATH):
    """Create database engine for results storage"""
    directory = os.path.dirname(db_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    # Use SQLite for local storage
    engine = create_engine(f'sqlite:///{db_path}')

    logger.debug(f"Database engine created: {db_path}")
    return engine
