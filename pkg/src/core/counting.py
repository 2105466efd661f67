"""Exact counting of generable strings through the position-class poset

Positions with identical T sets (the members that are 0 there) form a
class; classes are ordered by inclusion of their T sets. After constant
columns are stripped, the generable strings are in bijection with the upper
sets of that order, and upper sets with antichains (via minimal elements).
With negation the order collapses to an antichain and the count is a power
of two.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .bitcore import BitString, StringSet, augment_with_complements, normalize
from .errors import DegenerateWidth, EmptySet, InternalInvariantViolation, InvalidPoset, TooLarge
from ..logging_config import get_counting_logger, log_operation

DEFAULT_ENUMERATION_BOUND = 30

logger = get_counting_logger()


def _mask(indices: Iterable[int]) -> int:
    result = 0
    for i in indices:
        result |= 1 << int(i)
    return result


def _members(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Poset:
    """Partial order on elements 0..size-1 stored as up/down bitmasks

    up[i] has bit j set iff i <= j; both masks include i itself.
    """

    def __init__(self, size: int, up: Sequence[int]):
        if len(up) != size:
            raise InvalidPoset(f"expected {size} up-masks, got {len(up)}")
        self.size = size
        self.up = tuple(up)
        down = [0] * size
        for i, mask in enumerate(self.up):
            for j in _members(mask):
                down[j] |= 1 << i
        self.down = tuple(down)
        self._validate()

    def _validate(self) -> None:
        full = (1 << self.size) - 1
        for i, mask in enumerate(self.up):
            if mask & ~full:
                raise InvalidPoset(f"element {i + 1} relates to an element outside 1..{self.size}")
            if not mask >> i & 1:
                raise InvalidPoset(f"relation is not reflexive at {i + 1}")
            for j in _members(mask):
                if j != i and self.up[j] >> i & 1:
                    raise InvalidPoset(f"antisymmetry violated between {i + 1} and {j + 1}")
                if self.up[j] & ~mask:
                    raise InvalidPoset(f"relation is not transitive through {j + 1}")

    def leq(self, i: int, j: int) -> bool:
        """i <= j, 0-based"""
        return bool(self.up[i] >> j & 1)

    def comparable(self, i: int) -> int:
        return self.up[i] | self.down[i]

    def relations(self) -> List[Tuple[int, int]]:
        """Strict pairs (i, j), 1-based, with i < j in the order"""
        return [(i + 1, j + 1) for i in range(self.size) for j in _members(self.up[i]) if j != i]

    def leq_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.size, self.size), dtype=bool)
        for i in range(self.size):
            matrix[i, _members(self.up[i])] = True
        return matrix

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, relations={self.relations()})"


class AbstractPoset(Poset):
    """Poset given directly by its relation"""

    @classmethod
    def from_relations(cls, size: int, pairs: Iterable[Tuple[int, int]]) -> 'AbstractPoset':
        """Reflexive-transitive closure of 1-based pairs (i, j) meaning i <= j"""
        if size < 0:
            raise InvalidPoset(f"poset size must be nonnegative, got {size}")
        up = [1 << i for i in range(size)]
        for i, j in pairs:
            if not (1 <= i <= size and 1 <= j <= size):
                raise InvalidPoset(f"pair ({i}, {j}) outside 1..{size}")
            up[i - 1] |= 1 << (j - 1)
        # Warshall over bitmasks
        for k in range(size):
            for i in range(size):
                if up[i] >> k & 1:
                    up[i] |= up[k]
        return cls(size, up)

    @classmethod
    def antichain(cls, size: int) -> 'AbstractPoset':
        return cls.from_relations(size, [])

    @classmethod
    def chain(cls, size: int) -> 'AbstractPoset':
        return cls.from_relations(size, [(i, i + 1) for i in range(1, size)])


class ClassPoset(Poset):
    """Position classes of a (normalized) string set ordered by T-set inclusion"""

    def __init__(self, classes: Sequence[FrozenSet[int]], members: Sequence[FrozenSet[int]],
                 up: Sequence[int]):
        self.classes = tuple(classes)
        self.members = tuple(members)
        super().__init__(len(self.classes), up)

    def class_of(self, position: int) -> Optional[int]:
        for index, positions in enumerate(self.classes):
            if position in positions:
                return index
        return None


def build_poset(w: StringSet) -> ClassPoset:
    """Class poset of w after stripping constant columns"""
    if w.n == 0:
        raise EmptySet("cannot build a poset from an empty string set")
    reduced, nmap = normalize(w)

    zero = ~reduced.bit_matrix
    groups: Dict[bytes, int] = {}
    classes: List[List[int]] = []
    columns: List[np.ndarray] = []
    for column, position in enumerate(nmap.kept_columns):
        key = zero[:, column].tobytes()
        if key not in groups:
            groups[key] = len(classes)
            classes.append([])
            columns.append(zero[:, column])
        classes[groups[key]].append(position)

    size = len(classes)
    if size:
        t_sets = np.stack(columns).astype(np.int32)
        # T_i within T_j iff no member is in T_i and outside T_j
        outside = t_sets @ (1 - t_sets).T
        up = [_mask(np.flatnonzero(outside[i] == 0)) for i in range(size)]
    else:
        up = []
    members = [frozenset(int(k) for k in np.flatnonzero(col)) for col in columns]

    log_operation(logger, 'build_poset', n=w.n, width=w.width, kept=len(nmap.kept_columns), classes=size)
    return ClassPoset([frozenset(c) for c in classes], members, up)


def _check_bound(p: Poset, bound: int) -> None:
    if p.size > bound:
        raise TooLarge(f"poset has {p.size} elements, enumeration bound is {bound}")


def count_antichains(p: Poset, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Antichains: either avoid the lowest remaining x, or take x and drop all comparable to it"""
    _check_bound(p, bound)
    comparable = [p.comparable(i) for i in range(p.size)]
    memo: Dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        x = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << x)
        result = count(rest) + count(rest & ~comparable[x])
        memo[mask] = result
        return result

    return count((1 << p.size) - 1)


def count_upper_sets(p: Poset, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Upper sets: those containing x hold everything above it; those without x hold nothing below it"""
    _check_bound(p, bound)
    memo: Dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        x = (mask & -mask).bit_length() - 1
        result = count(mask & ~p.up[x]) + count(mask & ~p.down[x])
        memo[mask] = result
        return result

    return count((1 << p.size) - 1)


def count_representable(w: StringSet, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Number of strings AND/OR formulas over w can produce"""
    poset = build_poset(w)
    count = count_upper_sets(poset, bound)
    log_operation(logger, 'count_representable', n=w.n, width=w.width, classes=poset.size, count=count)
    return count


def negation_poset(w: StringSet) -> ClassPoset:
    """Class poset of w plus complements; must be an antichain"""
    if w.n == 0:
        raise EmptySet("cannot count over an empty string set")
    if w.width == 0:
        raise DegenerateWidth("string set has width 0")
    augmented = augment_with_complements(w)[0]
    poset = build_poset(augmented)
    if poset.relations():
        raise InternalInvariantViolation(
            f"classes of a complement-closed set must be incomparable, found {poset.relations()[:3]}")
    return poset


def count_with_negation(w: StringSet) -> int:
    """Number of strings AND/OR/NOT formulas over w can produce"""
    poset = negation_poset(w)
    log_operation(logger, 'count_with_negation', n=w.n, width=w.width, classes=poset.size)
    return 2 ** poset.size


def poset_to_instance(p: AbstractPoset) -> StringSet:
    """String set whose generable-string count equals the antichain count of p

    String i is 0 exactly at the positions j with i <= j. An all-ones string
    is appended; it leaves every T set unchanged and keeps the all-ones
    target generable when p has a global maximum.
    """
    if p.size < 1:
        raise InvalidPoset("poset must have at least one element")
    zeros = p.leq_matrix()
    bits = np.vstack([~zeros, np.ones((1, p.size), dtype=bool)])
    return StringSet.from_bit_matrix(bits)


def is_upper_set(p: Poset, mask: int) -> bool:
    return all(p.up[i] & ~mask == 0 for i in _members(mask))


def is_antichain(p: Poset, mask: int) -> bool:
    return all(p.comparable(i) & mask == 1 << i for i in _members(mask))


def minimal_elements(p: Poset, mask: int) -> int:
    """Elements of mask with nothing of mask strictly below them"""
    return _mask(i for i in _members(mask) if p.down[i] & mask == 1 << i)


def zero_star(p: ClassPoset, s: BitString) -> int:
    """Mask of the classes meeting Zero(s)"""
    zeros = s.zero_set()
    return _mask(index for index, positions in enumerate(p.classes) if positions & zeros)


def poset_from_relations(size: int, pairs: Iterable[Tuple[int, int]]) -> AbstractPoset:
    """Poset on 1..size from "i below j" pairs, closed reflexively and transitively"""
    return AbstractPoset.from_relations(size, pairs)
