"""Minimum representation subsets, minimum spanning subsets and compare sets

Both minimisation problems are NP-hard. The greedy routines reduce them to
set cover (representation) and hitting set (compare set / spanning); the
exact routines enumerate subsets by increasing size and are bounded. Every
answer is re-checked against the definitional checker before it is marked
certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

import numpy as np

from .bitcore import BitString, StringSet, require_algorithm_input
from .errors import InvalidElement, LengthMismatch, NotRepresentable, TooLarge, Uncoverable
from .represent import decide, decide_with_negation
from ..logging_config import get_optimize_logger, log_operation

DEFAULT_EXACT_BOUND = 20

logger = get_optimize_logger()


@dataclass(frozen=True)
class CoverInstance:
    """Set-cover instance; subsets[k] stems from input index origins[k]"""
    universe: FrozenSet[Hashable]
    subsets: Tuple[FrozenSet[Hashable], ...]
    origins: Tuple[int, ...]

    def __post_init__(self):
        if len(self.subsets) != len(self.origins):
            raise InvalidElement(f"{len(self.subsets)} subsets but {len(self.origins)} origins")
        for origin, subset in zip(self.origins, self.subsets):
            stray = subset - self.universe
            if stray:
                raise InvalidElement(f"subset {origin} holds elements outside the universe: {sorted(stray, key=repr)[:5]}")

    @classmethod
    def from_family(cls, universe: Iterable[Hashable], family: Sequence[Iterable[Hashable]]) -> 'CoverInstance':
        return cls(frozenset(universe), tuple(frozenset(f) for f in family), tuple(range(len(family))))

    def incidence(self) -> Tuple[Tuple[Hashable, ...], np.ndarray]:
        """Element order and the (subsets x elements) membership matrix"""
        elements = tuple(sorted(self.universe, key=repr))
        column = {e: k for k, e in enumerate(elements)}
        matrix = np.zeros((len(self.subsets), len(elements)), dtype=bool)
        for row, subset in enumerate(self.subsets):
            matrix[row, [column[e] for e in subset]] = True
        return elements, matrix

    def covers(self, origins: Iterable[int]) -> bool:
        wanted = set(origins)
        union = set()
        for origin, subset in zip(self.origins, self.subsets):
            if origin in wanted:
                union |= subset
        return union >= self.universe


@dataclass(frozen=True)
class CompareInstance:
    """Items A and a family B of item sets"""
    items: Tuple[Hashable, ...]
    subsets: Tuple[FrozenSet[Hashable], ...]

    def __post_init__(self):
        known = set(self.items)
        for index, subset in enumerate(self.subsets):
            stray = subset - known
            if stray:
                raise InvalidElement(f"subset {index + 1} holds unknown items: {sorted(stray, key=repr)[:5]}")

    def membership(self) -> np.ndarray:
        """(subsets x items) membership matrix in item order"""
        column = {item: k for k, item in enumerate(self.items)}
        matrix = np.zeros((len(self.subsets), len(self.items)), dtype=bool)
        for row, subset in enumerate(self.subsets):
            matrix[row, [column[a] for a in subset]] = True
        return matrix


@dataclass(frozen=True)
class SubsetAnswer:
    """Chosen string indices (item indices for compare sets)"""
    chosen: FrozenSet[int]
    certified: bool

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def indices(self) -> List[int]:
        return sorted(self.chosen)

    def to_json(self) -> Dict[str, object]:
        return {'indices': self.indices, 'size': self.size, 'certified': self.certified}


def _check_exact_bound(count: int, bound: int, what: str) -> None:
    if count > bound:
        raise TooLarge(f"{what} has {count} candidates, exact search is bounded at {bound}")


def greedy_set_cover(inst: CoverInstance) -> SubsetAnswer:
    """Most-new-elements-first cover; ties go to the lowest originating index"""
    elements, matrix = inst.incidence()
    uncovered = np.ones(len(elements), dtype=bool)
    if len(elements) and not matrix.any(axis=0).all():
        missing = [elements[k] for k in np.flatnonzero(~matrix.any(axis=0))]
        raise Uncoverable(f"{len(missing)} elements lie in no subset, e.g. {missing[:5]}")

    # argmax picks the first maximum, so rows are visited in origin order
    order = np.argsort(np.asarray(inst.origins, dtype=np.int64), kind='stable')
    matrix = matrix[order]
    origins = [inst.origins[k] for k in order]

    chosen: List[int] = []
    while uncovered.any():
        gains = (matrix & uncovered).sum(axis=1)
        best = int(np.argmax(gains))
        chosen.append(origins[best])
        uncovered &= ~matrix[best]

    log_operation(logger, 'greedy_set_cover', universe=len(elements), subsets=len(inst.subsets), size=len(chosen))
    return SubsetAnswer(frozenset(chosen), inst.covers(chosen))


def exact_set_cover(inst: CoverInstance, bound: int = DEFAULT_EXACT_BOUND) -> SubsetAnswer:
    """Smallest cover by enumeration over subfamilies"""
    _check_exact_bound(len(inst.subsets), bound, "set-cover instance")
    origins = sorted(set(inst.origins))
    for size in range(0, len(origins) + 1):
        for combo in combinations(origins, size):
            if inst.covers(combo):
                return SubsetAnswer(frozenset(combo), True)
    raise Uncoverable("the union of all subsets misses part of the universe")


def _ones(x: BitString) -> FrozenSet[int]:
    return x.one_set()


def _zeros(x: BitString) -> FrozenSet[int]:
    return x.zero_set()


def representation_cover(w: StringSet, s: BitString, allow_negation: bool = False) -> CoverInstance:
    """Set-cover instance whose covers are exactly the generating subsets

    s all ones: cover the positions with One(s_i). s all zeros: cover them
    with Zero(s_i). Otherwise cover Zero(s) x One(s), string i covering the
    pairs (z, o) with bit z = 0 and bit o = 1. With negation a string also
    covers what its complement would.
    """
    require_algorithm_input(w)
    if s.length != w.width:
        raise LengthMismatch(f"target has {s.length} bits, set has width {w.width}")

    if s.is_all_ones() or s.is_all_zeros():
        universe = frozenset(range(1, w.width + 1))
        pick = _ones if s.is_all_ones() else _zeros
        subsets = []
        for x in w:
            covered = pick(x)
            if allow_negation:
                covered = covered | pick(~x)
            subsets.append(covered)
        return CoverInstance(universe, tuple(subsets), tuple(range(w.n)))

    zero_positions = sorted(s.zero_set())
    one_positions = sorted(s.one_set())
    universe = frozenset((z, o) for z in zero_positions for o in one_positions)
    subsets = []
    for x in w:
        bits = x.bits
        covered = {(z, o) for z in zero_positions if not bits[z - 1]
                   for o in one_positions if bits[o - 1]}
        if allow_negation:
            covered |= {(z, o) for z in zero_positions if bits[z - 1]
                        for o in one_positions if not bits[o - 1]}
        subsets.append(frozenset(covered))
    return CoverInstance(universe, tuple(subsets), tuple(range(w.n)))


def _checker(allow_negation: bool) -> Callable[[StringSet, BitString], object]:
    return decide_with_negation if allow_negation else decide


def _require_representable(w: StringSet, s: BitString, allow_negation: bool) -> None:
    if not _checker(allow_negation)(w, s).representable:
        mode = "AND/OR/NOT" if allow_negation else "AND/OR"
        raise NotRepresentable(f"{s.to_text()} is not generable from the set under {mode}")


def _generates(w: StringSet, chosen: Iterable[int], s: BitString, allow_negation: bool) -> bool:
    indices = sorted(chosen)
    if not indices:
        return False
    return _checker(allow_negation)(w.subset(indices), s).representable


def min_rep_subset_greedy(w: StringSet, s: BitString, allow_negation: bool = False) -> SubsetAnswer:
    """Small subset of w that still generates s (greedy set cover)"""
    inst = representation_cover(w, s, allow_negation)
    _require_representable(w, s, allow_negation)
    cover = greedy_set_cover(inst)
    certified = _generates(w, cover.chosen, s, allow_negation)
    if not certified:
        logger.error(f"Greedy representation subset {cover.indices} failed certification for {s.to_text()}")
    log_operation(logger, 'min_rep_subset_greedy', n=w.n, width=w.width, negation=allow_negation,
                  size=cover.size, certified=certified)
    return SubsetAnswer(cover.chosen, certified)


def min_rep_subset_exact(w: StringSet, s: BitString, allow_negation: bool = False,
                         bound: int = DEFAULT_EXACT_BOUND) -> SubsetAnswer:
    """Smallest generating subset; lexicographically first among ties"""
    require_algorithm_input(w)
    if s.length != w.width:
        raise LengthMismatch(f"target has {s.length} bits, set has width {w.width}")
    _check_exact_bound(w.n, bound, "string set")
    _require_representable(w, s, allow_negation)

    for size in range(1, w.n + 1):
        for combo in combinations(range(w.n), size):
            if _generates(w, combo, s, allow_negation):
                log_operation(logger, 'min_rep_subset_exact', n=w.n, width=w.width, size=size)
                return SubsetAnswer(frozenset(combo), True)
    raise NotRepresentable(f"{s.to_text()} is not generable from any subset")


def _inclusion(matrix: np.ndarray) -> np.ndarray:
    """inclusion[i, j] is True iff row i is a subset of row j"""
    rows = matrix.astype(np.int32)
    return (rows @ (1 - rows).T) == 0


def is_compare_set(inst: CompareInstance, chosen: Iterable[int]) -> bool:
    """Does restricting every subset to the chosen items keep all inclusions and non-inclusions"""
    matrix = inst.membership()
    mask = np.zeros(len(inst.items), dtype=bool)
    mask[list(chosen)] = True
    return bool(np.array_equal(_inclusion(matrix), _inclusion(matrix & mask)))


def compare_demands(inst: CompareInstance) -> np.ndarray:
    """Distinct nonempty differences b_i minus b_j, as rows over the items"""
    matrix = inst.membership()
    if len(matrix) == 0 or not inst.items:
        return np.zeros((0, len(inst.items)), dtype=bool)
    differences = (matrix[:, None, :] & ~matrix[None, :, :]).reshape(len(matrix) ** 2, len(inst.items))
    differences = differences[differences.any(axis=1)]
    if len(differences) == 0:
        return differences
    return np.unique(differences, axis=0)


def greedy_compare_set(inst: CompareInstance) -> SubsetAnswer:
    """Greedy hitting set over the pairwise differences; ties go to the lowest item index"""
    demands = compare_demands(inst)
    unhit = np.ones(len(demands), dtype=bool)
    chosen: List[int] = []
    while unhit.any():
        hits = demands[unhit].sum(axis=0)
        best = int(np.argmax(hits))
        chosen.append(best)
        unhit &= ~demands[:, best]

    certified = is_compare_set(inst, chosen)
    log_operation(logger, 'greedy_compare_set', items=len(inst.items), subsets=len(inst.subsets),
                  demands=len(demands), size=len(chosen), certified=certified)
    return SubsetAnswer(frozenset(chosen), certified)


def min_compare_set_exact(inst: CompareInstance, bound: int = DEFAULT_EXACT_BOUND) -> SubsetAnswer:
    """Smallest compare set by enumeration over item subsets"""
    _check_exact_bound(len(inst.items), bound, "compare-set instance")
    for size in range(0, len(inst.items) + 1):
        for combo in combinations(range(len(inst.items)), size):
            if is_compare_set(inst, combo):
                return SubsetAnswer(frozenset(combo), True)
    # the full item set always works
    raise AssertionError("unreachable: all items form a compare set")


def spanning_family(w: StringSet) -> CompareInstance:
    """Compare-set instance whose compare sets are the spanning subsets of w

    Items are the string indices. The family holds every distinct T_i over
    all positions, the empty set, and the full index set when the all-ones
    string is a member.
    """
    require_algorithm_input(w)
    zero = ~w.bit_matrix
    family: List[FrozenSet[int]] = []
    seen = set()

    def add(subset: FrozenSet[int]) -> None:
        if subset not in seen:
            seen.add(subset)
            family.append(subset)

    for position in range(w.width):
        add(frozenset(int(k) for k in np.flatnonzero(zero[:, position])))
    add(frozenset())
    if w.contains_all_ones():
        add(frozenset(range(w.n)))
    return CompareInstance(tuple(range(w.n)), tuple(family))


def spans(w: StringSet, chosen: Iterable[int]) -> bool:
    """Does the chosen subset generate every member of w"""
    indices = sorted(chosen)
    if not indices:
        return False
    sub = w.subset(indices)
    return all(decide(sub, s).representable for s in w)


def min_spanning_subset_greedy(w: StringSet) -> SubsetAnswer:
    """Small subset generating every member of w"""
    inst = spanning_family(w)
    answer = greedy_compare_set(inst)
    certified = spans(w, answer.chosen)
    if not certified:
        logger.error(f"Greedy spanning subset {answer.indices} failed certification")
    log_operation(logger, 'min_spanning_subset_greedy', n=w.n, width=w.width, size=answer.size,
                  certified=certified)
    return SubsetAnswer(answer.chosen, certified)


def min_spanning_subset_exact(w: StringSet, bound: int = DEFAULT_EXACT_BOUND) -> SubsetAnswer:
    require_algorithm_input(w)
    _check_exact_bound(w.n, bound, "string set")
    for size in range(1, w.n + 1):
        for combo in combinations(range(w.n), size):
            if spans(w, combo):
                log_operation(logger, 'min_spanning_subset_exact', n=w.n, width=w.width, size=size)
                return SubsetAnswer(frozenset(combo), True)
    raise AssertionError("unreachable: w spans itself")


def _check_family(universe: Iterable[int], family: Sequence[Iterable[int]]) -> List[FrozenSet[int]]:
    allowed = frozenset(universe)
    checked = []
    for index, members in enumerate(family):
        members = frozenset(int(u) for u in members)
        stray = members - allowed
        if stray:
            raise InvalidElement(f"family member {index + 1} holds {sorted(stray)}, outside {min(allowed, default=1)}..{max(allowed, default=0)}")
        checked.append(members)
    return checked


def msc_to_mcs(universe_size: int, family: Sequence[Iterable[int]]) -> CompareInstance:
    """Compare-set instance with optimum universe_size + (set-cover optimum)

    Items are 1..m+n. For each element u_i: b_i = {i} plus m+j for every f_j
    holding u_i; then b_{m+i} = {i}. With m = 1 nothing forces item 1 and the
    optimum is 1 for every covering family.
    """
    m = universe_size
    checked = _check_family(range(1, m + 1), family)
    items = tuple(range(1, m + len(checked) + 1))
    subsets = []
    for i in range(1, m + 1):
        subsets.append(frozenset([i]) | frozenset(m + j for j, f in enumerate(checked, start=1) if i in f))
    for i in range(1, m + 1):
        subsets.append(frozenset([i]))
    return CompareInstance(items, tuple(subsets))


def set_cover_to_minrep(universe_size: int, family: Sequence[Iterable[int]]) -> Tuple[StringSet, BitString]:
    """(W, all-ones) with One(s_i) = S_i; minimum subsets match minimum covers"""
    checked = _check_family(range(1, universe_size + 1), family)
    bits = np.zeros((len(checked), universe_size), dtype=bool)
    for row, members in enumerate(checked):
        bits[row, [u - 1 for u in members]] = True
    return StringSet.from_bit_matrix(bits), BitString.ones(universe_size)


def set_cover_to_negation_minrep(universe_size: int,
                                 family: Sequence[Iterable[int]]) -> Tuple[StringSet, BitString]:
    """(W, s) with Zero(s_i) = S_i over the universe 2..m and Zero(s) = {1}

    With negation allowed the minimum generating subset has the size of the
    minimum cover.
    """
    checked = _check_family(range(2, universe_size + 1), family)
    bits = np.ones((len(checked), universe_size), dtype=bool)
    for row, members in enumerate(checked):
        bits[row, [u - 1 for u in members]] = False
    target = np.ones(universe_size, dtype=bool)
    target[0] = False
    return StringSet.from_bit_matrix(bits), BitString.from_bits(target.astype(int))

