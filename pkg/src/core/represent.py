"""Representability decisions with witness CNFs

A target s is generable from W under AND/OR exactly when every zero
position i of s has a nonempty T_i (the members with bit i = 0) and the AND
of the joins t_i = OR(T_i) over those positions equals s. The all-ones
target is the one exception: it needs the OR of all members instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .bitcore import BitString, StringSet, augment_with_complements, require_algorithm_input
from .errors import LengthMismatch
from .formula import CnfFormula, Leaf, NegVar, Var
from ..logging_config import get_represent_logger, log_operation

logger = get_represent_logger()


@dataclass(frozen=True)
class ZeroFamily:
    """T_i and t_i for every position i (index i-1 in the tuples)"""
    width: int
    members: Tuple[FrozenSet[int], ...]
    joins: Tuple[Optional[BitString], ...]

    def members_at(self, position: int) -> FrozenSet[int]:
        return self.members[position - 1]

    def join_at(self, position: int) -> Optional[BitString]:
        return self.joins[position - 1]


@dataclass(frozen=True)
class Verdict:
    representable: bool
    witness: Optional[CnfFormula] = None

    def to_json(self) -> Dict[str, object]:
        return {
            'representable': self.representable,
            'witness': self.witness.to_json() if self.witness is not None else None,
        }


def _check_target(w: StringSet, s: BitString) -> None:
    require_algorithm_input(w)
    if s.length != w.width:
        raise LengthMismatch(f"target has {s.length} bits, set has width {w.width}")


def _zero_rows(w: StringSet, positions: np.ndarray) -> List[np.ndarray]:
    """Member indices with a 0 at each given 0-based column"""
    zero = ~w.bit_matrix
    return [np.flatnonzero(zero[:, p]) for p in positions]


def _join(w: StringSet, rows: np.ndarray) -> np.ndarray:
    return np.bitwise_or.reduce(w.matrix[rows], axis=0)


def build_family(w: StringSet) -> ZeroFamily:
    """T_i and t_i for all m positions"""
    require_algorithm_input(w)
    rows_per_position = _zero_rows(w, np.arange(w.width))
    members = tuple(frozenset(int(k) for k in rows) for rows in rows_per_position)
    joins = tuple(BitString(_join(w, rows), w.width) if rows.size else None
                  for rows in rows_per_position)
    return ZeroFamily(w.width, members, joins)


def decide(w: StringSet, s: BitString) -> Verdict:
    """Is s generable from w by AND/OR; witness CNF when it is"""
    _check_target(w, s)

    if s.is_all_ones():
        covered = np.array_equal(np.bitwise_or.reduce(w.matrix, axis=0), s.words)
        log_operation(logger, 'decide', n=w.n, width=w.width, branch='all_ones', result=covered)
        if not covered:
            return Verdict(False)
        return Verdict(True, CnfFormula((tuple(Var(k) for k in range(w.n)),)))

    zero_positions = np.flatnonzero(~s.bits)
    rows_per_position = _zero_rows(w, zero_positions)
    if any(rows.size == 0 for rows in rows_per_position):
        log_operation(logger, 'decide', n=w.n, width=w.width, branch='empty_T', result=False)
        return Verdict(False)

    joins = np.stack([_join(w, rows) for rows in rows_per_position])
    meet = np.bitwise_and.reduce(joins, axis=0)
    representable = bool(np.array_equal(meet, s.words))
    log_operation(logger, 'decide', n=w.n, width=w.width, zeros=len(zero_positions), result=representable)
    if not representable:
        return Verdict(False)

    variables = [Var(k) for k in range(w.n)]
    clauses = []
    seen = set()
    for rows in rows_per_position:
        key = rows.tobytes()
        if key in seen:
            continue
        seen.add(key)
        clauses.append(tuple(variables[k] for k in rows.tolist()))
    return Verdict(True, CnfFormula(tuple(clauses)))


def _remap_leaf(leaf: Leaf, origin: Sequence[Tuple[int, bool]]) -> Leaf:
    index, negated = origin[leaf.index]
    # augmented sets only hold positive leaves
    return NegVar(index) if negated else Var(index)


def decide_with_negation(w: StringSet, s: BitString) -> Verdict:
    """decide over W plus complements; witness leaves refer to w's indices"""
    _check_target(w, s)
    augmented, origin = augment_with_complements(w)
    verdict = decide(augmented, s)
    if not verdict.representable:
        return verdict
    clauses = tuple(tuple(_remap_leaf(leaf, origin) for leaf in clause)
                    for clause in verdict.witness.clauses)
    return Verdict(True, CnfFormula(clauses))


def decide_text(w: StringSet, target: str, allow_negation: bool = False) -> Verdict:
    """Convenience entry for literal targets"""
    s = BitString.from_text(target)
    return decide_with_negation(w, s) if allow_negation else decide(w, s)


def zero_join_conditions(w: StringSet, s: BitString) -> Tuple[bool, bool, bool]:
    """The three characterisations behind decide, evaluated independently

    Returns (every zero position has a nonempty T_i, One(s) lies inside
    One(t_i) for every zero position i, the AND of those t_i equals s).

    Only meaningful for s other than all-ones; the last two are evaluated
    over the positions whose join exists.
    """
    _check_target(w, s)
    family = build_family(w)
    zeros = sorted(s.zero_set())
    joins = [family.join_at(i) for i in zeros]
    nonempty = all(j is not None for j in joins)
    defined = [j for j in joins if j is not None]
    ones = s.one_set()
    subset_rule = all(ones <= j.one_set() for j in defined)
    if not defined:
        return nonempty, subset_rule, False
    meet = defined[0]
    for j in defined[1:]:
        meet = meet & j
    return nonempty, subset_rule, meet == s
