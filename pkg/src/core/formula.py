"""Operator trees over string indices: evaluation, negation pushing, CNF conversion"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Dict, FrozenSet, List, Tuple, Union

from .bitcore import BitString, StringSet
from .errors import FormulaError, IndexOutOfRange, SizeExplosion

DEFAULT_CNF_CLAUSE_CAP = 2 ** 16


@dataclass(frozen=True)
class Var:
    """Operand: string `index` of the set"""
    index: int

    @property
    def token(self) -> str:
        return str(self.index)


@dataclass(frozen=True)
class NegVar:
    """Operand: complement of string `index`"""
    index: int

    @property
    def token(self) -> str:
        return f"~{self.index}"


@dataclass(frozen=True)
class And:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Not:
    child: 'Formula'


Leaf = Union[Var, NegVar]
Formula = Union[Var, NegVar, And, Or, Not]


def parse_token(token: str) -> Leaf:
    """Inverse of Leaf.token"""
    text = str(token).strip()
    negated = text.startswith('~')
    digits = text[1:] if negated else text
    if not digits.isdigit():
        raise FormulaError(f"bad leaf token: {token!r}")
    return NegVar(int(digits)) if negated else Var(int(digits))


@dataclass(frozen=True)
class CnfFormula:
    """AND over clauses, each clause an OR over leaves"""
    clauses: Tuple[Tuple[Leaf, ...], ...]

    def __post_init__(self):
        if not self.clauses:
            raise FormulaError("a CNF needs at least one clause")
        for clause in self.clauses:
            if not clause:
                raise FormulaError("CNF clauses must be nonempty")
            for leaf in clause:
                if not isinstance(leaf, (Var, NegVar)):
                    raise FormulaError(f"CNF clauses hold leaves only, got {type(leaf).__name__}")

    def leaves(self) -> FrozenSet[Leaf]:
        return frozenset(leaf for clause in self.clauses for leaf in clause)

    def to_json(self) -> Dict[str, object]:
        return {
            'type': 'cnf',
            'clauses': [[leaf.token for leaf in clause] for clause in self.clauses],
        }

    @classmethod
    def from_json(cls, document: Dict[str, object]) -> 'CnfFormula':
        if document.get('type') != 'cnf':
            raise FormulaError(f"not a CNF document: type={document.get('type')!r}")
        return cls(tuple(tuple(parse_token(t) for t in clause) for clause in document['clauses']))

    def to_formula(self) -> Formula:
        """Equivalent binary operator tree"""
        disjunctions = [reduce(Or, clause) for clause in self.clauses]
        return reduce(And, disjunctions)


def _leaf_value(leaf: Leaf, w: StringSet) -> BitString:
    if not 0 <= leaf.index < w.n:
        raise IndexOutOfRange(f"leaf {leaf.token} outside a set of {w.n} strings")
    string = w[leaf.index]
    return ~string if isinstance(leaf, NegVar) else string


def evaluate(f: Union[Formula, CnfFormula], w: StringSet) -> BitString:
    """Bitwise value of f over the members of w"""
    if isinstance(f, CnfFormula):
        values = [reduce(BitString.__or__, (_leaf_value(leaf, w) for leaf in clause))
                  for clause in f.clauses]
        return reduce(BitString.__and__, values)
    if isinstance(f, (Var, NegVar)):
        return _leaf_value(f, w)
    if isinstance(f, And):
        return evaluate(f.left, w) & evaluate(f.right, w)
    if isinstance(f, Or):
        return evaluate(f.left, w) | evaluate(f.right, w)
    if isinstance(f, Not):
        return ~evaluate(f.child, w)
    raise FormulaError(f"unknown formula node: {type(f).__name__}")


def push_negations(f: Formula, negate: bool = False) -> Formula:
    """De Morgan normal form: every negation sits on a leaf"""
    if isinstance(f, Var):
        return NegVar(f.index) if negate else f
    if isinstance(f, NegVar):
        return Var(f.index) if negate else f
    if isinstance(f, Not):
        return push_negations(f.child, not negate)
    if isinstance(f, And):
        left, right = push_negations(f.left, negate), push_negations(f.right, negate)
        return Or(left, right) if negate else And(left, right)
    if isinstance(f, Or):
        left, right = push_negations(f.left, negate), push_negations(f.right, negate)
        return And(left, right) if negate else Or(left, right)
    raise FormulaError(f"unknown formula node: {type(f).__name__}")


def _clauses(f: Formula, cap: int) -> List[Tuple[Leaf, ...]]:
    if isinstance(f, (Var, NegVar)):
        return [(f,)]
    if isinstance(f, And):
        left, right = _clauses(f.left, cap), _clauses(f.right, cap)
        if len(left) + len(right) > cap:
            raise SizeExplosion(f"CNF would exceed {cap} clauses")
        return left + right
    if isinstance(f, Or):
        left, right = _clauses(f.left, cap), _clauses(f.right, cap)
        if len(left) * len(right) > cap:
            raise SizeExplosion(f"CNF would exceed {cap} clauses")
        # distributivity: (AND c1i) | (AND c2j) = AND over i,j of (c1i | c2j)
        return [c1 + c2 for c1 in left for c2 in right]
    if isinstance(f, Not):
        raise FormulaError("to_cnf needs a Not-free formula; run push_negations first")
    raise FormulaError(f"unknown formula node: {type(f).__name__}")


def to_cnf(f: Formula, cap: int = DEFAULT_CNF_CLAUSE_CAP) -> CnfFormula:
    """Structural CNF transcription; no clause deduplication or absorption"""
    return CnfFormula(tuple(_clauses(f, cap)))


def leaves(f: Union[Formula, CnfFormula]) -> FrozenSet[Leaf]:
    if isinstance(f, CnfFormula):
        return f.leaves()
    if isinstance(f, (Var, NegVar)):
        return frozenset([f])
    if isinstance(f, Not):
        return leaves(f.child)
    return leaves(f.left) | leaves(f.right)


def count_not_nodes(f: Formula) -> int:
    if isinstance(f, (Var, NegVar)):
        return 0
    if isinstance(f, Not):
        return 1 + count_not_nodes(f.child)
    return count_not_nodes(f.left) + count_not_nodes(f.right)


def render(f: Union[Formula, CnfFormula]) -> str:
    """Infix text: `x3`, `~x3`, `&`, `|`, `!(...)`"""
    if isinstance(f, CnfFormula):
        return ' & '.join('(' + ' | '.join(render(leaf) for leaf in clause) + ')'
                          for clause in f.clauses)
    if isinstance(f, Var):
        return f"x{f.index}"
    if isinstance(f, NegVar):
        return f"~x{f.index}"
    if isinstance(f, Not):
        return f"!({render(f.child)})"
    symbol = '&' if isinstance(f, And) else '|'
    return f"({render(f.left)} {symbol} {render(f.right)})"
