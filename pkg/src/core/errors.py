"""Error hierarchy shared by every engine and the CLI"""


class BitRepError(Exception):
    """Base error; `code` is the machine-readable name, `exit_code` the CLI status"""

    code = 'internal_error'
    exit_code = 1

    def __init__(self, detail: str = ''):
        super().__init__(detail)
        self.detail = detail

    def to_dict(self) -> dict:
        return {'error': self.code, 'detail': self.detail}


# Malformed or out-of-contract input (exit 2)

class FormatError(BitRepError):
    """Input file or literal does not parse"""
    code = 'malformed_input'
    exit_code = 2


class LengthMismatch(BitRepError):
    """Bitstrings of different widths were combined"""
    code = 'length_mismatch'
    exit_code = 2


class EmptySet(BitRepError):
    """A string set with no members was given to an algorithm"""
    code = 'empty_set'
    exit_code = 2


class DegenerateWidth(BitRepError):
    """A width-0 string set reached an operation other than counting"""
    code = 'degenerate_width'
    exit_code = 2


class IndexOutOfRange(BitRepError):
    """A formula leaf refers to a string the set does not have"""
    code = 'index_out_of_range'
    exit_code = 2


class FormulaError(BitRepError):
    """A formula does not meet an operation's structural precondition"""
    code = 'formula_error'
    exit_code = 2


class InvalidPoset(BitRepError):
    """Relation is not a partial order or refers to unknown elements"""
    code = 'invalid_poset'
    exit_code = 2


class InvalidElement(BitRepError):
    """A set-cover family member lies outside the universe"""
    code = 'invalid_element'
    exit_code = 2


class Uncoverable(BitRepError):
    """The subsets of a cover instance do not cover its universe"""
    code = 'uncoverable'
    exit_code = 2


class UsageError(BitRepError):
    """Command line arguments the CLI cannot act on"""
    code = 'usage_error'
    exit_code = 2


# Resource bounds (exit 3)

class LimitExceeded(BitRepError):
    """Closure fixpoint grew past its element limit"""
    code = 'limit_exceeded'
    exit_code = 3


class SizeExplosion(BitRepError):
    """CNF conversion would exceed the clause cap"""
    code = 'size_explosion'
    exit_code = 3


class TooLarge(BitRepError):
    """Instance exceeds the enumeration bound of an exact search"""
    code = 'too_large'
    exit_code = 3


# Optimization target impossible (exit 4)

class NotRepresentable(BitRepError):
    """Minimum subset asked for a target the set cannot generate"""
    code = 'not_representable'
    exit_code = 4


class InternalInvariantViolation(BitRepError):
    """A structural guarantee of the construction did not hold"""
    code = 'internal_invariant'
    exit_code = 1
