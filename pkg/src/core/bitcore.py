"""Packed bitstrings, string sets, column normalization and the closure oracle

Bit positions are 1-based everywhere outside this module; position 1 is the
leftmost character of the text form. Storage packs position p into word
(p-1)//64 at bit (p-1)%64 of little-endian uint64 words, and padding bits
beyond the string length are always zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DegenerateWidth, EmptySet, FormatError, LengthMismatch, LimitExceeded
from ..logging_config import get_bitcore_logger, log_operation

WORD_BITS = 64
DEFAULT_CLOSURE_LIMIT = 2 ** 20

IndexSet = FrozenSet[int]

logger = get_bitcore_logger()


def word_count(length: int) -> int:
    return (length + WORD_BITS - 1) // WORD_BITS


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a bool array along its last axis into uint64 words"""
    bits = np.asarray(bits, dtype=bool)
    length = bits.shape[-1]
    if length == 0:
        return np.zeros(bits.shape[:-1] + (0,), dtype=np.uint64)
    packed = np.packbits(bits, axis=-1, bitorder='little')
    pad = word_count(length) * 8 - packed.shape[-1]
    if pad:
        widths = [(0, 0)] * (packed.ndim - 1) + [(0, pad)]
        packed = np.pad(packed, widths)
    return np.ascontiguousarray(packed).view('<u8').astype(np.uint64)


def unpack_words(words: np.ndarray, length: int) -> np.ndarray:
    """Inverse of pack_bits: bool array of `length` positions along the last axis"""
    if length == 0:
        return np.zeros(words.shape[:-1] + (0,), dtype=bool)
    as_bytes = np.ascontiguousarray(words.astype('<u8')).view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder='little')[..., :length].astype(bool)


def tail_mask(length: int) -> np.ndarray:
    """Word mask with ones exactly on the positions 1..length"""
    mask = np.full(word_count(length), np.iinfo(np.uint64).max, dtype=np.uint64)
    spare = word_count(length) * WORD_BITS - length
    if spare:
        mask[-1] = np.uint64((1 << (WORD_BITS - spare)) - 1)
    return mask


def popcount(words: np.ndarray) -> int:
    """Number of set bits in a packed word array"""
    if words.size == 0:
        return 0
    as_bytes = np.ascontiguousarray(words.astype('<u8')).view(np.uint8)
    return int(np.unpackbits(as_bytes).sum())


class BitString:
    """Immutable fixed-length bit vector stored as packed words"""

    __slots__ = ('_words', '_length', '_hash')

    def __init__(self, words: np.ndarray, length: int):
        words = np.asarray(words, dtype=np.uint64)
        if words.shape != (word_count(length),):
            raise ValueError(f"{length} bits need {word_count(length)} words, got shape {words.shape}")
        if length and np.any(words & ~tail_mask(length)):
            raise ValueError("padding bits beyond the string length must be zero")
        words = words.copy() if words.flags.writeable else words
        words.flags.writeable = False
        self._words = words
        self._length = length
        self._hash = None

    @classmethod
    def from_text(cls, text: str) -> 'BitString':
        text = text.strip()
        if not text or set(text) - {'0', '1'}:
            raise FormatError(f"not a bitstring literal: {text!r}")
        bits = np.frombuffer(text.encode('ascii'), dtype=np.uint8) == ord('1')
        return cls(pack_bits(bits), len(text))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> 'BitString':
        array = np.asarray(list(bits), dtype=np.uint8)
        if np.any(array > 1):
            raise FormatError("bits must be 0 or 1")
        return cls(pack_bits(array.astype(bool)), len(array))

    @classmethod
    def zeros(cls, length: int) -> 'BitString':
        return cls(np.zeros(word_count(length), dtype=np.uint64), length)

    @classmethod
    def ones(cls, length: int) -> 'BitString':
        return cls(tail_mask(length), length)

    @property
    def length(self) -> int:
        return self._length

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def bits(self) -> np.ndarray:
        return unpack_words(self._words, self._length)

    @property
    def key(self) -> bytes:
        """Canonical hash key of the packed words"""
        return self._words.tobytes()

    def __len__(self) -> int:
        return self._length

    def __getitem__(self, position: int) -> int:
        if not 1 <= position <= self._length:
            raise IndexError(f"bit position {position} outside 1..{self._length}")
        offset = position - 1
        return int(self._words[offset // WORD_BITS] >> np.uint64(offset % WORD_BITS)) & 1

    def _check_length(self, other: 'BitString') -> None:
        if self._length != other._length:
            raise LengthMismatch(f"cannot combine {self._length}-bit and {other._length}-bit strings")

    def __and__(self, other: 'BitString') -> 'BitString':
        self._check_length(other)
        return BitString(self._words & other._words, self._length)

    def __or__(self, other: 'BitString') -> 'BitString':
        self._check_length(other)
        return BitString(self._words | other._words, self._length)

    def __invert__(self) -> 'BitString':
        return BitString(~self._words & tail_mask(self._length), self._length)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._length == other._length and bool(np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._length, self.key))
        return self._hash

    def __lt__(self, other: 'BitString') -> bool:
        return self.to_text() < other.to_text()

    def popcount(self) -> int:
        return popcount(self._words)

    def is_all_ones(self) -> bool:
        return self.popcount() == self._length

    def is_all_zeros(self) -> bool:
        return not np.any(self._words)

    def zero_set(self) -> IndexSet:
        return frozenset(int(p) + 1 for p in np.flatnonzero(~self.bits))

    def one_set(self) -> IndexSet:
        return frozenset(int(p) + 1 for p in np.flatnonzero(self.bits))

    def to_text(self) -> str:
        return ''.join('1' if b else '0' for b in self.bits)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BitString('{self.to_text()}')"


def bit_and(a: BitString, b: BitString) -> BitString:
    return a & b


def bit_or(a: BitString, b: BitString) -> BitString:
    return a | b


def bit_not(a: BitString) -> BitString:
    return ~a


def zero_set(x: BitString) -> IndexSet:
    """Positions where x is 0"""
    return x.zero_set()


def one_set(x: BitString) -> IndexSet:
    """Positions where x is 1"""
    return x.one_set()


class StringSet:
    """Ordered collection of equal-length bitstrings; members keep their input index"""

    def __init__(self, strings: Sequence[BitString], width: Optional[int] = None):
        strings = tuple(strings)
        if width is None:
            width = strings[0].length if strings else 0
        for index, string in enumerate(strings):
            if string.length != width:
                raise LengthMismatch(f"string {index} has {string.length} bits, expected {width}")
        self._strings = strings
        self._width = width

    @classmethod
    def from_texts(cls, texts: Iterable[str]) -> 'StringSet':
        return cls([BitString.from_text(text) for text in texts])

    @classmethod
    def from_bit_matrix(cls, bits: np.ndarray) -> 'StringSet':
        """Build from an (n, m) bool matrix, one row per string"""
        bits = np.asarray(bits, dtype=bool)
        n, width = bits.shape
        matrix = pack_bits(bits) if n else np.zeros((0, word_count(width)), dtype=np.uint64)
        return cls([BitString(row, width) for row in matrix], width=width)

    @property
    def width(self) -> int:
        return self._width

    @property
    def strings(self) -> Tuple[BitString, ...]:
        return self._strings

    @property
    def n(self) -> int:
        return len(self._strings)

    def __len__(self) -> int:
        return len(self._strings)

    def __iter__(self) -> Iterator[BitString]:
        return iter(self._strings)

    def __getitem__(self, index: int) -> BitString:
        return self._strings[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StringSet):
            return NotImplemented
        return self._width == other._width and self._strings == other._strings

    def __repr__(self) -> str:
        return f"StringSet({[s.to_text() for s in self._strings]})"

    @cached_property
    def matrix(self) -> np.ndarray:
        """(n, words) packed matrix"""
        if not self._strings:
            return np.zeros((0, word_count(self._width)), dtype=np.uint64)
        matrix = np.stack([s.words for s in self._strings])
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def bit_matrix(self) -> np.ndarray:
        """(n, m) bool matrix; column p-1 holds position p"""
        bits = unpack_words(self.matrix, self._width)
        bits.flags.writeable = False
        return bits

    def subset(self, indices: Iterable[int]) -> 'StringSet':
        return StringSet([self._strings[i] for i in indices], width=self._width)

    def distinct(self) -> 'StringSet':
        """Members without repeats, first occurrence order"""
        seen = set()
        kept = []
        for string in self._strings:
            if string not in seen:
                seen.add(string)
                kept.append(string)
        return StringSet(kept, width=self._width)

    def contains_all_ones(self) -> bool:
        return any(s.is_all_ones() for s in self._strings)

    def to_texts(self) -> List[str]:
        return [s.to_text() for s in self._strings]


def require_algorithm_input(w: StringSet) -> None:
    """Reject the inputs no algorithm is defined on"""
    if w.n == 0:
        raise EmptySet("string set has no members")
    if w.width == 0:
        raise DegenerateWidth("string set has width 0")


def complement_set(w: StringSet) -> StringSet:
    """The set W-bar: complement of every member, same order"""
    return StringSet([~s for s in w], width=w.width)


def augment_with_complements(w: StringSet) -> Tuple[StringSet, Tuple[Tuple[int, bool], ...]]:
    """W plus the complements not already present

    All original members are kept with their indices; complements are
    appended in member order when they are new. origin[k] is the
    (original index, negated) pair that string k of the result stands for.
    """
    present = set(w.strings)
    strings = list(w.strings)
    origin = [(index, False) for index in range(w.n)]
    for index, string in enumerate(w.strings):
        flipped = ~string
        if flipped not in present:
            present.add(flipped)
            strings.append(flipped)
            origin.append((index, True))
    return StringSet(strings, width=w.width), tuple(origin)


@dataclass(frozen=True)
class NormalizationMap:
    """Reversible record of the constant columns normalize removed"""
    original_width: int
    kept_columns: Tuple[int, ...]
    forced_bits: Dict[int, int] = field(default_factory=dict)


def normalize(w: StringSet) -> Tuple[StringSet, NormalizationMap]:
    """Drop the columns on which every member agrees"""
    if w.n == 0:
        raise EmptySet("cannot normalize an empty string set")
    bits = w.bit_matrix
    all_ones = bits.all(axis=0)
    all_zeros = ~bits.any(axis=0)
    constant = all_ones | all_zeros

    kept = tuple(int(p) + 1 for p in np.flatnonzero(~constant))
    forced = {int(p) + 1: int(all_ones[p]) for p in np.flatnonzero(constant)}
    reduced = StringSet.from_bit_matrix(bits[:, ~constant])

    log_operation(logger, 'normalize', n=w.n, width=w.width, kept=len(kept))
    return reduced, NormalizationMap(w.width, kept, forced)


def reinsert(x: BitString, nmap: NormalizationMap) -> BitString:
    """Restore a kept-width string to the original width"""
    if x.length != len(nmap.kept_columns):
        raise LengthMismatch(f"expected {len(nmap.kept_columns)} kept bits, got {x.length}")
    bits = np.zeros(nmap.original_width, dtype=bool)
    if nmap.kept_columns:
        bits[np.asarray(nmap.kept_columns) - 1] = x.bits
    for position, value in nmap.forced_bits.items():
        bits[position - 1] = bool(value)
    return BitString(pack_bits(bits), nmap.original_width)


def closure(w: StringSet, allow_negation: bool = False,
            limit: int = DEFAULT_CLOSURE_LIMIT) -> FrozenSet[BitString]:
    """Every string some AND/OR formula over w produces (brute force)

    With allow_negation the seeds also include each member's complement.
    Raises LimitExceeded as soon as the fixpoint holds more than `limit`
    strings.
    """
    require_algorithm_input(w)
    seeds = augment_with_complements(w)[0] if allow_negation else w

    words = word_count(w.width)
    capacity = max(16, seeds.n)
    buffer = np.empty((capacity, words), dtype=np.uint64)
    index: Dict[bytes, int] = {}
    count = 0

    def add(row: np.ndarray) -> None:
        nonlocal buffer, capacity, count
        key = row.tobytes()
        if key in index:
            return
        if count >= limit:
            raise LimitExceeded(f"closure grew past {limit} strings")
        if count == capacity:
            buffer = np.concatenate([buffer, np.empty_like(buffer)])
            capacity *= 2
        buffer[count] = row
        index[key] = count
        count += 1

    for row in seeds.matrix:
        add(row)

    # Each member is combined with every member admitted before it when it is
    # popped, so every unordered pair meets exactly once.
    cursor = 0
    while cursor < count:
        x = buffer[cursor].copy()
        current = buffer[:cursor + 1]
        candidates = np.unique(np.concatenate([current & x, current | x]), axis=0)
        for row in candidates:
            add(row)
        cursor += 1

    log_operation(logger, 'closure', n=w.n, width=w.width, negation=allow_negation, size=count)
    return frozenset(BitString(buffer[k].copy(), w.width) for k in range(count))
