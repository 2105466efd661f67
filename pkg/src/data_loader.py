"""Text formats for string sets, posets and set-cover instances

String set: one bitstring per line, leftmost character is position 1.
Poset: first line "p", then lines "i j" meaning i <= j (1-based).
Set cover: first line "m n", then n lines of space-separated elements.
In all three, blank lines and lines starting with '#' are skipped.
"""
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

from .core.bitcore import BitString, StringSet
from .core.counting import AbstractPoset, Poset, poset_from_relations
from .core.errors import FormatError, InvalidElement, InvalidPoset, LengthMismatch
from .logging_config import get_data_loader_logger

PathLike = Union[str, Path]

logger = get_data_loader_logger()


def _data_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        yield number, line


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except FileNotFoundError:
        raise FormatError(f"input file not found: {path}")
    except UnicodeDecodeError as e:
        raise FormatError(f"input file {path} is not UTF-8 text: {e}")


def parse_string_set(text: str, source: str = '<text>') -> StringSet:
    strings: List[BitString] = []
    width = None
    for number, line in _data_lines(text):
        try:
            string = BitString.from_text(line)
        except FormatError:
            raise FormatError(f"{source}:{number}: not a bitstring: {line[:40]!r}")
        if width is None:
            width = string.length
        elif string.length != width:
            raise LengthMismatch(f"{source}:{number}: {string.length} bits, earlier lines have {width}")
        strings.append(string)
    logger.debug(f"Parsed {len(strings)} strings of width {width or 0} from {source}")
    return StringSet(strings, width=width or 0)


def load_string_set(path: PathLike) -> StringSet:
    """Load a string-set file"""
    string_set = parse_string_set(_read(path), str(path))
    logger.info(f"Loaded {string_set.n} strings (width {string_set.width}) from {path}")
    return string_set


def format_string_set(w: StringSet) -> str:
    return ''.join(f"{text}\n" for text in w.to_texts())


def save_string_set(w: StringSet, path: PathLike) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(format_string_set(w), encoding='utf-8')
    logger.info(f"Saved {w.n} strings to {path}")


def _integers(line: str, source: str, number: int) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise FormatError(f"{source}:{number}: expected integers, got {line[:40]!r}")


def parse_poset(text: str, source: str = '<text>') -> AbstractPoset:
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise FormatError(f"{source}: missing poset size line")
    number, line = header
    values = _integers(line, source, number)
    if len(values) != 1 or values[0] < 1:
        raise FormatError(f"{source}:{number}: first line must be a positive element count")
    size = values[0]

    pairs = []
    for number, line in lines:
        values = _integers(line, source, number)
        if len(values) != 2:
            raise FormatError(f"{source}:{number}: relation lines hold two elements, got {len(values)}")
        pairs.append((values[0], values[1]))
    try:
        poset = poset_from_relations(size, pairs)
    except InvalidPoset as e:
        raise InvalidPoset(f"{source}: {e.detail}")
    logger.debug(f"Parsed poset of {size} elements with {len(pairs)} relation lines from {source}")
    return poset


def load_poset(path: PathLike) -> AbstractPoset:
    """Load a poset file; the relation is closed reflexively and transitively"""
    return parse_poset(_read(path), str(path))


def format_poset(p: Poset) -> str:
    """Covering pairs are not computed; every strict relation is written"""
    lines = [f"{p.size}"] + [f"{i} {j}" for i, j in p.relations()]
    return '\n'.join(lines) + '\n'


def parse_msc(text: str, source: str = '<text>') -> Tuple[int, List[frozenset]]:
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise FormatError(f"{source}: missing 'm n' header")
    number, line = header
    values = _integers(line, source, number)
    if len(values) != 2 or values[0] < 1 or values[1] < 0:
        raise FormatError(f"{source}:{number}: header must be 'm n' with m >= 1")
    m, n = values

    family = []
    for number, line in lines:
        members = _integers(line, source, number)
        stray = [u for u in members if not 1 <= u <= m]
        if stray:
            raise InvalidElement(f"{source}:{number}: elements {stray} outside 1..{m}")
        family.append(frozenset(members))
    if len(family) != n:
        raise FormatError(f"{source}: header announces {n} subsets, found {len(family)}")
    return m, family


def load_msc(path: PathLike) -> Tuple[int, List[frozenset]]:
    """Load a set-cover instance as (universe size, family)"""
    return parse_msc(_read(path), str(path))


def format_msc(universe_size: int, family: Iterable[Iterable[int]]) -> str:
    family = [sorted(f) for f in family]
    lines = [f"{universe_size} {len(family)}"] + [' '.join(str(u) for u in f) for f in family]
    return '\n'.join(lines) + '\n'
