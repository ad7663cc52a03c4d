import math
import logging

from typing import Iterator, List, Optional, Sequence, Tuple

from . import TableauValidationError
from .partition import Partition, enumerate_partitions
from ..utils import enumeration_cap, check_capacity

log = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def is_standard(rows: Sequence[Sequence[int]]) -> bool:
    """Validity predicate for standard Young tableaux

    True iff the rows have weakly decreasing lengths, contain exactly 1..k, and increase strictly along rows and down
    columns.
    """
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths) or any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    entries = sorted(x for r in rows for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if j > 0 and row[j - 1] >= x:
                return False
            if i > 0 and rows[i - 1][j] >= x:
                return False
    return True


class StandardTableau:
    """A standard Young tableau in English notation (rows top-justified)

    Args:
        rows: Rows of the tableau, top row first

    Raises:
        TableauValidationError: if the filling is not standard
    """

    __slots__ = ('_rows', )

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        frozen: Rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not is_standard(frozen):
            raise TableauValidationError('{} is not a standard Young tableau'.format(format_rows(frozen)))
        self._rows = frozen

    @property
    def rows(self) -> Rows:
        return self._rows

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self._rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self._rows)

    def position(self, entry: int) -> Tuple[int, int]:
        """(row, column) of `entry`, 0-based"""
        for i, row in enumerate(self._rows):
            if entry in row:
                return i, row.index(entry)
        raise ValueError('{} could not be found in tableau'.format(entry))

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return 'StandardTableau[{}]'.format(format_rows(self._rows))

    def __str__(self) -> str:
        return format_rows(self._rows)


def format_rows(rows: Sequence[Sequence[int]]) -> str:
    return '; '.join(' '.join(str(x) for x in row) for row in rows)


def format_tableau(t: StandardTableau) -> str:
    """Text encoding "1 3 4 9; 2 7; 5 8; 6"; the empty tableau is the empty string"""
    return format_rows(t.rows)


def parse_tableau(text: str) -> StandardTableau:
    """Inverse of :func:`format_tableau`

    Raises:
        TableauValidationError: for malformed text or a non-standard filling
    """
    if not text.strip():
        return StandardTableau(())
    rows = []
    for chunk in text.split(';'):
        tokens = chunk.split()
        if not tokens or not all(t.isdigit() for t in tokens):
            raise TableauValidationError('Malformed tableau row {!r} in {!r}'.format(chunk.strip(), text))
        rows.append([int(t) for t in tokens])
    return StandardTableau(rows)


def hook_count(shape: Partition) -> int:
    """Number f_λ of standard tableaux of a shape by the hook length formula, k! / (product of hook lengths)"""
    hooks = 1
    for row in shape.hook_lengths():
        for h in row:
            hooks *= h
    return math.factorial(shape.size) // hooks


def _fill(shape: Tuple[int, ...], rows: List[List[int]], entry: int) -> Iterator[Rows]:
    if entry > sum(shape):
        yield tuple(tuple(r) for r in rows)
        return
    for i, length in enumerate(shape):
        filled = len(rows[i])
        if filled < length and (i == 0 or len(rows[i - 1]) > filled):
            rows[i].append(entry)
            yield from _fill(shape, rows, entry + 1)
            rows[i].pop()


def enumerate_syt(shape: Partition, cap: Optional[int] = None) -> List[StandardTableau]:
    """All standard tableaux of a shape

    Entries 1..k are placed in increasing order; at every step the candidate rows are tried top to bottom, which
    fixes a deterministic order ([1 2; 3] before [1 3; 2]).

    Raises:
        CapacityError: if the size of the shape exceeds the enumeration cap
    """
    check_capacity('shape size', shape.size, enumeration_cap(cap))
    log.debug('Enumerating standard tableaux of shape {}'.format(shape))
    return [StandardTableau(rows) for rows in _fill(shape.parts, [[] for _ in shape.parts], 1)]


def syt_total(k: int, max_rows: Optional[int] = None) -> int:
    """Number of standard tableaux with k boxes and at most `max_rows` rows"""
    return sum(hook_count(shape) for shape in enumerate_partitions(k, max_rows))


def syt_square_total(k: int, max_rows: Optional[int] = None) -> int:
    """Sum of f_λ² over the partitions of k with at most `max_rows` rows; k! when unrestricted"""
    return sum(hook_count(shape)**2 for shape in enumerate_partitions(k, max_rows))
