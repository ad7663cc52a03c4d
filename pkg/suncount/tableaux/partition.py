from functools import total_ordering
from typing import Iterable, Iterator, List, Optional, Tuple

from . import TableauValidationError


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers, the shape of a Young tableau

    Partitions are ordered reverse-lexicographically, i.e. (3) < (2, 1) < (1, 1, 1), which is the order in which
    :func:`enumerate_partitions` lists them.

    Args:
        parts: Row lengths, top row first

    Raises:
        TableauValidationError: if the parts are not a partition
    """

    __slots__ = ('_parts', )

    def __init__(self, parts: Iterable[int] = ()) -> None:
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise TableauValidationError('Partition {} has non-positive parts'.format(parts))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise TableauValidationError('Partition {} is not in decreasing order'.format(parts))
        self._parts: Tuple[int, ...] = parts

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, index: int) -> int:
        return self._parts[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other: 'Partition') -> bool:
        return self._parts > other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return 'Partition{}'.format(self._parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self._parts) + ')'

    def conjugate(self) -> 'Partition':
        """Column lengths, i.e. the partition of the transposed diagram"""
        if not self._parts:
            return Partition()
        return Partition(sum(1 for p in self._parts if p > j) for j in range(self._parts[0]))

    def hook_lengths(self) -> List[List[int]]:
        """Hook length of every box, row by row"""
        columns = self.conjugate()
        return [[(row - j - 1) + (columns[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(self._parts)]


def _partitions(k: int, largest: int, max_rows: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    if max_rows is not None and max_rows <= 0:
        return
    remaining_rows = None if max_rows is None else max_rows - 1
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first, remaining_rows):
            yield (first, ) + rest


def enumerate_partitions(k: int, max_rows: Optional[int] = None) -> List[Partition]:
    """All partitions of k with at most `max_rows` parts, in reverse-lexicographic order

    Args:
        k: Size
        max_rows: Bound on the number of parts, `None` for no bound
    """
    if k < 0:
        raise ValueError('Size must be non-negative, got {}'.format(k))
    return [Partition(parts) for parts in _partitions(k, k, max_rows)]
