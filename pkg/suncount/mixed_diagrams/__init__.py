"""
This module offers the primitive invariants S_{m,n} of SU(N) on V^⊗m ⊗ (V*)^⊗n as strand diagrams: every leg on
the left (output) and right (input) column is joined to exactly one other leg. Heights 1..m are V slots, heights
m+1..m+n are V* slots.
"""

from enum import Enum
from functools import total_ordering

__all__ = ['diagram']


class DiagramError(ValueError):
    """Raised for malformed diagram text, invalid strand sets and shape mismatches

    Args:
        message: Error message
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


class Side(Enum):
    Right = 'R'
    Left = 'L'

    def flipped(self) -> 'Side':
        return Side.Left if self is Side.Right else Side.Right


_SIDE_ORDER = {Side.Right: 0, Side.Left: 1}


class MixedShape:
    """The space V^⊗m ⊗ (V*)^⊗n

    Args:
        m: Number of V slots
        n: Number of V* slots
    """

    __slots__ = ('m', 'n')

    def __init__(self, m: int, n: int) -> None:
        if m < 0 or n < 0:
            raise DiagramError('Slot counts must be non-negative, got m={}, n={}'.format(m, n))
        self.m: int = m
        self.n: int = n

    @property
    def size(self) -> int:
        return self.m + self.n

    def is_dual(self, height: int) -> bool:
        return height > self.m

    def __eq__(self, other) -> bool:
        return isinstance(other, MixedShape) and self.m == other.m and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.m, self.n))

    def __repr__(self) -> str:
        return 'MixedShape[m={}, n={}]'.format(self.m, self.n)

    def __str__(self) -> str:
        return '({},{})'.format(self.m, self.n)


@total_ordering
class Leg:
    """A strand endpoint; Left legs carry output indices, Right legs input indices. Right legs sort first."""

    __slots__ = ('side', 'height')

    def __init__(self, side: Side, height: int) -> None:
        self.side: Side = side
        self.height: int = height

    def flipped(self) -> 'Leg':
        return Leg(self.side.flipped(), self.height)

    def _key(self):
        return _SIDE_ORDER[self.side], self.height

    def __eq__(self, other) -> bool:
        return isinstance(other, Leg) and self._key() == other._key()

    def __lt__(self, other: 'Leg') -> bool:
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return 'Leg[{}]'.format(self)

    def __str__(self) -> str:
        return '{}{}'.format(self.side.value, self.height)
