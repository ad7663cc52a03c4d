from functools import total_ordering
from typing import Iterable, Iterator, List, Tuple

from . import DegreeMismatchError


@total_ordering
class Permutation:
    """A bijection of {1..k} in one-line notation

    `images[i - 1]` is the image of `i`. Instances are immutable, hashable and ordered lexicographically by their
    one-line notation.

    Args:
        images: The k distinct images of 1..k
    """

    __slots__ = ('_images', )

    def __init__(self, images: Iterable[int]) -> None:
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError('{} is not a permutation of 1..{}'.format(images, len(images)))
        self._images: Tuple[int, ...] = images

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def __len__(self) -> int:
        return len(self._images)

    def __iter__(self) -> Iterator[int]:
        return iter(self._images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __lt__(self, other: 'Permutation') -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def __repr__(self) -> str:
        return 'Permutation[{}]'.format(' '.join(str(x) for x in self._images))


class CycleType:
    """Cycle lengths of a permutation, weakly decreasing; a partition of the degree"""

    __slots__ = ('parts', )

    def __init__(self, parts: Iterable[int]) -> None:
        self.parts: Tuple[int, ...] = tuple(sorted((int(p) for p in parts), reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleType) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return 'CycleType{}'.format(self.parts)


def identity(k: int) -> Permutation:
    return Permutation(range(1, k + 1))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Composition a∘b, the right factor acts first: (a∘b)(i) = a(b(i))

    Raises:
        DegreeMismatchError: if a and b act on different sets
    """
    if a.degree != b.degree:
        raise DegreeMismatchError('Cannot compose permutations of degree {} and {}'.format(a.degree, b.degree))
    return Permutation(a(i) for i in b.images)


def inverse(a: Permutation) -> Permutation:
    images = [0] * a.degree
    for i, x in enumerate(a.images, start=1):
        images[x - 1] = i
    return Permutation(images)


def cycles(a: Permutation) -> List[Tuple[int, ...]]:
    """Disjoint cycles of `a`, fixed points included, each starting at its smallest element, ordered by that element"""
    seen = [False] * (a.degree + 1)
    result: List[Tuple[int, ...]] = []
    for start in range(1, a.degree + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = a(i)
        result.append(tuple(cycle))
    return result


def cycle_count(a: Permutation) -> int:
    return len(cycles(a))


def cycle_type(a: Permutation) -> CycleType:
    return CycleType(len(c) for c in cycles(a))


def is_involution(a: Permutation) -> bool:
    return all(a(a(i)) == i for i in range(1, a.degree + 1))
