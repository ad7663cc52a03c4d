import re
import logging

from bisect import bisect_left, bisect_right
from typing import List, Optional

from sortedcontainers import SortedDict

from ..perm_core.permutation import Permutation, inverse
from ..perm_core.enumeration import enumerate_group
from ..tableaux import TableauValidationError
from ..tableaux.partition import Partition
from ..tableaux.standard import StandardTableau, format_tableau, parse_tableau

log = logging.getLogger(__name__)

_PAIR = re.compile(r'^\s*P=(?P<p>[^|]*)\|\s*Q=(?P<q>.*)$')


class TableauPair:
    """The insertion tableau P and recording tableau Q of a permutation

    Args:
        p: Insertion tableau
        q: Recording tableau

    Raises:
        TableauValidationError: if the two tableaux have different shapes
    """

    __slots__ = ('p', 'q')

    def __init__(self, p: StandardTableau, q: StandardTableau) -> None:
        if p.shape != q.shape:
            raise TableauValidationError('P has shape {} but Q has shape {}'.format(p.shape, q.shape))
        self.p = p
        self.q = q

    @property
    def shape(self) -> Partition:
        return self.p.shape

    @property
    def is_diagonal(self) -> bool:
        return self.p == self.q

    def transposed(self) -> 'TableauPair':
        return TableauPair(self.q, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, TableauPair) and self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __repr__(self) -> str:
        return 'TableauPair[{}]'.format(format_pair(self))


def format_pair(pair: TableauPair) -> str:
    return 'P={} | Q={}'.format(format_tableau(pair.p), format_tableau(pair.q))


def parse_pair(text: str) -> TableauPair:
    match = _PAIR.match(text)
    if match is None:
        raise TableauValidationError('Malformed tableau pair {!r}, expected "P=<tableau> | Q=<tableau>"'.format(text))
    return TableauPair(parse_tableau(match.group('p')), parse_tableau(match.group('q')))


def rs_map(a: Permutation) -> TableauPair:
    """Row insertion of a(1), ..., a(k); the box created at step t is recorded with entry t in Q"""
    p: List[List[int]] = []
    q: List[List[int]] = []
    for t, x in enumerate(a.images, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([t])
                break
            current = p[row]
            pos = bisect_right(current, x)
            if pos == len(current):
                current.append(x)
                q[row].append(t)
                break
            x, current[pos] = current[pos], x
            row += 1
    return TableauPair(StandardTableau(p), StandardTableau(q))


def rs_inverse(pair: TableauPair) -> Permutation:
    """Reverse bumping: remove k, k-1, ..., 1 from Q and bump the matching corner of P back out of the top row

    Raises:
        TableauValidationError: if the tableaux are invalid or of different shapes
    """
    if pair.p.shape != pair.q.shape:
        raise TableauValidationError('P and Q must have the same shape')
    p = [list(r) for r in pair.p.rows]
    q = [list(r) for r in pair.q.rows]
    k = pair.p.size
    images = [0] * k
    for t in range(k, 0, -1):
        row = next(i for i, r in enumerate(q) if r and r[-1] == t)
        q[row].pop()
        x = p[row].pop()
        for above in range(row - 1, -1, -1):
            current = p[above]
            pos = bisect_left(current, x) - 1
            x, current[pos] = current[pos], x
        images[t - 1] = x
        if not q[row]:
            del q[row]
            del p[row]
    return Permutation(images)


def check_schuetzenberger(k: int, cap: Optional[int] = None) -> bool:
    """True iff rs_map(inverse(ρ)) = (Q_ρ, P_ρ) for every ρ in S_k"""
    for a in enumerate_group(k, cap=cap):
        if rs_map(inverse(a)) != rs_map(a).transposed():
            log.debug('Transpose symmetry violated by {}'.format(a))
            return False
    return True


def diagonal_permutations(k: int, cap: Optional[int] = None) -> List[Permutation]:
    """Permutations of S_k with P_ρ = Q_ρ, in enumeration order"""
    return [a for a in enumerate_group(k, cap=cap) if rs_map(a).is_diagonal]


def shape_distribution(k: int, cap: Optional[int] = None) -> SortedDict:
    """Number of permutations of S_k per RS shape, keyed by partition in reverse-lexicographic order"""
    counts = SortedDict()
    for a in enumerate_group(k, cap=cap):
        shape = rs_map(a).shape
        counts[shape] = counts.get(shape, 0) + 1
    return counts
