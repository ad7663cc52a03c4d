import io
import csv
import json
import logging

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraElement, as_elements, is_hermitian, split_hermitian_basis
from ..perm_core import DegreeMismatchError
from ..perm_core.permutation import Permutation, compose, cycle_count, inverse
from ..perm_core.enumeration import enumerate_group
from ..utils import check_capacity, rank_cap

log = logging.getLogger(__name__)

Entry = Union[int, Fraction]


def inner_product(a: Permutation, b: Permutation, n_dim: int) -> int:
    """⟨a|b⟩ = tr(a†b) on V^⊗k with dim(V) = N, which is N to the number of cycles of a⁻¹b"""
    return n_dim**cycle_count(compose(inverse(a), b))


def _exact(value: Fraction) -> Entry:
    return value.numerator if value.denominator == 1 else value


def _format_entry(value: Entry) -> str:
    return str(value)


class GramMatrix:
    """Square matrix of scalar products ⟨b_i|b_j⟩ over a recorded basis

    Args:
        entries: Rows of exact integers (or fractions, for bases with non-integer coefficients)
        labels: Text label of every basis element, in row order
        n_dim: The N the scalar products were evaluated at
    """

    def __init__(self, entries: Sequence[Sequence[Entry]], labels: Sequence[str], n_dim: int) -> None:
        self.entries: Tuple[Tuple[Entry, ...], ...] = tuple(tuple(row) for row in entries)
        self.labels: Tuple[str, ...] = tuple(labels)
        self.n_dim: int = n_dim
        if any(len(row) != len(self.entries) for row in self.entries) or len(self.labels) != len(self.entries):
            raise ValueError('Gram matrix has to be square with one label per row')

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i] for i in range(self.size) for j in range(i))

    def to_csv(self) -> str:
        """Entries only, one row per line"""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        for row in self.entries:
            writer.writerow([_format_entry(x) for x in row])
        return out.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        """Serializes the matrix for JSON output; entries become strings so that consumers do not overflow"""
        return {
            'n_dim': self.n_dim,
            'basis': list(self.labels),
            'entries': [[_format_entry(x) for x in row] for row in self.entries]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def __repr__(self) -> str:
        return 'GramMatrix[size={}, N={}]'.format(self.size, self.n_dim)


def element_inner_product(x: AlgebraElement, y: AlgebraElement, n_dim: int) -> Entry:
    """Bilinear extension of :func:`inner_product`, conjugate-linear (here: linear, coefficients are real) in x"""
    total = Fraction(0)
    for a, alpha in x.terms():
        for b, beta in y.terms():
            total += alpha * beta * inner_product(a, b, n_dim)
    return _exact(total)


def gram_matrix(basis: Sequence[AlgebraElement], n_dim: int) -> GramMatrix:
    """Gram matrix entries[i][j] = ⟨basis[i]|basis[j]⟩

    Raises:
        DegreeMismatchError: if the basis elements have different degrees
    """
    degrees = {x.degree for x in basis}
    if len(degrees) > 1:
        raise DegreeMismatchError('Gram basis mixes degrees {}'.format(sorted(degrees)))
    log.debug('Assembling {0}x{0} Gram matrix at N={1}'.format(len(basis), n_dim))
    size = len(basis)
    rows: List[List[Entry]] = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = element_inner_product(basis[i], basis[j], n_dim)
    return GramMatrix(rows, [str(x) for x in basis], n_dim)


def permutation_gram(k: int, n_dim: int, involutions_only: bool = False, cap: Optional[int] = None) -> GramMatrix:
    """Gram matrix of S_k (or of its involutions) at N

    Raises:
        CapacityError: if k exceeds the rank cap
    """
    check_capacity('k', k, rank_cap(cap))
    basis = as_elements(enumerate_group(k))
    if involutions_only:
        basis = [x for x in basis if is_hermitian(x)]
    return gram_matrix(basis, n_dim)


def _integer_rows(rows: Sequence[Sequence[Entry]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators; the rank is unchanged"""
    scaled = []
    for row in rows:
        fractions = [Fraction(x) for x in row]
        lcm = reduce(lambda acc, f: acc * f.denominator // gcd(acc, f.denominator), fractions, 1)
        scaled.append([int(f * lcm) for f in fractions])
    return scaled


def exact_rank(g: Union[GramMatrix, Sequence[Sequence[Entry]]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination

    Every intermediate entry is a minor of the input, so each division by the previous pivot is exact and the
    integers never leave Z.

    Args:
        g: A GramMatrix or any rectangular sequence of rows of integers or fractions

    Returns:
        The rank
    """
    rows = _integer_rows(g.entries if isinstance(g, GramMatrix) else g)
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank]
        p = pivot[col]
        for r in range(rank + 1, n_rows):
            current = rows[r]
            f = current[col]
            updated = [0] * n_cols
            for c in range(col + 1, n_cols):
                updated[c] = (p * current[c] - f * pivot[c]) // previous
            rows[r] = updated
        previous = p
        rank += 1
        if rank == n_rows:
            break
    log.debug('Rank {} for a {}x{} matrix'.format(rank, n_rows, n_cols))
    return rank


def basis_span_rank(k: int, n_dim: int, cap: Optional[int] = None) -> Tuple[int, int]:
    """Ranks of the Gram matrices of H_k ∪ A_k and of S_k at N; equal when the split basis spans the same algebra

    Raises:
        CapacityError: if k exceeds the rank cap
    """
    check_capacity('k', k, rank_cap(cap))
    hermitian, anti = split_hermitian_basis(k)
    split_rank = exact_rank(gram_matrix(hermitian + anti, n_dim))
    group_rank = exact_rank(permutation_gram(k, n_dim, cap=cap))
    return split_rank, group_rank
