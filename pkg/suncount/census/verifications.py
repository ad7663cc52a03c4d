import math
import logging

from typing import List, Optional, Tuple

from . import CensusReport
from ..perm_core.permutation import Permutation
from ..perm_core.enumeration import InvolutionMethod, enumerate_group, involution_count
from ..tableaux.partition import enumerate_partitions
from ..tableaux.standard import hook_count, syt_square_total, syt_total
from ..rs_correspondence.insertion import TableauPair, diagonal_permutations, rs_map, shape_distribution
from ..tensor_invariants.algebra import split_hermitian_basis
from ..tensor_invariants.gram import basis_span_rank, exact_rank, permutation_gram
from ..mixed_diagrams import MixedShape
from ..mixed_diagrams.diagram import enumerate_mixed, invertible_count, is_hermitian, mixed_gram_matrix
from ..utils import check_capacity, enumeration_cap, rank_cap

log = logging.getLogger(__name__)


def verify_theorem(k: int, cap: Optional[int] = None) -> CensusReport:
    """The number of irreducible representations of SU(N) on V^⊗k (N ≥ k) equals the number of involutions of S_k

    Four independent counts have to agree: brute force involutions, the involution recurrence, standard tableaux
    by the hook length formula and the permutations with P = Q under Robinson-Schensted.

    Raises:
        CapacityError: if k exceeds the enumeration cap
    """
    check_capacity('k', k, enumeration_cap(cap))
    log.debug('Verifying the involution count for k={}'.format(k))
    values = [
        ('brute', involution_count(k, InvolutionMethod.Brute, cap=cap)),
        ('recurrence', involution_count(k, InvolutionMethod.Recurrence)),
        ('syt_total', syt_total(k)),
        ('rs_diagonal', len(diagonal_permutations(k, cap=cap))),
    ]
    return CensusReport('theorem', {'k': k}, values)


def verify_proof_counts(k: int, cap: Optional[int] = None) -> CensusReport:
    """Sizes of the bases in the counting argument

    With n_P involutions and n_T = k! - n_P other permutations, the Hermitian part of the split basis has
    n_P + n_T/2 elements and the anti-Hermitian part n_T/2. The projectors of a Hermitian projector basis number
    k! - n_T, which has to be the number of standard tableaux; the transition operators number k! - Σ f_λ = n_T, and
    Σ f_λ² = k!.

    Raises:
        CapacityError: if k exceeds the enumeration cap
    """
    check_capacity('k', k, enumeration_cap(cap))
    hermitian, anti = split_hermitian_basis(k, cap=cap)
    order = math.factorial(k)
    n_p = involution_count(k, InvolutionMethod.Brute, cap=cap)
    n_t = order - n_p
    problems = []
    if n_t % 2:
        problems.append('n_T = {} is odd, non-Hermitian permutations do not pair up'.format(n_t))
    values = [
        ('n_P', n_p),
        ('n_T', n_t),
        ('H_k', len(hermitian)),
        ('n_P+n_T/2', n_p + n_t // 2),
        ('A_k', len(anti)),
        ('n_T/2', n_t // 2),
        ('projectors', order - n_t),
        ('syt_total', syt_total(k)),
        ('k!', order),
        ('sum_f2', syt_square_total(k)),
        ('transitions', order - syt_total(k)),
    ]
    groups = [['H_k', 'n_P+n_T/2'], ['A_k', 'n_T/2'], ['projectors', 'syt_total'], ['k!', 'sum_f2'],
              ['transitions', 'n_T']]
    return CensusReport('proof-counts', {'k': k}, values, groups, problems)


def verify_corollary(m: int, n: int, cap: Optional[int] = None) -> CensusReport:
    """The number of Hermitian primitives of S_{m,n} depends on m+n only: it is the number of involutions of S_{m+n}

    Raises:
        CapacityError: if m+n exceeds the enumeration cap
    """
    shape = MixedShape(m, n)
    diagrams = enumerate_mixed(shape, cap=cap)
    values = [
        ('hermitian_diagrams', sum(1 for d in diagrams if is_hermitian(d))),
        ('involutions', involution_count(shape.size)),
        ('syt_total', syt_total(shape.size)),
        ('diagrams', len(diagrams)),
        ('(m+n)!', math.factorial(shape.size)),
    ]
    groups = [['hermitian_diagrams', 'involutions', 'syt_total'], ['diagrams', '(m+n)!']]
    return CensusReport('corollary', {'m': m, 'n': n}, values, groups)


def verify_rank_remark(k: int, n_dim: int, involutions_only: bool = False, cap: Optional[int] = None) -> CensusReport:
    """Exact Gram ranks at N against tableau counts restricted to at most N rows

    All of S_k spans a space of dimension Σ f_λ² summed over the shapes with at most N rows. The involutions are
    independent and span I(k) = Σ f_λ dimensions once N ≥ k. Below that their rank is not the row-restricted Σ f_λ:
    for k=3, N=2 the only relation is the antisymmetrizer, which contains both 3-cycles, so all four involutions stay
    independent while Σ f_λ = 3. The involution rank is then reported without being compared.

    Args:
        k: Degree
        n_dim: N
        involutions_only: Skip the (larger) Gram matrix of the whole group
        cap: Rank cap override

    Raises:
        CapacityError: if k exceeds the rank cap
    """
    check_capacity('k', k, rank_cap(cap))
    values = [
        ('involution_rank', exact_rank(permutation_gram(k, n_dim, involutions_only=True, cap=cap))),
        ('syt_total', syt_total(k, max_rows=n_dim)),
        ('involutions', involution_count(k)),
    ]
    groups = [['involution_rank', 'syt_total', 'involutions']] if n_dim >= k else []
    if not involutions_only:
        values += [
            ('group_rank', exact_rank(permutation_gram(k, n_dim, cap=cap))),
            ('syt_square_total', syt_square_total(k, max_rows=n_dim)),
        ]
        groups.append(['group_rank', 'syt_square_total'])
    return CensusReport('rank', {'k': k, 'N': n_dim}, values, groups)


def figure_one_table(k: int, cap: Optional[int] = None) -> List[Tuple[Permutation, TableauPair, bool]]:
    """One row (ρ, (P_ρ, Q_ρ), P_ρ = Q_ρ) per permutation of S_k, in enumeration order

    Raises:
        CapacityError: if k exceeds the enumeration cap
    """
    rows = []
    for a in enumerate_group(k, cap=cap):
        pair = rs_map(a)
        rows.append((a, pair, pair.is_diagonal))
    return rows


def verify_shape_statistics(k: int, cap: Optional[int] = None) -> CensusReport:
    """Robinson-Schensted sends exactly f_λ² permutations to every shape λ

    Raises:
        CapacityError: if k exceeds the enumeration cap
    """
    distribution = shape_distribution(k, cap=cap)
    values = []
    groups = []
    for shape in enumerate_partitions(k):
        rs_name, hook_name = 'rs {}'.format(shape), 'hook^2 {}'.format(shape)
        values += [(rs_name, distribution.get(shape, 0)), (hook_name, hook_count(shape)**2)]
        groups.append([rs_name, hook_name])
    values += [('total', sum(distribution.values())), ('k!', math.factorial(k))]
    groups.append(['total', 'k!'])
    return CensusReport('shapes', {'k': k}, values, groups)


def verify_basis_span(k: int, n_dim: int, cap: Optional[int] = None) -> CensusReport:
    """The Hermitian and anti-Hermitian elements together span the same space as S_k (all of it when N ≥ k)

    Raises:
        CapacityError: if k exceeds the rank cap
    """
    split_rank, group_rank = basis_span_rank(k, n_dim, cap=cap)
    values = [('split_rank', split_rank), ('group_rank', group_rank)]
    if n_dim >= k:
        values.append(('k!', math.factorial(k)))
    return CensusReport('basis-span', {'k': k, 'N': n_dim}, values)


def verify_mixed_rank(m: int, n: int, n_dim: int, cap: Optional[int] = None) -> CensusReport:
    """Rank of the Gram matrix of S_{m,n} at N

    The endpoint swap is a partial transpose, which leaves tr(A†B) unchanged, so the mixed Gram matrix has to
    coincide with the one of S_{m+n} entry by entry.

    Raises:
        CapacityError: if m+n exceeds the rank cap
    """
    shape = MixedShape(m, n)
    mixed = mixed_gram_matrix(shape, n_dim, cap=cap)
    plain = permutation_gram(shape.size, n_dim, cap=cap)
    differing = sum(1 for x, y in zip(mixed.entries, plain.entries) for a, b in zip(x, y) if a != b)
    problems = ['{} Gram entries differ from those of S_{}'.format(differing, shape.size)] if differing else []
    values = [
        ('mixed_rank', exact_rank(mixed)),
        ('syt_square_total', syt_square_total(shape.size, max_rows=n_dim)),
        ('group_rank', exact_rank(plain)),
        ('differing_entries', differing),
    ]
    groups = [['mixed_rank', 'syt_square_total', 'group_rank']]
    return CensusReport('mixed-rank', {'m': m, 'n': n, 'N': n_dim}, values, groups, problems)


def verify_non_group(m: int, n: int, exhaustive: bool = True, cap: Optional[int] = None) -> CensusReport:
    """Only the m!·n! diagrams without same-side strands are invertible, so S_{m,n} is no group once m, n ≥ 1

    Args:
        m: Number of V slots
        n: Number of V* slots
        exhaustive: Also count by searching an inverse for every diagram (quadratic in (m+n)!)
        cap: Rank cap override for the exhaustive search

    Raises:
        CapacityError: if m+n exceeds the rank cap and the search is exhaustive
    """
    shape = MixedShape(m, n)
    diagrams = math.factorial(shape.size)
    structural = invertible_count(shape)
    values = [('structural', structural)]
    if exhaustive:
        values.append(('search', invertible_count(shape, exhaustive=True, cap=cap)))
    values += [('m!n!', math.factorial(m) * math.factorial(n)), ('diagrams', diagrams)]
    problems = []
    if m and n and structural == diagrams:
        problems.append('every diagram of S_({},{}) is invertible'.format(m, n))
    groups = [[name for name, _ in values if name != 'diagrams']]
    return CensusReport('non-group', {'m': m, 'n': n}, values, groups, problems)
