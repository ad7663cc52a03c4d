import logging

import numpy as np

from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Tuple, Union

from . import TensorSpaceConfig
from .algebra import AlgebraElement
from ..perm_core import DegreeMismatchError
from ..perm_core.permutation import Permutation
from ..utils import check_capacity, dense_budget, invariance_tolerance

log = logging.getLogger(__name__)

# An endpoint is ('L' | 'R', height); 'L' legs carry the row (output) index, 'R' legs the column (input) index
Endpoint = Tuple[str, int]
Strand = Tuple[Endpoint, Endpoint]


def _multi_indices(n_dim: int, degree: int) -> np.ndarray:
    """All multi-indices (i_1, ..., i_k) in row-major order, i.e. the order np.kron uses for basis vectors"""
    if degree == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((n_dim, ) * degree).reshape(degree, -1)
    return grids.T


def delta_operator(strands: Iterable[Strand], n_dim: int, degree: int, budget: Optional[int] = None) -> np.ndarray:
    """Dense 0/1 matrix of a leg pairing: the product over strands of Kronecker deltas between the leg indices

    Args:
        strands: Pairs of endpoints; sides are 'L' or 'R' (or anything with such a `value`), heights 1..degree
        n_dim: N
        degree: Number of tensor factors
        budget: Dense budget for N^degree, the configured one if None

    Returns:
        An int64 matrix of size N^degree x N^degree

    Raises:
        CapacityError: if N^degree exceeds the dense budget
    """
    size = n_dim**degree
    check_capacity('N^k', size, dense_budget(budget))
    idx = _multi_indices(n_dim, degree)
    rows = idx[:, None, :]
    cols = idx[None, :, :]

    def leg(endpoint: Endpoint) -> np.ndarray:
        side, height = endpoint
        side = getattr(side, 'value', side)
        return rows[:, :, height - 1] if side == 'L' else cols[:, :, height - 1]

    mask = np.ones((size, size), dtype=bool)
    for a, b in strands:
        mask &= leg(a) == leg(b)
    return mask.astype(np.int64)


def permutation_strands(a: Permutation) -> Iterable[Strand]:
    """Strands (R,t)-(L,a(t)): the output factor at a(t) receives the input factor at t"""
    return [(('R', t), ('L', a(t))) for t in range(1, a.degree + 1)]


def dense_operator(x: Union[AlgebraElement, Permutation], cfg: TensorSpaceConfig,
                   budget: Optional[int] = None) -> np.ndarray:
    """The N^k x N^k matrix of Σ α_ρ ρ acting on V^⊗k

    A single ρ has entry 1 at (i_1...i_k; j_1...j_k) iff i_ρ(t) = j_t for all t.

    Args:
        x: An algebra element or a single permutation of degree k
        cfg: The tensor space
        budget: Dense budget override

    Returns:
        An int64 matrix if all coefficients are integers, an object matrix of Fractions otherwise

    Raises:
        DegreeMismatchError: if the degree of x is not cfg.k
        CapacityError: if N^k exceeds the dense budget
    """
    if isinstance(x, Permutation):
        x = AlgebraElement.of(x)
    if x.degree != cfg.k:
        raise DegreeMismatchError('Element of degree {} on a space with k = {}'.format(x.degree, cfg.k))
    cfg.check_dense(budget)
    terms = x.terms()
    integral = all(coeff.denominator == 1 for _, coeff in terms)
    result = np.zeros((cfg.dimension, cfg.dimension), dtype=np.int64 if integral else object)
    if not integral:
        result[:, :] = Fraction(0)
    for perm, coeff in terms:
        operator = delta_operator(permutation_strands(perm), cfg.n_dim, cfg.k, budget)
        if integral:
            result = result + int(coeff) * operator
        else:
            result = result + coeff * operator.astype(object)
    return result


def dense_trace(matrix: np.ndarray) -> Union[int, Fraction]:
    value = sum(matrix[i, i] for i in range(matrix.shape[0]))
    return int(value) if not isinstance(value, Fraction) else value


def random_special_unitary(n_dim: int, seed: int) -> np.ndarray:
    """A reproducible Haar-distributed element of SU(N)

    The QR decomposition of a complex Gaussian matrix gives a unitary Q; scaling the columns by the phases of R's
    diagonal makes it Haar distributed, and dividing by a root of the determinant moves it into SU(N).
    """
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n_dim, n_dim)) + 1j * rng.standard_normal((n_dim, n_dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return q / np.linalg.det(q)**(1.0 / n_dim)


def tensor_power(u: np.ndarray, k: int) -> np.ndarray:
    return reduce(np.kron, [u] * k, np.ones((1, 1), dtype=complex))


def invariance_deviation(rho: Permutation, cfg: TensorSpaceConfig, seed: int, product: bool = True,
                         budget: Optional[int] = None) -> float:
    """max |ρ∘W - W∘ρ| over all entries, with W = U^⊗k for a seeded U in SU(N)

    Args:
        rho: Permutation of degree cfg.k
        cfg: The tensor space
        seed: Seed of the unitary
        product: If False, W is a seeded unitary on the whole N^k dimensional space instead (negative control)
        budget: Dense budget override

    Returns:
        The deviation
    """
    operator = dense_operator(rho, cfg, budget).astype(complex)
    if product:
        w = tensor_power(random_special_unitary(cfg.n_dim, seed), cfg.k)
    else:
        w = random_special_unitary(cfg.dimension, seed)
    deviation = float(np.max(np.abs(operator @ w - w @ operator)))
    log.debug('Deviation {:.3e} for {} on {} (seed {}, product={})'.format(deviation, rho, cfg, seed, product))
    return deviation


def check_unitary_invariance(rho: Permutation, cfg: TensorSpaceConfig, seed: int, tol: Optional[float] = None,
                             budget: Optional[int] = None) -> bool:
    """True iff ρ commutes with U^⊗k up to `tol` for the seeded U

    Raises:
        ValueError: if tol is not positive
        CapacityError: if N^k exceeds the dense budget
    """
    tol = invariance_tolerance(tol)
    if tol <= 0:
        raise ValueError('Tolerance must be positive, got {}'.format(tol))
    return invariance_deviation(rho, cfg, seed, budget=budget) < tol
