"""
This module offers the permutations of S_k as linear invariants of SU(N) on V^⊗k: formal linear combinations with
exact rational coefficients, the scalar product tr(A†B), exact Gram matrices and ranks, and dense brute-force
oracles (including the commutation check against random special unitaries).
"""

from typing import Optional

from ..utils import dense_budget, check_capacity

__all__ = ['algebra', 'gram', 'dense']


class TensorSpaceConfig:
    """The tensor space V^⊗k with dim(V) = N

    Args:
        n_dim: N, the dimension of V
        k: Tensor power
    """

    __slots__ = ('n_dim', 'k')

    def __init__(self, n_dim: int, k: int) -> None:
        if n_dim < 1:
            raise ValueError('dim(V) must be positive, got {}'.format(n_dim))
        if k < 0:
            raise ValueError('Tensor power must be non-negative, got {}'.format(k))
        self.n_dim: int = n_dim
        self.k: int = k

    @property
    def dimension(self) -> int:
        return self.n_dim**self.k

    def check_dense(self, budget: Optional[int] = None) -> None:
        """Raises CapacityError if N^k exceeds the dense budget"""
        check_capacity('N^k', self.dimension, dense_budget(budget))

    def __repr__(self) -> str:
        return 'TensorSpaceConfig[N={}, k={}]'.format(self.n_dim, self.k)
