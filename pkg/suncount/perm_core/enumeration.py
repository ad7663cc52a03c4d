import logging
import itertools

from enum import Enum
from typing import List, Optional

from .permutation import Permutation, is_involution
from ..utils import enumeration_cap, check_capacity

log = logging.getLogger(__name__)


class InvolutionMethod(Enum):
    """Enum for the independent ways of counting involutions"""
    Brute = 'brute'
    Recurrence = 'recurrence'


def enumerate_group(k: int, cap: Optional[int] = None) -> List[Permutation]:
    """All k! permutations of {1..k}, in lexicographic order of their one-line notation

    Args:
        k: Degree
        cap: Largest admissible k, defaults to `enumeration.cap` of the internal configuration

    Returns:
        The elements of S_k; S_0 consists of the empty permutation

    Raises:
        CapacityError: if k exceeds the cap
    """
    if k < 0:
        raise ValueError('Degree must be non-negative, got {}'.format(k))
    check_capacity('k', k, enumeration_cap(cap))
    log.debug('Enumerating S_{}'.format(k))
    return [Permutation(images) for images in itertools.permutations(range(1, k + 1))]


def _involutions_by_recurrence(k: int) -> int:
    # I(k) = I(k-1) + (k-1) I(k-2)
    previous, current = 1, 1
    for n in range(2, k + 1):
        previous, current = current, current + (n - 1) * previous
    return current


def involution_count(k: int, method: InvolutionMethod = InvolutionMethod.Recurrence, cap: Optional[int] = None) -> int:
    """Number of involutions in S_k

    Args:
        k: Degree
        method: `Brute` checks every element of S_k, `Recurrence` uses I(k) = I(k-1) + (k-1) I(k-2)
        cap: Enumeration cap for the brute force method

    Raises:
        CapacityError: if the brute force method is asked for k above the cap
    """
    if k < 0:
        raise ValueError('Degree must be non-negative, got {}'.format(k))
    method = InvolutionMethod(method)
    if method is InvolutionMethod.Brute:
        return sum(1 for a in enumerate_group(k, cap=cap) if is_involution(a))
    return _involutions_by_recurrence(k)
