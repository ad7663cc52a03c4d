"""
This module offers permutations of {1..k}: group operations, cycle analysis, involutions, text notations and the
enumeration of the symmetric group S_k.
"""

__all__ = ['permutation', 'enumeration', 'notation']


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined

    Args:
        message: Error message
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


class PermutationParseError(ValueError):
    """Raised for malformed permutation text

    Args:
        message: Error message
        position: 0-based character offset in the input at which the problem was detected
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__('{} (at position {})'.format(message, position))
        self.position = position
