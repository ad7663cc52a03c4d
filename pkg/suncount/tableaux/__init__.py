"""
This module offers partitions and standard Young tableaux (English notation): validation, enumeration, the tableau
text encoding and counting via hook lengths, including the row restriction that models SU(N) with N < k.
"""

__all__ = ['partition', 'standard']


class TableauValidationError(ValueError):
    """Raised for invalid partitions, invalid tableau fillings and malformed tableau text

    Args:
        message: Error message
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)
