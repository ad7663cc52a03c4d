"""
This module offers the Robinson-Schensted row insertion bijection between S_k and pairs of equal-shape standard
tableaux, its inverse by reverse bumping, and the checks built on it: the transpose symmetry under inversion, the
diagonal (P = Q) permutations and the shape statistics.
"""

__all__ = ['insertion']
