import logging

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..perm_core import DegreeMismatchError
from ..perm_core.permutation import Permutation, compose, inverse, is_involution
from ..perm_core.enumeration import enumerate_group
from ..perm_core.notation import Notation, format_permutation

log = logging.getLogger(__name__)

Scalar = Union[int, Rational]


class AlgebraElement:
    """A formal linear combination Σ α_ρ ρ of permutations of equal degree with exact rational coefficients

    Zero coefficients are never stored. Elements are immutable.

    Args:
        terms: Mapping of permutation to coefficient
        degree: Degree k, required only for the zero element (it is taken from the terms otherwise)

    Raises:
        DegreeMismatchError: if the permutations have different degrees
    """

    __slots__ = ('_terms', '_degree')

    def __init__(self, terms: Optional[Mapping[Permutation, Scalar]] = None, degree: Optional[int] = None) -> None:
        cleaned: Dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[perm] = coeff
        degrees = {perm.degree for perm in cleaned}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) > 1:
            raise DegreeMismatchError('Algebra element mixes degrees {}'.format(sorted(degrees)))
        if not degrees:
            raise ValueError('The degree of the zero element has to be given explicitly')
        self._terms = cleaned
        self._degree: int = degrees.pop()

    @staticmethod
    def of(perm: Permutation, coeff: Scalar = 1) -> 'AlgebraElement':
        return AlgebraElement({perm: coeff}, degree=perm.degree)

    @property
    def degree(self) -> int:
        return self._degree

    def terms(self) -> List[Tuple[Permutation, Fraction]]:
        """(permutation, coefficient) pairs in lexicographic order of the permutations"""
        return sorted(self._terms.items())

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def _check_degree(self, other: 'AlgebraElement') -> None:
        if self._degree != other._degree:
            raise DegreeMismatchError('Cannot combine elements of degree {} and {}'.format(
                self._degree, other._degree))

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check_degree(other)
        terms = dict(self._terms)
        for perm, coeff in other._terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + coeff
        return AlgebraElement(terms, degree=self._degree)

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement({perm: -coeff for perm, coeff in self._terms.items()}, degree=self._degree)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def __rmul__(self, scalar: Scalar) -> 'AlgebraElement':
        return AlgebraElement({perm: scalar * coeff for perm, coeff in self._terms.items()}, degree=self._degree)

    def __mul__(self, other: Union['AlgebraElement', Scalar]) -> 'AlgebraElement':
        """Algebra product, the bilinear extension of composition (right factor acts first)"""
        if not isinstance(other, AlgebraElement):
            return self.__rmul__(other)
        self._check_degree(other)
        terms: Dict[Permutation, Fraction] = {}
        for a, alpha in self._terms.items():
            for b, beta in other._terms.items():
                ab = compose(a, b)
                terms[ab] = terms.get(ab, Fraction(0)) + alpha * beta
        return AlgebraElement(terms, degree=self._degree)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._degree == other._degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._degree, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        out = ''
        for perm, coeff in self.terms():
            sign = '-' if coeff < 0 else '+'
            magnitude = abs(coeff)
            factor = '' if magnitude == 1 else '{}*'.format(magnitude)
            term = factor + format_permutation(perm, Notation.Cycles)
            out = ('-' + term if sign == '-' else term) if not out else '{} {} {}'.format(out, sign, term)
        return out

    def __repr__(self) -> str:
        return 'AlgebraElement[{}]'.format(self)


def adjoint(x: AlgebraElement) -> AlgebraElement:
    """Hermitian conjugate: permutations are unitary, so ρ† = ρ⁻¹; rational coefficients are self-conjugate"""
    return AlgebraElement({inverse(perm): coeff for perm, coeff in x.terms()}, degree=x.degree)


def is_hermitian(x: AlgebraElement) -> bool:
    return adjoint(x) == x


def hermitian_pair(perm: Permutation) -> Tuple[AlgebraElement, AlgebraElement]:
    """h_ρ = ρ + ρ† and a_ρ = ρ - ρ†"""
    rho, dagger = AlgebraElement.of(perm), AlgebraElement.of(inverse(perm))
    return rho + dagger, rho - dagger


def split_hermitian_basis(k: int, cap: Optional[int] = None) -> Tuple[List[AlgebraElement], List[AlgebraElement]]:
    """The basis of the invariant algebra split into Hermitian and anti-Hermitian elements

    Every involution enters the Hermitian part as a single term. Every other permutation pairs up with its inverse;
    the lexicographically smaller of the two represents the pair and contributes h_ρ to the Hermitian and a_ρ to the
    anti-Hermitian part. Both lists follow the enumeration order of S_k.

    Args:
        k: Degree
        cap: Enumeration cap

    Returns:
        A tuple of (Hermitian elements, anti-Hermitian elements)
    """
    hermitian: List[AlgebraElement] = []
    anti: List[AlgebraElement] = []
    for perm in enumerate_group(k, cap=cap):
        if is_involution(perm):
            hermitian.append(AlgebraElement.of(perm))
        elif perm < inverse(perm):
            h, a = hermitian_pair(perm)
            hermitian.append(h)
            anti.append(a)
    log.debug('Split S_{} into {} Hermitian and {} anti-Hermitian elements'.format(k, len(hermitian), len(anti)))
    return hermitian, anti


def as_elements(perms: Iterable[Permutation]) -> List[AlgebraElement]:
    return [AlgebraElement.of(perm) for perm in perms]
