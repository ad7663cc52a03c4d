"""
Text notations for permutations: one-line ("3 1 2") and cycle notation ("(134)(25)").
"""
import re

from enum import Enum
from typing import List, Optional

from . import PermutationParseError
from .permutation import Permutation, cycles

_TOKEN = re.compile(r'\s*(\d+|\(|\)|,)')


class Notation(Enum):
    """Enum for the supported permutation notations"""
    OneLine = 'oneline'
    Cycles = 'cycles'


def _parse_cycles(text: str, degree: Optional[int]) -> Permutation:
    """Cycle notation. Inside a cycle, entries are separated by blanks or commas; a run of digits without any
    separator in its cycle is read digit by digit, so "(134)" and "(1 3 4)" are the same cycle. Such a run may not
    contain 0, since no entry is 0 and "(10)" is almost certainly meant as the entry 10."""
    pos = 0
    found: List[List[int]] = []
    current: Optional[List[int]] = None
    separated = False
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            raise PermutationParseError('Unexpected character {!r}'.format(text[pos:].lstrip()[0]), pos)
        token = match.group(1)
        token_pos = match.start(1)
        if token == '(':
            if current is not None:
                raise PermutationParseError('Nested cycle', token_pos)
            current = []
            separated = False
            start = match.end()
            closing = text.find(')', start)
            if closing >= 0:
                separated = re.search(r'[\s,]', text[start:closing].strip()) is not None
        elif token == ')':
            if current is None:
                raise PermutationParseError('Unbalanced ")"', token_pos)
            found.append(current)
            current = None
        elif token == ',':
            if current is None:
                raise PermutationParseError('Separator outside of a cycle', token_pos)
        else:
            if current is None:
                raise PermutationParseError('Entry outside of a cycle', token_pos)
            if separated:
                current.append(int(token))
            elif len(token) > 1 and '0' in token:
                raise PermutationParseError(
                    'Entry {!r} in an unseparated cycle is read digit by digit; separate multi-digit entries, '
                    'e.g. "(1 10)"'.format(token), token_pos)
            else:
                current.extend(int(digit) for digit in token)
        pos = match.end()
    if current is not None:
        raise PermutationParseError('Unterminated cycle', len(text))

    entries = [x for cycle in found for x in cycle]
    largest = max(entries, default=0)
    if degree is None:
        degree = largest
    if largest > degree:
        raise PermutationParseError('Entry {} exceeds degree {}'.format(largest, degree), text.find(str(largest)))
    for x in entries:
        if x < 1:
            raise PermutationParseError('Entry {} is out of range'.format(x), text.find(str(x)))
    if len(set(entries)) != len(entries):
        duplicate = next(x for x in entries if entries.count(x) > 1)
        raise PermutationParseError('Duplicate entry {}'.format(duplicate), text.rfind(str(duplicate)))

    images = list(range(1, degree + 1))
    for cycle in found:
        for i, x in enumerate(cycle):
            images[x - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(images)


def _parse_oneline(text: str) -> Permutation:
    images: List[int] = []
    for match in re.finditer(r'\S+', text):
        token = match.group(0)
        if not token.isdigit():
            raise PermutationParseError('Malformed entry {!r}'.format(token), match.start())
        images.append(int(token))
    k = len(images)
    seen = set()
    for match, x in zip(re.finditer(r'\S+', text), images):
        if not 1 <= x <= k:
            raise PermutationParseError('Entry {} is out of range 1..{}'.format(x, k), match.start())
        if x in seen:
            raise PermutationParseError('Duplicate entry {}'.format(x), match.start())
        seen.add(x)
    return Permutation(images)


def parse_permutation(text: str, degree: Optional[int] = None) -> Permutation:
    """Parse one-line ("3 1 2") or cycle notation ("(134)(25)")

    Args:
        text: Permutation text
        degree: Degree for cycle notation, needed when there are trailing fixed points. Defaults to the largest
            entry. For one-line notation the degree is the number of entries and has to match when given.

    Raises:
        PermutationParseError: for malformed text, out-of-range or duplicate entries
    """
    if text.strip().startswith('('):
        return _parse_cycles(text, degree)
    perm = _parse_oneline(text)
    if degree is not None and perm.degree != degree:
        raise PermutationParseError('Expected {} entries, found {}'.format(degree, perm.degree), len(text))
    return perm


def format_permutation(a: Permutation, notation: Notation = Notation.OneLine) -> str:
    """Render a permutation; cycle notation omits fixed points and renders the identity as "()"."""
    if Notation(notation) is Notation.OneLine:
        return ' '.join(str(x) for x in a.images)

    joiner = '' if a.degree <= 9 else ' '
    nontrivial = [c for c in cycles(a) if len(c) > 1]
    if not nontrivial:
        return '()'
    return ''.join('(' + joiner.join(str(x) for x in c) + ')' for c in nontrivial)
