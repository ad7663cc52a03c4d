import re
import logging

import numpy as np

from typing import Dict, Iterable, List, Optional, Tuple

from . import DiagramError, Leg, MixedShape, Side
from ..perm_core.permutation import Permutation, identity
from ..perm_core.enumeration import enumerate_group
from ..tensor_invariants.dense import delta_operator
from ..tensor_invariants.gram import GramMatrix
from ..utils import check_capacity, enumeration_cap, rank_cap

log = logging.getLogger(__name__)

_STRAND = re.compile(r'^([LR])(\d+)-([LR])(\d+)$')

Strand = Tuple[Leg, Leg]


def _strand(a: Leg, b: Leg) -> Strand:
    return (a, b) if a < b else (b, a)


class MixedDiagram:
    """A primitive invariant on V^⊗m ⊗ (V*)^⊗n

    Strands are kept as (smaller leg, larger leg) pairs in sorted order, so equal strand sets compare equal.

    Args:
        shape: The mixed space
        strands: Leg pairs; every one of the 2(m+n) legs has to occur exactly once

    Raises:
        DiagramError: if a leg is out of range, missing or used twice, or a strand does not join an arrow tail to an
            arrow head
    """

    __slots__ = ('shape', 'strands')

    def __init__(self, shape: MixedShape, strands: Iterable[Tuple[Leg, Leg]]) -> None:
        self.shape: MixedShape = shape
        self.strands: Tuple[Strand, ...] = tuple(sorted(_strand(a, b) for a, b in strands))
        self._validate()

    def _is_tail(self, leg: Leg) -> bool:
        return (leg.side is Side.Right) != self.shape.is_dual(leg.height)

    def _validate(self) -> None:
        seen = set()
        for a, b in self.strands:
            for leg in (a, b):
                if not 1 <= leg.height <= self.shape.size:
                    raise DiagramError('Leg {} is outside of shape {}'.format(leg, self.shape))
                if leg in seen:
                    raise DiagramError('Leg {} is used by more than one strand'.format(leg))
                seen.add(leg)
            if self._is_tail(a) == self._is_tail(b):
                raise DiagramError('Strand {}-{} does not join an arrow tail to an arrow head'.format(a, b))
        if len(seen) != 2 * self.shape.size:
            raise DiagramError('Shape {} needs {} strands, got {}'.format(self.shape, self.shape.size,
                                                                          len(self.strands)))

    def partner(self, leg: Leg) -> Leg:
        for a, b in self.strands:
            if a == leg:
                return b
            if b == leg:
                return a
        raise DiagramError('Leg {} is not part of the diagram'.format(leg))

    def __eq__(self, other) -> bool:
        return isinstance(other, MixedDiagram) and self.shape == other.shape and self.strands == other.strands

    def __hash__(self) -> int:
        return hash((self.shape, self.strands))

    def __repr__(self) -> str:
        return 'MixedDiagram[{} {}]'.format(self.shape, format_diagram(self))

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(d: MixedDiagram) -> str:
    return ','.join('{}-{}'.format(a, b) for a, b in d.strands)


def parse_diagram(text: str, shape: MixedShape) -> MixedDiagram:
    """Parse the comma separated strand encoding, e.g. "R1-L1,R2-R3,L2-L3"

    Raises:
        DiagramError: for malformed tokens or invalid strand sets
    """
    strands = []
    if text.strip():
        for token in text.split(','):
            match = _STRAND.match(token.strip())
            if match is None:
                raise DiagramError('Malformed strand {!r}, expected e.g. "R1-L2"'.format(token.strip()))
            side_a, height_a, side_b, height_b = match.groups()
            strands.append((Leg(Side(side_a), int(height_a)), Leg(Side(side_b), int(height_b))))
    return MixedDiagram(shape, strands)


def _flip_dual(leg: Leg, shape: MixedShape) -> Leg:
    return leg.flipped() if shape.is_dual(leg.height) else leg


def swap_map(a: Permutation, shape: MixedShape) -> MixedDiagram:
    """Dualize the last n slots of the permutation diagram of a by swapping left and right endpoints at those heights

    Raises:
        DiagramError: if the degree of a is not m+n
    """
    if a.degree != shape.size:
        raise DiagramError('Permutation of degree {} does not fit shape {}'.format(a.degree, shape))
    strands = [(Leg(Side.Right, j), Leg(Side.Left, a(j))) for j in range(1, a.degree + 1)]
    return MixedDiagram(shape, [(_flip_dual(x, shape), _flip_dual(y, shape)) for x, y in strands])


def to_permutation(d: MixedDiagram) -> Permutation:
    """Inverse of :func:`swap_map`: undo the endpoint swap and read off the permutation"""
    images = [0] * d.shape.size
    for x, y in d.strands:
        x, y = _flip_dual(x, d.shape), _flip_dual(y, d.shape)
        right, left = (x, y) if x.side is Side.Right else (y, x)
        images[right.height - 1] = left.height
    return Permutation(images)


def identity_diagram(shape: MixedShape) -> MixedDiagram:
    return swap_map(identity(shape.size), shape)


def enumerate_mixed(shape: MixedShape, cap: Optional[int] = None) -> List[MixedDiagram]:
    """All (m+n)! primitive invariants, in the enumeration order of S_{m+n}

    Raises:
        CapacityError: if m+n exceeds the enumeration cap
    """
    check_capacity('m+n', shape.size, enumeration_cap(cap))
    return [swap_map(a, shape) for a in enumerate_group(shape.size, cap=cap)]


def mirror(d: MixedDiagram) -> MixedDiagram:
    """Reflection about the vertical axis, the Hermitian conjugate of the diagram"""
    return MixedDiagram(d.shape, [(a.flipped(), b.flipped()) for a, b in d.strands])


def is_hermitian(d: MixedDiagram) -> bool:
    return mirror(d) == d


def _check_shapes(a: MixedDiagram, b: MixedDiagram) -> None:
    if a.shape != b.shape:
        raise DiagramError('Cannot combine diagrams of shape {} and {}'.format(a.shape, b.shape))


def compose(a: MixedDiagram, b: MixedDiagram) -> Tuple[int, MixedDiagram]:
    """The product a·b: the right legs of a are glued to the left legs of b at equal heights

    Args:
        a: Left factor (acts last)
        b: Right factor (acts first)

    Returns:
        The number of closed loops that were removed and the remaining diagram; the algebra product is N^loops times
        the diagram

    Raises:
        DiagramError: if the shapes differ
    """
    _check_shapes(a, b)

    # nodes: ('ext', Leg) for a's left and b's right legs, ('mid', h) for the glued legs
    def node_of_a(leg: Leg):
        return ('ext', leg) if leg.side is Side.Left else ('mid', leg.height)

    def node_of_b(leg: Leg):
        return ('mid', leg.height) if leg.side is Side.Left else ('ext', leg)

    edges = [(node_of_a(x), node_of_a(y)) for x, y in a.strands] + [(node_of_b(x), node_of_b(y)) for x, y in b.strands]
    incidence: Dict[tuple, List[int]] = {}
    for index, (x, y) in enumerate(edges):
        incidence.setdefault(x, []).append(index)
        incidence.setdefault(y, []).append(index)

    used = [False] * len(edges)

    def walk(start, edge: int):
        """Follow strands from `start` along `edge` until an external node or `start` is reached again"""
        current = start
        while True:
            used[edge] = True
            x, y = edges[edge]
            current = y if x == current else x
            if current[0] == 'ext' or current == start:
                return current
            edge = next(e for e in incidence[current] if e != edge)

    strands = []
    for node in sorted((n for n in incidence if n[0] == 'ext'), key=lambda n: n[1]):
        edge = incidence[node][0]
        if used[edge]:
            continue
        end = walk(node, edge)
        strands.append((node[1], end[1]))

    loops = 0
    for edge, (x, _) in enumerate(edges):
        if not used[edge]:
            walk(x, edge)
            loops += 1
    return loops, MixedDiagram(a.shape, strands)


def close_trace(d: MixedDiagram) -> int:
    """Number of closed loops after joining the left and right leg at every height; the trace is N to this number"""
    parent = list(range(d.shape.size + 1))

    def find(h: int) -> int:
        while parent[h] != h:
            parent[h] = parent[parent[h]]
            h = parent[h]
        return h

    for x, y in d.strands:
        parent[find(x.height)] = find(y.height)
    return len({find(h) for h in range(1, d.shape.size + 1)})


def mixed_inner_product(a: MixedDiagram, b: MixedDiagram, n_dim: int) -> int:
    """⟨a|b⟩ = tr(a†b) = N to the loops of composing mirror(a) with b and closing the result

    Raises:
        DiagramError: if the shapes differ
    """
    loops, product = compose(mirror(a), b)
    return n_dim**(loops + close_trace(product))


def has_inverse(d: MixedDiagram) -> bool:
    """A primitive is invertible iff no strand joins two legs on the same side, i.e. it lies in S_m × S_n"""
    return all(x.side is not y.side for x, y in d.strands)


def find_inverse(d: MixedDiagram, cap: Optional[int] = None) -> Optional[MixedDiagram]:
    """Exhaustive search for e in S_{m,n} with d·e = e·d = identity (no loops); None if there is none

    Raises:
        CapacityError: if m+n exceeds the rank cap
    """
    check_capacity('m+n', d.shape.size, rank_cap(cap))
    unit = (0, identity_diagram(d.shape))
    for e in enumerate_mixed(d.shape):
        if compose(d, e) == unit and compose(e, d) == unit:
            return e
    return None


def invertible_count(shape: MixedShape, exhaustive: bool = False, cap: Optional[int] = None) -> int:
    """Number of invertible primitives of S_{m,n}, by the side criterion or (slowly) by exhaustive search"""
    diagrams = enumerate_mixed(shape)
    if exhaustive:
        return sum(1 for d in diagrams if find_inverse(d, cap=cap) is not None)
    return sum(1 for d in diagrams if has_inverse(d))


def diagram_operator(d: MixedDiagram, n_dim: int, budget: Optional[int] = None) -> np.ndarray:
    """Dense N^(m+n) square 0/1 matrix of the diagram, the product of Kronecker deltas along its strands

    Raises:
        CapacityError: if N^(m+n) exceeds the dense budget
    """
    strands = [((x.side.value, x.height), (y.side.value, y.height)) for x, y in d.strands]
    return delta_operator(strands, n_dim, d.shape.size, budget)


def mixed_gram_matrix(shape: MixedShape, n_dim: int, cap: Optional[int] = None) -> GramMatrix:
    """Gram matrix of S_{m,n} over :func:`enumerate_mixed`

    Raises:
        CapacityError: if m+n exceeds the rank cap
    """
    check_capacity('m+n', shape.size, rank_cap(cap))
    diagrams = enumerate_mixed(shape)
    log.debug('Assembling mixed Gram matrix of {} diagrams at N={}'.format(len(diagrams), n_dim))
    size = len(diagrams)
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = mixed_inner_product(diagrams[i], diagrams[j], n_dim)
    return GramMatrix(rows, [format_diagram(d) for d in diagrams], n_dim)
