import pytest

from context import (TableauValidationError, Partition, parse_permutation, identity, inverse, is_involution,
                     enumerate_group, involution_count, parse_tableau, hook_count, TableauPair, format_pair,
                     parse_pair, rs_map, rs_inverse, check_schuetzenberger, diagonal_permutations,
                     shape_distribution)


def pair(p: str, q: str) -> TableauPair:
    return TableauPair(parse_tableau(p), parse_tableau(q))


def test_rs_map_examples():
    assert rs_map(identity(3)) == pair('1 2 3', '1 2 3')
    assert rs_map(parse_permutation('3 2 1')) == pair('1; 2; 3', '1; 2; 3')
    assert rs_map(parse_permutation('2 1 3')) == pair('1 3; 2', '1 3; 2')
    assert rs_map(parse_permutation('2 3 1')) == pair('1 3; 2', '1 2; 3')


def test_rs_map_of_empty_permutation():
    assert rs_map(identity(0)) == pair('', '')


def test_rs_inverse_examples():
    assert rs_inverse(pair('1 2 3', '1 2 3')) == identity(3)
    rho = rs_inverse(pair('1 3; 2', '1 2; 3'))
    assert rho == parse_permutation('2 3 1')
    assert not is_involution(rho)
    assert rs_map(rho) == pair('1 3; 2', '1 2; 3')


def test_rs_is_a_bijection_on_s3():
    pairs = [rs_map(a) for a in enumerate_group(3)]
    assert len(set(pairs)) == 6
    assert sorted(rs_inverse(x) for x in pairs) == enumerate_group(3)


@pytest.mark.parametrize('k', range(1, 7))
def test_rs_inverse_undoes_rs_map(k):
    for a in enumerate_group(k):
        assert rs_inverse(rs_map(a)) == a


def test_pair_requires_equal_shapes():
    with pytest.raises(TableauValidationError):
        pair('1 2 3', '1 2; 3')


def test_pair_text():
    x = pair('1 3; 2', '1 2; 3')
    assert format_pair(x) == 'P=1 3; 2 | Q=1 2; 3'
    assert parse_pair('P=1 3; 2 | Q=1 2; 3') == x
    assert x.transposed() == pair('1 2; 3', '1 3; 2')
    with pytest.raises(TableauValidationError):
        parse_pair('1 3; 2 / 1 2; 3')


@pytest.mark.parametrize('k', [1, 3, 6])
def test_check_schuetzenberger(k):
    assert check_schuetzenberger(k)


def test_transpose_symmetry_pointwise():
    for a in enumerate_group(4):
        assert rs_map(inverse(a)) == rs_map(a).transposed()


def test_diagonal_permutations():
    assert diagonal_permutations(2) == [identity(2), parse_permutation('2 1')]
    diagonal = diagonal_permutations(3)
    assert len(diagonal) == 4
    assert all(is_involution(a) for a in diagonal)
    assert len(diagonal_permutations(5)) == 26 == involution_count(5)


def test_shape_distribution():
    distribution = shape_distribution(4)
    assert list(distribution) == [Partition([4]), Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1]),
                                  Partition([1, 1, 1, 1])]
    for shape, count in distribution.items():
        assert count == hook_count(shape)**2
    assert sum(distribution.values()) == 24
