import json
import math
import pytest
import numpy as np
import sympy

from fractions import Fraction

from context import (CapacityError, DegreeMismatchError, parse_permutation, identity, inverse, is_involution,
                     enumerate_group, involution_count, syt_total, syt_square_total, TensorSpaceConfig,
                     AlgebraElement, adjoint, is_hermitian, hermitian_pair, split_hermitian_basis, as_elements,
                     GramMatrix, inner_product, element_inner_product, gram_matrix, permutation_gram, exact_rank,
                     basis_span_rank, delta_operator, dense_operator, dense_trace, random_special_unitary,
                     tensor_power, invariance_deviation, check_unitary_invariance)


def p(text: str):
    return parse_permutation(text)


def e(text: str, coeff=1) -> AlgebraElement:
    return AlgebraElement.of(p(text), coeff)


def sympy_rank(g: GramMatrix) -> int:
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in g.entries]).rank()


class TestTensorSpaceConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            TensorSpaceConfig(0, 2)
        with pytest.raises(ValueError):
            TensorSpaceConfig(2, -1)
        assert TensorSpaceConfig(3, 5).dimension == 243

    def test_dense_budget(self):
        TensorSpaceConfig(3, 5).check_dense()
        with pytest.raises(CapacityError):
            TensorSpaceConfig(3, 5).check_dense(budget=100)
        with pytest.raises(CapacityError):
            TensorSpaceConfig(2, 13).check_dense()


class TestAlgebraElement:
    def test_zero_coefficients_are_dropped(self):
        x = e('2 1 3') - e('2 1 3')
        assert x.terms() == []
        assert x.degree == 3
        assert str(x) == '0'

    def test_mixed_degrees(self):
        with pytest.raises(DegreeMismatchError):
            AlgebraElement({p('2 1'): 1, p('1 2 3'): 1})
        with pytest.raises(DegreeMismatchError):
            e('2 1') + e('1 2 3')
        with pytest.raises(ValueError):
            AlgebraElement({})

    def test_arithmetic(self):
        x = e('2 3 1') + 2 * e('2 1 3')
        assert x.coefficient(p('2 1 3')) == 2
        assert (Fraction(1, 2) * x).coefficient(p('2 3 1')) == Fraction(1, 2)
        assert x * e('1 2 3') == x
        assert e('2 1 3') * e('2 1 3') == e('1 2 3')
        assert e('2 3 1') * e('2 1 3') == e('3 2 1')

    def test_text(self):
        h, a = hermitian_pair(p('2 3 1'))
        assert str(h) == '(123) + (132)'
        assert str(a) == '(123) - (132)'
        assert str(Fraction(1, 2) * e('2 1 3')) == '1/2*(12)'
        assert str(-e('1 2 3')) == '-()'


class TestAdjoint:
    def test_examples(self):
        assert adjoint(e('2 3 1')) == e('3 1 2')
        h, a = hermitian_pair(p('2 3 1'))
        assert adjoint(h) == h
        assert adjoint(a) == -a

    def test_adjoint_is_an_involution(self):
        x = e('2 3 1', 3) + e('3 2 1', Fraction(-1, 4))
        assert adjoint(adjoint(x)) == x

    @pytest.mark.parametrize('k', range(1, 6))
    def test_hermitian_iff_involution(self, k):
        for a in enumerate_group(k):
            assert is_hermitian(AlgebraElement.of(a)) == is_involution(a)


class TestSplitBasis:
    @pytest.mark.parametrize('k, hermitian, anti', [(2, 2, 0), (3, 5, 1), (4, 17, 7)])
    def test_sizes(self, k, hermitian, anti):
        h, a = split_hermitian_basis(k)
        assert (len(h), len(a)) == (hermitian, anti)
        n_p = involution_count(k)
        n_t = math.factorial(k) - n_p
        assert len(h) == n_p + n_t // 2
        assert len(a) == n_t // 2

    def test_parts_are_hermitian_and_anti_hermitian(self):
        h, a = split_hermitian_basis(4)
        assert all(adjoint(x) == x for x in h)
        assert all(adjoint(x) == -x for x in a)

    def test_representatives_are_lexicographically_smaller(self):
        _, anti = split_hermitian_basis(3)
        assert anti == [e('2 3 1') - e('3 1 2')]


class TestInnerProduct:
    def test_examples(self):
        assert inner_product(identity(3), identity(3), 3) == 27
        assert inner_product(identity(2), p('2 1'), 2) == 2
        assert inner_product(p('2 1'), p('2 1'), 2) == 4

    def test_symmetry(self):
        for a in enumerate_group(4):
            for b in enumerate_group(4)[::5]:
                assert inner_product(a, b, 3) == inner_product(b, a, 3)

    def test_bilinear_extension(self):
        h, a = hermitian_pair(p('2 3 1'))
        assert element_inner_product(h, a, 2) == 0
        assert element_inner_product(e('2 1', Fraction(1, 2)), e('2 1'), 2) == 2
        assert element_inner_product(e('2 1 3', Fraction(1, 2)), e('2 1 3'), 2) == 4

    @pytest.mark.parametrize('n_dim', [1, 2, 3])
    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_matches_dense_trace(self, k, n_dim):
        cfg = TensorSpaceConfig(n_dim, k)
        for a in enumerate_group(k):
            dagger = dense_operator(adjoint(AlgebraElement.of(a)), cfg)
            for b in enumerate_group(k):
                assert inner_product(a, b, n_dim) == dense_trace(dagger @ dense_operator(b, cfg))


class TestGramMatrix:
    def test_examples(self):
        s2 = as_elements(enumerate_group(2))
        assert gram_matrix(s2, 2).entries == ((4, 2), (2, 4))
        assert gram_matrix(s2, 1).entries == ((1, 1), (1, 1))
        assert gram_matrix([AlgebraElement.of(identity(1))], 3).entries == ((3, ), )

    def test_mixed_degrees(self):
        with pytest.raises(DegreeMismatchError):
            gram_matrix([e('2 1'), e('1 2 3')], 2)

    def test_properties(self):
        g = permutation_gram(4, 3)
        assert g.size == 24
        assert g.is_symmetric()
        assert all(g.entries[i][i] == 3**4 for i in range(g.size))
        assert all(x in (3, 9, 27, 81) for row in g.entries for x in row)

    @pytest.mark.parametrize('n_dim', [1, 2, 3])
    def test_leading_principal_minors_are_non_negative(self, n_dim):
        m = sympy.Matrix(permutation_gram(3, n_dim).entries)
        assert all(m[:i, :i].det() >= 0 for i in range(1, 7))

    def test_exports(self):
        g = permutation_gram(2, 2)
        assert g.to_csv() == '4,2\n2,4\n'
        data = json.loads(g.to_json())
        assert data == {'n_dim': 2, 'basis': ['()', '(12)'], 'entries': [['4', '2'], ['2', '4']]}

    def test_rational_entries(self):
        g = gram_matrix([e('1 2', Fraction(1, 3)), e('2 1')], 2)
        assert g.entries[0][0] == Fraction(4, 9)
        assert g.to_csv().splitlines()[0] == '4/9,2/3'

    def test_rank_cap(self):
        with pytest.raises(CapacityError):
            permutation_gram(7, 2)
        with pytest.raises(CapacityError):
            permutation_gram(4, 2, cap=3)


class TestExactRank:
    def test_small_matrices(self):
        assert exact_rank([]) == 0
        assert exact_rank([[0, 0], [0, 0]]) == 0
        assert exact_rank([[1, 2], [2, 4]]) == 1
        assert exact_rank([[0, 1], [1, 0]]) == 2
        assert exact_rank([[Fraction(1, 2), 1], [1, 2]]) == 1
        assert exact_rank([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2

    def test_examples(self):
        assert exact_rank(permutation_gram(3, 3)) == 6
        assert exact_rank(permutation_gram(3, 2)) == 5
        assert exact_rank(permutation_gram(3, 2, involutions_only=True)) == 4
        assert exact_rank(permutation_gram(3, 1)) == 1

    @pytest.mark.parametrize('n_dim', [1, 2, 3])
    @pytest.mark.parametrize('k', [2, 3, 4])
    def test_agrees_with_sympy(self, k, n_dim):
        g = permutation_gram(k, n_dim)
        assert exact_rank(g) == sympy_rank(g)

    @pytest.mark.timeout(60)
    @pytest.mark.parametrize('n_dim', range(1, 6))
    @pytest.mark.parametrize('k', range(1, 6))
    def test_rank_laws(self, k, n_dim):
        group_rank = exact_rank(permutation_gram(k, n_dim))
        assert group_rank == syt_square_total(k, max_rows=n_dim)
        assert (group_rank == math.factorial(k)) == (n_dim >= k)
        involution_rank = exact_rank(permutation_gram(k, n_dim, involutions_only=True))
        if n_dim >= k:
            assert involution_rank == syt_total(k, max_rows=n_dim) == involution_count(k)
        else:
            assert involution_rank <= involution_count(k)

    @pytest.mark.parametrize('k, n_dim, rank', [(3, 2, 4), (4, 2, 10), (4, 3, 10), (5, 2, 26)])
    def test_involution_rank_below_k(self, k, n_dim, rank):
        g = permutation_gram(k, n_dim, involutions_only=True)
        assert exact_rank(g) == rank
        assert rank > syt_total(k, max_rows=n_dim)

    def test_involution_rank_matches_dense_operators(self):
        cfg = TensorSpaceConfig(2, 3)
        involutions = [a for a in enumerate_group(3) if is_involution(a)]
        flattened = np.array([dense_operator(a, cfg).ravel() for a in involutions], dtype=float)
        assert np.linalg.matrix_rank(flattened) == exact_rank(permutation_gram(3, 2, involutions_only=True)) == 4


class TestBasisSpan:
    @pytest.mark.parametrize('k', [2, 3, 4])
    def test_split_basis_spans_the_algebra(self, k):
        assert basis_span_rank(k, k) == (math.factorial(k), math.factorial(k))

    def test_rank_deficient(self):
        split_rank, group_rank = basis_span_rank(3, 2)
        assert split_rank == group_rank == 5


class TestDenseOperator:
    def test_identity(self):
        cfg = TensorSpaceConfig(2, 3)
        assert np.array_equal(dense_operator(identity(3), cfg), np.eye(8, dtype=np.int64))

    def test_swap(self):
        swap = dense_operator(p('2 1'), TensorSpaceConfig(2, 2))
        expected = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        assert np.array_equal(swap, expected)

    def test_trace_is_a_power_of_n(self):
        assert dense_trace(dense_operator(p('2 3 1'), TensorSpaceConfig(2, 3))) == 2

    def test_product_action(self):
        # e1 ⊗ e2 ⊗ e1 goes to e1 ⊗ e1 ⊗ e2 under (123): the factor at t lands at ρ(t)
        rho = dense_operator(p('2 3 1'), TensorSpaceConfig(2, 3))
        vector = np.zeros(8, dtype=np.int64)
        vector[0b010] = 1
        assert np.flatnonzero(rho @ vector).tolist() == [0b001]

    def test_homomorphism(self):
        cfg = TensorSpaceConfig(2, 3)
        for a in enumerate_group(3):
            for b in enumerate_group(3):
                product = dense_operator(AlgebraElement.of(a) * AlgebraElement.of(b), cfg)
                assert np.array_equal(product, dense_operator(a, cfg) @ dense_operator(b, cfg))

    def test_linearity(self):
        cfg = TensorSpaceConfig(2, 2)
        x = 3 * e('1 2') - e('2 1')
        assert np.array_equal(dense_operator(x, cfg), 3 * dense_operator(p('1 2'), cfg) - dense_operator(p('2 1'), cfg))
        half = dense_operator(e('2 1', Fraction(1, 2)), cfg)
        assert half[1, 2] == Fraction(1, 2)
        assert dense_trace(half) == 1

    def test_matches_delta_operator(self):
        strands = [(('R', 1), ('L', 2)), (('R', 2), ('L', 1))]
        assert np.array_equal(delta_operator(strands, 3, 2), dense_operator(p('2 1'), TensorSpaceConfig(3, 2)))

    def test_errors(self):
        with pytest.raises(DegreeMismatchError):
            dense_operator(p('2 1'), TensorSpaceConfig(2, 3))
        with pytest.raises(CapacityError):
            dense_operator(identity(6), TensorSpaceConfig(5, 6))
        dense_operator(identity(5), TensorSpaceConfig(3, 5))


class TestUnitaryInvariance:
    @pytest.mark.parametrize('n_dim', [1, 2, 3, 5])
    def test_random_special_unitary(self, n_dim):
        u = random_special_unitary(n_dim, seed=7)
        assert np.allclose(u @ u.conj().T, np.eye(n_dim))
        assert np.linalg.det(u) == pytest.approx(1)
        assert np.array_equal(u, random_special_unitary(n_dim, seed=7))
        if n_dim > 1:
            assert not np.allclose(u, random_special_unitary(n_dim, seed=8))

    def test_tensor_power(self):
        u = random_special_unitary(2, seed=1)
        assert tensor_power(u, 0).shape == (1, 1)
        assert np.allclose(tensor_power(u, 2), np.kron(u, u))

    def test_identity_has_zero_deviation(self):
        assert invariance_deviation(identity(3), TensorSpaceConfig(3, 3), seed=4) == 0.0

    def test_swap(self):
        assert check_unitary_invariance(p('2 1'), TensorSpaceConfig(2, 2), seed=1, tol=1e-10)
        assert check_unitary_invariance(p('3 2 1'), TensorSpaceConfig(2, 3), seed=2)

    def test_negative_control(self):
        assert invariance_deviation(p('2 1'), TensorSpaceConfig(2, 2), seed=1, product=False) > 1e-3

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            check_unitary_invariance(p('2 1'), TensorSpaceConfig(2, 2), seed=1, tol=0)

    @pytest.mark.timeout(60)
    def test_s3_commutes_with_ten_unitaries(self):
        cfg = TensorSpaceConfig(3, 3)
        for seed in range(10):
            for rho in enumerate_group(3):
                assert invariance_deviation(rho, cfg, seed) < 1e-10
                if rho != identity(3):
                    assert invariance_deviation(rho, cfg, seed, product=False) > 1e-3
