"""
Tests for Linear Algebra Module
"""

from fractions import Fraction

import pytest

from core.exceptions import DegeneratePairingError, DimensionMismatchError
from core.linalg import (
    Matrix,
    RowSpace,
    inverse,
    kernel_basis,
    orthogonal_complement,
    rank,
    rref,
    row_space_basis,
    solve,
    span_contains,
    span_equal,
)


class TestMatrix:
    """Matrix 클래스 테스트"""

    def test_shape_and_entries(self):
        """크기와 성분 접근 테스트"""
        m = Matrix([[1, 2, 3], [4, 5, 6]])

        assert m.shape == (2, 3)
        assert m[1, 2] == Fraction(6)
        assert isinstance(m[0, 0], Fraction)

    def test_ragged_rows_rejected(self):
        """행 길이가 다르면 예외"""
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2], [3]])

    def test_matmul_identity(self):
        """단위 행렬 곱 테스트"""
        m = Matrix([[1, 2], [3, 4]])

        assert m @ Matrix.identity(2) == m
        assert Matrix.identity(2) @ m == m

    def test_matmul_dimension_mismatch(self):
        """행렬 곱 차원 불일치"""
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2]]) @ Matrix([[1, 2]])

    def test_transpose(self):
        m = Matrix([[1, 2, 3]])
        assert m.transpose().shape == (3, 1)
        assert m.transpose().transpose() == m


class TestRowReduction:
    """행 축약 관련 함수 테스트"""

    def test_rref_pivots(self):
        """피벗 열과 랭크 테스트"""
        reduced, r, pivots = rref(Matrix([[2, 4, 2], [1, 2, 3]]))

        assert r == 2
        assert pivots == [0, 2]
        assert reduced.row(0) == (1, 2, 0)
        assert reduced.row(1) == (0, 0, 1)

    def test_rank_exact(self):
        """유리수 계수에서 정확한 랭크"""
        m = Matrix([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
        assert rank(m) == 1

    def test_kernel_basis(self):
        """영공간 차원 = 열 수 - 랭크"""
        m = Matrix([[1, 1, 0], [0, 1, 1]])
        kernel = kernel_basis(m)

        assert len(kernel) == 1
        assert m.apply(kernel[0]) == (0, 0)

    def test_row_space_basis_empty(self):
        assert row_space_basis([]) == []

    def test_span_equal(self):
        """생성 공간 동치 테스트"""
        assert span_equal([[1, 1, 0], [0, 1, 1]], [[1, 2, 1], [1, 0, -1]])
        assert not span_equal([[1, 0, 0]], [[0, 1, 0]])
        assert span_equal([], [])

    def test_span_equal_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            span_equal([[1, 0]], [[1, 0, 0]])

    def test_span_contains(self):
        """생성 공간 포함 테스트"""
        outer = [[1, 0, 0], [0, 1, 0]]
        assert span_contains(outer, [[2, -3, 0]])
        assert not span_contains(outer, [[0, 0, 1]])
        assert span_contains(outer, [])


class TestOrthogonalComplement:
    """직교 여공간 테스트"""

    def test_standard_pairing(self):
        """표준 내적에서의 직교 여공간"""
        complement = orthogonal_complement([[1, 1, 0]], Matrix.identity(3))

        assert len(complement) == 2
        for w in complement:
            assert w[0] + w[1] == 0

    def test_signed_pairing(self):
        """부호가 있는 대각 페어링"""
        pairing = Matrix.diagonal([1, -1])
        complement = orthogonal_complement([[1, 1]], pairing)

        assert len(complement) == 1
        assert span_equal(complement, [[1, 1]])

    def test_empty_span(self):
        """빈 부분공간의 여공간은 전체 공간"""
        assert len(orthogonal_complement([], Matrix.identity(3))) == 3

    def test_degenerate_pairing(self):
        """퇴화 페어링은 예외"""
        with pytest.raises(DegeneratePairingError):
            orthogonal_complement([[1, 0]], Matrix([[1, 0], [0, 0]]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            orthogonal_complement([[1, 0, 0]], Matrix.identity(2))

    def test_dimension_formula(self):
        """dim U + dim U^⊥ = 전체 차원"""
        span = [[1, 2, 3, 4], [0, 1, 0, 1]]
        complement = orthogonal_complement(span, Matrix.diagonal([1, -1, 1, -1]))
        assert len(complement) + rank(Matrix(span)) == 4


class TestInverseAndSolve:
    """역행렬과 연립방정식 테스트"""

    def test_inverse(self):
        m = Matrix([[2, 1], [1, 1]])
        assert m @ inverse(m) == Matrix.identity(2)

    def test_singular_inverse(self):
        with pytest.raises(DegeneratePairingError):
            inverse(Matrix([[1, 2], [2, 4]]))

    def test_solve(self):
        m = Matrix([[1, 1], [1, -1]])
        x = solve(m, [3, 1])
        assert x == (2, 1)

    def test_solve_inconsistent(self):
        with pytest.raises(ValueError):
            solve(Matrix([[1, 1], [1, 1]]), [1, 2])


class TestRowSpace:
    """희소 행 공간 테스트"""

    def test_add_and_contains(self):
        """추가와 포함 판정"""
        space = RowSpace()

        assert space.add({"a": 1, "b": 1})
        assert not space.add({"a": 2, "b": 2})
        assert space.contains({"a": -1, "b": -1})
        assert not space.contains({"a": 1})
        assert space.dim == 1

    def test_extend_counts_growth(self):
        space = RowSpace()
        grown = space.extend([{"a": 1}, {"b": 1}, {"a": 1, "b": 1}])
        assert grown == 2

    def test_reduced_basis_is_canonical(self):
        """같은 공간이면 기약 기저가 같음"""
        first = RowSpace([{"a": 1, "b": 1}, {"b": 1, "c": 1}])
        second = RowSpace([{"a": 1, "b": -1, "c": -2}, {"a": 1, "c": -1}])

        assert first == second
        assert first.reduced_basis() == second.reduced_basis()

    def test_witness_outside(self):
        inner = RowSpace([{"a": 1}])
        outer = RowSpace([{"a": 1}, {"b": 1}])

        assert inner.witness_outside(outer) is not None
        assert outer.witness_outside(inner) is None

    def test_coordinates(self):
        space = RowSpace([{"b": 2, "a": 2}])
        assert space.coordinates(["a", "b"]) == [(1, 1)]
