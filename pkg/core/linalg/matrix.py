"""
Exact Rational Matrix

유리수 위의 조밀(dense) 행렬과 행 축약 기반 연산을 제공합니다.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import DegeneratePairingError, DimensionMismatchError
from utils.logging import get_logger

logger = get_logger(__name__)

Scalar = Union[int, Fraction]
Vector = Tuple[Fraction, ...]


def to_vector(values: Iterable[Scalar]) -> Vector:
    """정수/분수 시퀀스를 Fraction 튜플로 변환합니다."""
    return tuple(Fraction(v) for v in values)


class Matrix:
    """
    유리수 조밀 행렬.

    생성 후에는 변경되지 않으며, 모든 연산은 새 행렬을 반환합니다.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], cols: Optional[int] = None):
        """
        Args:
            rows: 행 목록
            cols: 열 수 (행이 없을 때 필요)
        """
        data = tuple(to_vector(row) for row in rows)
        if data:
            ncols = len(data[0])
            if cols is not None and cols != ncols:
                raise DimensionMismatchError(f"열 수 불일치: {cols} != {ncols}")
        else:
            ncols = cols or 0
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatchError(
                    f"행 길이가 일정하지 않습니다: {len(row)} != {ncols}"
                )
        self._rows = data
        self._ncols = ncols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], cols=size
        )

    @classmethod
    def diagonal(cls, entries: Sequence[Scalar]) -> "Matrix":
        size = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(size)] for i in range(size)],
            cols=size,
        )

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def to_rows(self) -> List[Vector]:
        return list(self._rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"행렬 곱 차원 불일치: {self.shape} @ {other.shape}"
            )
        other_cols = other.transpose()._rows
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in other_cols]
             for row in self._rows],
            cols=other.cols,
        )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """행렬-벡터 곱 M·v"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"벡터 길이 {len(vector)}가 열 수 {self.cols}와 다릅니다"
            )
        v = to_vector(vector)
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._rows)

    def stack(self, other: "Matrix") -> "Matrix":
        """두 행렬을 세로로 쌓습니다."""
        if self.rows and other.rows and self.cols != other.cols:
            raise DimensionMismatchError(f"열 수 불일치: {self.cols} != {other.cols}")
        cols = self.cols if self.rows else other.cols
        return Matrix(self._rows + other._rows, cols=cols)


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """
    기약 행 사다리꼴(reduced row echelon form)을 계산합니다.

    피벗은 열 순서로 처음 만나는 0이 아닌 성분을 사용하므로
    결과는 항상 동일합니다.

    Args:
        m: 입력 행렬

    Returns:
        (기약 행렬, 랭크, 피벗 열 목록)
    """
    grid = [list(row) for row in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if grid[i][c] != 0), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        lead = grid[r][c]
        if lead != 1:
            grid[r] = [x / lead for x in grid[r]]
        for i in range(nrows):
            if i != r and grid[i][c] != 0:
                factor = grid[i][c]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
    return Matrix(grid, cols=ncols), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> List[Vector]:
    """
    영공간 {v | M·v = 0}의 기저를 반환합니다.

    자유 변수마다 하나의 벡터를 만들며, 기저 크기는 열 수 - 랭크입니다.
    """
    reduced, _, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis: List[Vector] = []
    for f in free:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            vec[p] = -reduced[row_index, f]
        basis.append(tuple(vec))
    return basis


def row_space_basis(
    vectors: Sequence[Sequence[Scalar]], dimension: Optional[int] = None
) -> List[Vector]:
    """벡터들이 생성하는 공간의 기약 행 사다리꼴 기저"""
    if not vectors:
        return []
    reduced, r, _ = rref(Matrix(vectors, cols=dimension))
    return [reduced.row(i) for i in range(r)]


def _check_dimension(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> int:
    lengths = {len(v) for v in list(a) + list(b)}
    if len(lengths) > 1:
        raise DimensionMismatchError(f"벡터 차원이 서로 다릅니다: {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def span_equal(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> bool:
    """
    두 벡터 집합의 유리수 생성 공간이 같은지 판정합니다.

    Raises:
        DimensionMismatchError: 벡터 차원이 서로 다를 때
    """
    dim = _check_dimension(a, b)
    if not a and not b:
        return True
    rank_a = rank(Matrix(a, cols=dim)) if a else 0
    rank_b = rank(Matrix(b, cols=dim)) if b else 0
    if rank_a != rank_b:
        return False
    return rank(Matrix(list(a) + list(b), cols=dim)) == rank_a


def span_contains(outer: Sequence[Sequence[Scalar]], inner: Sequence[Sequence[Scalar]]) -> bool:
    """inner의 생성 공간이 outer의 생성 공간에 포함되는지 판정합니다."""
    dim = _check_dimension(outer, inner)
    if not inner:
        return True
    rank_outer = rank(Matrix(outer, cols=dim)) if outer else 0
    return rank(Matrix(list(outer) + list(inner), cols=dim)) == rank_outer


def orthogonal_complement(span: Sequence[Sequence[Scalar]], pairing: Matrix) -> List[Vector]:
    """
    페어링 ⟨v, w⟩ = vᵀ·P·w에 대한 직교 여공간의 기저를 반환합니다.

    Args:
        span: 부분공간을 생성하는 벡터들
        pairing: 정사각 비퇴화 페어링 행렬

    Returns:
        {w | 모든 v에 대해 ⟨v, w⟩ = 0}의 기저

    Raises:
        DimensionMismatchError: 페어링이 정사각이 아니거나 차원이 맞지 않을 때
        DegeneratePairingError: 페어링이 퇴화되었을 때
    """
    if pairing.rows != pairing.cols:
        raise DimensionMismatchError(f"페어링 행렬이 정사각이 아닙니다: {pairing.shape}")
    dim = pairing.rows
    for v in span:
        if len(v) != dim:
            raise DimensionMismatchError(f"벡터 길이 {len(v)}가 페어링 차원 {dim}과 다릅니다")
    if rank(pairing) != dim:
        raise DegeneratePairingError(f"페어링이 퇴화되었습니다 (차원 {dim})")
    if not span:
        return [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    constraints = Matrix(span, cols=dim) @ pairing
    complement = kernel_basis(constraints)
    logger.debug(f"직교 여공간 계산: 차원 {dim}, 부분공간 {len(span)}개 → {len(complement)}")
    return complement


def inverse(m: Matrix) -> Matrix:
    """정사각 가역 행렬의 역행렬"""
    if m.rows != m.cols:
        raise DimensionMismatchError(f"정사각 행렬이 아닙니다: {m.shape}")
    n = m.rows
    augmented = Matrix([list(m.row(i)) + [int(i == j) for j in range(n)] for i in range(n)])
    reduced, _, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise DegeneratePairingError("행렬이 가역이 아닙니다")
    return Matrix([reduced.row(i)[n:] for i in range(n)], cols=n)


def solve(m: Matrix, b: Sequence[Scalar]) -> Vector:
    """
    M·x = b의 한 해를 반환합니다.

    Raises:
        ValueError: 해가 존재하지 않을 때
    """
    if len(b) != m.rows:
        raise DimensionMismatchError(f"우변 길이 {len(b)}가 행 수 {m.rows}와 다릅니다")
    augmented = Matrix([list(m.row(i)) + [b[i]] for i in range(m.rows)], cols=m.cols + 1)
    reduced, _, pivots = rref(augmented)
    if m.cols in pivots:
        raise ValueError("연립방정식의 해가 존재하지 않습니다")
    x = [Fraction(0)] * m.cols
    for row_index, p in enumerate(pivots):
        x[p] = reduced[row_index, m.cols]
    return tuple(x)


__all__ = [
    "Matrix",
    "Vector",
    "to_vector",
    "rref",
    "rank",
    "kernel_basis",
    "row_space_basis",
    "span_equal",
    "span_contains",
    "orthogonal_complement",
    "inverse",
    "solve",
]
