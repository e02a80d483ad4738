"""
Linear Algebra Module

정확한 유리수 선형대수(행 축약, 영공간, 직교 여공간)를 제공합니다.
"""

from .matrix import (
    Matrix,
    Vector,
    to_vector,
    rref,
    rank,
    kernel_basis,
    row_space_basis,
    span_equal,
    span_contains,
    orthogonal_complement,
    inverse,
    solve,
)
from .rowspace import RowSpace, sparse

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
    "RowSpace",
    "sparse",
]
