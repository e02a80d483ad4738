"""
Sparse Row Space

희소 벡터(키 → 유리수)로 이루어진 부분공간을 점진적으로 관리합니다.

각 기저 행은 자신의 최소 키를 피벗으로 가지며 피벗 계수는 1입니다.
키는 서로 비교 가능해야 합니다 (트리 단항식, 정수, 튜플 등).
"""

from fractions import Fraction
from typing import Dict, Generic, Hashable, Iterable, List, Mapping, Optional, Tuple, TypeVar

K = TypeVar("K", bound=Hashable)

SparseVector = Dict[K, Fraction]


def sparse(vector: Mapping[K, object]) -> Dict[K, Fraction]:
    """0 성분을 제거한 Fraction 사전으로 변환합니다."""
    return {k: Fraction(v) for k, v in vector.items() if v != 0}


class RowSpace(Generic[K]):
    """
    희소 유리수 행 공간.

    Examples:
        >>> space = RowSpace()
        >>> space.add({"a": 1, "b": 1})
        True
        >>> space.contains({"a": 2, "b": 2})
        True
    """

    def __init__(self, vectors: Iterable[Mapping[K, object]] = ()):
        self._rows: Dict[K, Dict[K, Fraction]] = {}
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def pivots(self) -> List[K]:
        return sorted(self._rows)

    def reduce(self, vector: Mapping[K, object]) -> Dict[K, Fraction]:
        """
        벡터를 현재 기저로 축약한 나머지를 반환합니다.

        피벗 행은 피벗보다 큰 키만 포함하므로 가장 작은 피벗부터
        소거하면 반드시 종료됩니다.
        """
        v = sparse(vector)
        while True:
            candidates = [k for k in v if k in self._rows]
            if not candidates:
                return v
            k = min(candidates)
            factor = v[k]
            for key, coeff in self._rows[k].items():
                value = v.get(key, Fraction(0)) - factor * coeff
                if value:
                    v[key] = value
                else:
                    v.pop(key, None)

    def add(self, vector: Mapping[K, object]) -> bool:
        """
        벡터를 추가합니다.

        Returns:
            bool: 공간이 커졌으면 True, 이미 포함되어 있었으면 False
        """
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        lead = residue[pivot]
        self._rows[pivot] = {k: c / lead for k, c in residue.items()}
        return True

    def extend(self, vectors: Iterable[Mapping[K, object]]) -> int:
        """여러 벡터를 추가하고 늘어난 차원을 반환합니다."""
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vector: Mapping[K, object]) -> bool:
        return not self.reduce(vector)

    def contains_space(self, other: "RowSpace[K]") -> bool:
        return all(self.contains(row) for row in other.rows())

    def rows(self) -> List[Dict[K, Fraction]]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def reduced_basis(self) -> Tuple[Tuple[Tuple[K, Fraction], ...], ...]:
        """
        완전 기약 기저를 반환합니다.

        같은 공간이면 항상 같은 값을 돌려주므로 해시/비교 키로 쓸 수 있습니다.
        """
        done: Dict[K, Dict[K, Fraction]] = {}
        for p in sorted(self._rows, reverse=True):
            row = dict(self._rows[p])
            for q in [k for k in row if k != p and k in done]:
                factor = row.get(q)
                if not factor:
                    continue
                for key, coeff in done[q].items():
                    value = row.get(key, Fraction(0)) - factor * coeff
                    if value:
                        row[key] = value
                    else:
                        row.pop(key, None)
            done[p] = row
        return tuple(tuple(sorted(done[p].items())) for p in sorted(done))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    def copy(self) -> "RowSpace[K]":
        clone: RowSpace[K] = RowSpace()
        clone._rows = {p: dict(row) for p, row in self._rows.items()}
        return clone

    def coordinates(self, keys: List[K]) -> List[Tuple[Fraction, ...]]:
        """주어진 키 순서의 조밀 좌표로 기저를 변환합니다."""
        index = {k: i for i, k in enumerate(keys)}
        result = []
        for row in self.rows():
            vec = [Fraction(0)] * len(keys)
            for k, c in row.items():
                vec[index[k]] = c
            result.append(tuple(vec))
        return result

    def witness_outside(self, other: "RowSpace[K]") -> Optional[Dict[K, Fraction]]:
        """other의 기저 중 이 공간에 속하지 않는 첫 벡터를 반환합니다."""
        for row in other.rows():
            if not self.contains(row):
                return row
        return None


__all__ = ["RowSpace", "SparseVector", "sparse"]
