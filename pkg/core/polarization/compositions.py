"""
Weak Compositions

색 집합 Ω 위의 약조성 c (Σ c_ω = m)과 다항계수를 다룹니다.
"""

from dataclasses import dataclass
from math import factorial
from typing import Iterator, List, Sequence, Tuple

from utils.validators import validate_weak_composition


@dataclass(frozen=True, order=True)
class WeakComposition:
    """
    약조성.

    values[i]는 Ω의 i번째 색이 나타나는 횟수입니다.
    """

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "values", validate_weak_composition(self.values, len(self.values))
        )

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def parts(self) -> int:
        return len(self.values)

    def multinomial(self) -> int:
        """m! / ∏ c_ω!"""
        return multinomial(self.values)

    def is_full(self) -> bool:
        """모든 성분이 1 이하 (완전 편극 유형)"""
        return all(v <= 1 for v in self.values)

    def color_word(self) -> List[int]:
        """정렬된 색 인덱스 단어 (예: (2,1) → [0,0,1])"""
        return [i for i, v in enumerate(self.values) for _ in range(v)]

    def label(self) -> str:
        return "_".join(str(v) for v in self.values)

    def render(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    def __str__(self) -> str:
        return self.render()


def multinomial(values: Sequence[int]) -> int:
    result = factorial(sum(values))
    for v in values:
        result //= factorial(v)
    return result


def weak_compositions(parts: int, weight: int) -> Iterator[WeakComposition]:
    """
    합이 weight인 길이 parts의 약조성을 사전순으로 생성합니다.

    Examples:
        >>> [c.values for c in weak_compositions(2, 2)]
        [(0, 2), (1, 1), (2, 0)]
    """
    if parts < 1:
        raise ValueError(f"색 개수는 1 이상이어야 합니다: {parts}")

    def rec(remaining: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    for values in rec(weight, parts):
        yield WeakComposition(values)


def composition_of(counts: Sequence[int]) -> WeakComposition:
    return WeakComposition(tuple(counts))


__all__ = ["WeakComposition", "multinomial", "weak_compositions", "composition_of"]
