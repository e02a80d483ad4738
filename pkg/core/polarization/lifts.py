"""
Lifts

트리 단항식의 꼭짓점에 색을 입히는 리프트(lift)를 열거합니다.

리프트는 전위 순회 순서의 색 단어로 표현하며, 같은 유형의 리프트는
색 인덱스 단어의 사전순으로 나열합니다. 이 순서가 표준 엽층(foliation)의
번호를 정합니다.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from core.exceptions import WeightError
from core.polarization.compositions import WeakComposition
from core.trees.monomial import TreeMonomial


@dataclass(frozen=True)
class Lift:
    """
    리프트.

    Attributes:
        tree: 원래 (색 없는 또는 한 층 아래의) 단항식
        colors: 전위 순서의 색 이름
    """

    tree: TreeMonomial
    colors: Tuple[str, ...]

    @cached_property
    def colored(self) -> TreeMonomial:
        return self.tree.colored(list(self.colors))

    def type_in(self, palette: Sequence[str]) -> WeakComposition:
        """색 집합 palette에 대한 유형 (색별 개수)"""
        return WeakComposition(tuple(self.colors.count(c) for c in palette))


def lifts_of_type(
    tree: TreeMonomial, palette: Sequence[str], c: WeakComposition
) -> List[Lift]:
    """
    유형 c인 모든 리프트를 전위 색 단어의 사전순으로 반환합니다.

    개수는 m! / ∏ c_ω! 입니다.

    Raises:
        WeightError: 트리 가중치가 c의 합과 다를 때
        ValueError: c의 길이가 색 개수와 다를 때
    """
    if c.parts != len(palette):
        raise ValueError(f"약조성 길이 {c.parts}가 색 개수 {len(palette)}와 다릅니다")
    if tree.weight != c.weight:
        raise WeightError(f"트리 가중치 {tree.weight}가 약조성 합 {c.weight}와 다릅니다")
    if c.weight == 0:
        return [Lift(tree, ())]
    return [
        Lift(tree, tuple(palette[i] for i in word))
        for word in multiset_permutations(c.color_word())
    ]


def all_lifts(tree: TreeMonomial, palette: Sequence[str]) -> List[Lift]:
    """모든 유형의 리프트 (색 단어 사전순)"""
    return [
        Lift(tree, tuple(palette[i] for i in word))
        for word in product(range(len(palette)), repeat=tree.weight)
    ]


__all__ = ["Lift", "lifts_of_type", "all_lifts"]
