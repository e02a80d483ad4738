"""
Weight-2 Pairing

T(M)^{(2)}(n)과 T(M^∨)^{(2)}(n) 사이의 대각 페어링을 정의합니다.

단항식 t는 장식만 쌍대 기호로 바꾼 t*와만 짝지어지고, 부호는 모양으로 정합니다.
항수 3의 2항-2항 성분에서 부호표는 다음과 같습니다::

    x(y(1,2),3)   +1
    x(y(1,3),2)   -1
    x(1,y(2,3))   -1

1항 생성원이 섞인 성분은 모두 +1입니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from core.exceptions import UnsupportedPresentationError
from core.linalg import Matrix
from core.trees.monomial import Node, TreeMonomial
from core.trees.operations import enumerate_basis
from core.trees.symbols import GeneratorSymbol, Symbol

LEFT_COMB_12 = "x(y(1,2),3)"
LEFT_COMB_13 = "x(y(1,3),2)"
RIGHT_COMB = "x(1,y(2,3))"

SIGN_TABLE: Dict[str, int] = {
    LEFT_COMB_12: 1,
    LEFT_COMB_13: -1,
    RIGHT_COMB: -1,
}


def binary_shape(mono: TreeMonomial) -> str:
    """
    항수 3, 가중치 2의 2항 단항식 모양 이름.

    Raises:
        UnsupportedPresentationError: 해당 성분의 단항식이 아닐 때
    """
    root = mono.root
    if mono.arity != 3 or mono.weight != 2 or len(root.children) != 2:
        raise UnsupportedPresentationError(f"항수 3의 2항 이차 단항식이 아닙니다: {mono}")
    first, second = root.children
    if isinstance(second, Node):
        return RIGHT_COMB
    return LEFT_COMB_12 if mono.leaves == (1, 2, 3) else LEFT_COMB_13


def pairing_sign(mono: TreeMonomial) -> int:
    if mono.weight != 2:
        raise UnsupportedPresentationError(f"가중치 2 단항식이 아닙니다: {mono}")
    if mono.arity == 3 and all(len(v.children) == 2 for v in mono.vertices()):
        return SIGN_TABLE[binary_shape(mono)]
    return 1


@dataclass(frozen=True)
class PairingBlock:
    """
    한 항수 성분의 페어링.

    Attributes:
        arity: 항수 n
        basis: T(M)^{(2)}(n) 기저
        dual_basis: T(M^∨)^{(2)}(n) 기저 (basis[i]의 짝이 dual_basis[i])
        signs: ⟨basis[i], dual_basis[i]⟩
    """

    arity: int
    basis: Tuple[TreeMonomial, ...]
    dual_basis: Tuple[TreeMonomial, ...]
    signs: Tuple[int, ...]

    @property
    def matrix(self) -> Matrix:
        return Matrix.diagonal([Fraction(s) for s in self.signs])

    @property
    def dimension(self) -> int:
        return len(self.basis)


def weight2_pairing(
    generators: Sequence[GeneratorSymbol],
    dual_generators: Sequence[GeneratorSymbol],
    to_dual: Callable[[Symbol], Symbol],
    arity: int,
) -> PairingBlock:
    """
    항수 arity 성분의 대각 페어링을 만듭니다.

    Args:
        generators: M의 생성원
        dual_generators: M^∨의 생성원
        to_dual: 기호 x → x*
        arity: 1, 2, 3 중 하나

    Raises:
        UnsupportedPresentationError: 3항 이상 생성원이 있거나 항수가 범위 밖일 때
    """
    if any(g.arity > 2 for g in generators):
        raise UnsupportedPresentationError("1항·2항 생성원만 페어링할 수 있습니다")
    if arity not in (1, 2, 3):
        raise UnsupportedPresentationError(f"가중치 2 성분의 항수는 1..3입니다: {arity}")
    basis = enumerate_basis(generators, arity, 2)
    dual_basis = enumerate_basis(dual_generators, arity, 2)
    index = {m: i for i, m in enumerate(dual_basis)}
    paired: List[TreeMonomial] = []
    for mono in basis:
        image = mono.with_symbols(to_dual)
        if image not in index:
            raise UnsupportedPresentationError(f"쌍대 기저에 {image}이(가) 없습니다")
        paired.append(image)
    if len(paired) != len(dual_basis):
        raise UnsupportedPresentationError(
            f"기저 크기가 다릅니다: {len(paired)} != {len(dual_basis)} (항수 {arity})"
        )
    return PairingBlock(
        arity=arity,
        basis=tuple(basis),
        dual_basis=tuple(paired),
        signs=tuple(pairing_sign(m) for m in basis),
    )


__all__ = [
    "SIGN_TABLE",
    "LEFT_COMB_12",
    "LEFT_COMB_13",
    "RIGHT_COMB",
    "binary_shape",
    "pairing_sign",
    "PairingBlock",
    "weight2_pairing",
]
