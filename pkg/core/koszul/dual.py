"""
Koszul Dual

1항·2항 이차 표현의 코쥘 쌍대 P^! 를 계산합니다.

쌍대 생성원 x*의 이름은 ``x_dual``이며 두 번 적용하면 원래 이름으로 돌아갑니다.
작용은 부호 표현으로 꼬인 전치 작용 x*·τ = -Σ_y a_{y,x} y* 입니다
(y·τ = Σ_x a_{y,x} x).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from core.exceptions import UnsupportedPresentationError
from core.koszul.pairing import PairingBlock, weight2_pairing
from core.linalg import orthogonal_complement, row_space_basis
from core.presentations.closure import closed_relations, closure_representatives
from core.presentations.model import Presentation
from core.trees.operations import coefficient_vector, poly_from_vector
from core.trees.poly import TreePoly
from core.trees.symbols import (
    ANTISYMMETRIC,
    PAIR,
    SYMMETRIC,
    UNARY,
    GeneratorSymbol,
    Signature,
    Symbol,
)
from utils.logging import get_logger

logger = get_logger(__name__)

DUAL_SUFFIX = "_dual"

_DUAL_KIND = {SYMMETRIC: ANTISYMMETRIC, ANTISYMMETRIC: SYMMETRIC, PAIR: PAIR, UNARY: UNARY}


def dual_name(name: str) -> str:
    """
    m → m_dual, m' → m_dual', m_dual → m

    Examples:
        >>> dual_name(dual_name("prec'"))
        "prec'"
    """
    if name.endswith("'"):
        return dual_name(name[:-1]) + "'"
    if name.endswith(DUAL_SUFFIX):
        return name[: -len(DUAL_SUFFIX)]
    return name + DUAL_SUFFIX


def dual_symbol(symbol: Symbol) -> Symbol:
    """색은 그대로 두고 이름만 바꿉니다."""
    return Symbol(dual_name(symbol.name), symbol.color)


@dataclass(frozen=True)
class DualGeneratorMap:
    """
    생성원 ↔ 쌍대 생성원 대응.

    Attributes:
        forward: x → x*
        generators: 원래 생성원
        dual_generators: 부호로 꼬인 작용을 가진 쌍대 생성원 (같은 순서)
    """

    forward: Tuple[Tuple[Symbol, Symbol], ...]
    generators: Tuple[GeneratorSymbol, ...]
    dual_generators: Tuple[GeneratorSymbol, ...]

    def to_dual(self, symbol: Symbol) -> Symbol:
        return dict(self.forward)[symbol]

    def from_dual(self, symbol: Symbol) -> Symbol:
        return {d: s for s, d in self.forward}[symbol]


def dual_generators(generators: Tuple[GeneratorSymbol, ...]) -> DualGeneratorMap:
    """
    쌍대 생성원과 그 작용을 만듭니다.

    Raises:
        UnsupportedPresentationError: 3항 이상 생성원이 있을 때
    """
    for g in generators:
        if g.arity > 2:
            raise UnsupportedPresentationError(
                f"1항·2항 생성원만 쌍대를 취할 수 있습니다: {g.symbol} (항수 {g.arity})"
            )
    # 전치: y·τ = Σ a_{y,x} x 이면 x*·τ 에 -a_{y,x} y* 가 더해짐
    swaps: Dict[Symbol, Dict[Symbol, Fraction]] = {g.symbol: {} for g in generators}
    for y in generators:
        for x, coeff in y.swap:
            target = swaps[x]
            target[dual_symbol(y.symbol)] = target.get(dual_symbol(y.symbol), 0) - coeff
    duals = []
    for g in generators:
        swap = tuple(sorted((s, Fraction(c)) for s, c in swaps[g.symbol].items() if c))
        duals.append(
            GeneratorSymbol(
                symbol=dual_symbol(g.symbol),
                arity=g.arity,
                kind=_DUAL_KIND[g.kind],
                swap=swap if g.arity == 2 else (),
            )
        )
    forward = tuple((g.symbol, dual_symbol(g.symbol)) for g in generators)
    return DualGeneratorMap(forward, tuple(generators), tuple(duals))


def _check_scope(p: Presentation) -> None:
    if not p.is_unary_binary():
        raise UnsupportedPresentationError(
            f"{p.name}: 1항·2항 생성원만 가진 표현이어야 합니다 (항수 {sorted(p.generator_arities())})"
        )
    if not p.is_quadratic():
        raise UnsupportedPresentationError(f"{p.name}: 이차가 아닌 관계가 있습니다")


def pairing_blocks(p: Presentation) -> List[PairingBlock]:
    """가중치 2 기저가 비어 있지 않은 항수 1..3 성분의 페어링"""
    _check_scope(p)
    gmap = dual_generators(p.generators)
    blocks = []
    for arity in (1, 2, 3):
        block = weight2_pairing(p.generators, gmap.dual_generators, gmap.to_dual, arity)
        if block.dimension:
            blocks.append(block)
    return blocks


def dual_component(p: Presentation, block: PairingBlock) -> List[TreePoly]:
    """한 성분의 R^⊥ 기저 (쌍대 기저 위의 다항식)"""
    relations = closed_relations(p, block.arity, 2)
    vectors = [coefficient_vector(r, block.basis) for r in relations]
    complement = orthogonal_complement(vectors, block.matrix)
    logger.debug(
        f"{p.name}: 항수 {block.arity} 성분 dim R = {len(vectors)}, dim R^⊥ = {len(complement)}"
        f" / {block.dimension}"
    )
    return [poly_from_vector(v, block.dual_basis) for v in row_space_basis(complement)]


def koszul_dual(p: Presentation) -> Presentation:
    """
    코쥘 쌍대 표현 P^! = T(M^∨) / (R^⊥).

    관계는 각 성분에서 R^⊥의 기약 행 중 S_n 생성에 필요한 것만 남깁니다.

    Raises:
        UnsupportedPresentationError: 1항·2항 이차 표현이 아닐 때
    """
    _check_scope(p)
    gmap = dual_generators(p.generators)
    signature = Signature(gmap.dual_generators)
    relations: List[TreePoly] = []
    for block in pairing_blocks(p):
        relations.extend(closure_representatives(dual_component(p, block), signature))
    name = dual_name(p.name)
    logger.info(f"{p.name}의 코쥘 쌍대 {name}: 관계 대표 {len(relations)}개")
    return Presentation(name, gmap.dual_generators, relations, (), p.colors)


def double_dual_map(p: Presentation) -> Dict[Symbol, Symbol]:
    """(P^!)^! 의 생성원 → P 의 생성원 (이름이 같아야 함)"""
    return {dual_symbol(dual_symbol(g.symbol)): g.symbol for g in p.generators}


__all__ = [
    "DUAL_SUFFIX",
    "dual_name",
    "dual_symbol",
    "DualGeneratorMap",
    "dual_generators",
    "pairing_blocks",
    "dual_component",
    "koszul_dual",
    "double_dual_map",
]
