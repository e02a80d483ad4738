"""
Operadic Quasipolarization

트리 다항식의 준편극(quasipolarization), 복원(restitution), 형식 전개 검산기를 제공합니다.
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy

from core.exceptions import WeightError
from core.polarization.compositions import WeakComposition, weak_compositions
from core.polarization.lifts import all_lifts, lifts_of_type
from core.trees.poly import TreePoly
from core.trees.symbols import Symbol
from utils.logging import get_logger

logger = get_logger(__name__)


def quasipolarize(f: TreePoly, palette: Sequence[str], c: WeakComposition) -> TreePoly:
    """
    유형 c의 준편극.

    f의 각 단항식을 유형 c인 모든 리프트의 합으로 바꿉니다.

    Args:
        f: 가중치 m의 동차 다항식
        palette: 순서 있는 색 집합 Ω
        c: 합이 m인 약조성

    Raises:
        WeightError: 가중치가 맞지 않을 때
    """
    if f.is_zero():
        return f
    if f.weight != c.weight:
        raise WeightError(f"다항식 가중치 {f.weight}가 약조성 합 {c.weight}와 다릅니다")
    pairs: List[Tuple] = []
    for mono, coeff in f.items():
        for lift in lifts_of_type(mono, palette, c):
            pairs.append((lift.colored, coeff))
    return TreePoly.accumulate(pairs)


def polarization_family(
    f: TreePoly, palette: Sequence[str]
) -> List[Tuple[WeakComposition, TreePoly]]:
    """모든 유형 c (사전순)에 대한 (c, 준편극) 목록"""
    if f.is_zero():
        return []
    return [(c, quasipolarize(f, palette, c)) for c in weak_compositions(len(palette), f.weight)]


def full_polarization(f: TreePoly, prefix: str = "c") -> TreePoly:
    """Ω_m = {c0..c(m-1)}, c = (1,…,1)인 완전 편극"""
    m = f.weight or 0
    palette = [f"{prefix}{i}" for i in range(m)]
    return quasipolarize(f, palette, WeakComposition((1,) * m))


def strip_color_layer(symbol: Symbol) -> Symbol:
    """가장 바깥(마지막) 색 층을 제거합니다."""
    if not symbol.color:
        return symbol
    head, _, _ = symbol.color.rpartition(".")
    return Symbol(symbol.name, head)


def restitute(g: TreePoly) -> TreePoly:
    """
    색을 입힌 생성원을 원래 생성원으로 되돌립니다.

    유형 c의 준편극에 적용하면 다항계수 배가 됩니다.
    """
    return g.map_symbols(strip_color_layer)


def lambda_symbols(palette: Sequence[str]) -> Tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"lambda_0:{len(palette)}")


def expand_formal(f: TreePoly, palette: Sequence[str]) -> Dict[Tuple[int, ...], TreePoly]:
    """
    생성원을 Σ λ_ω x_ω로 치환한 형식 전개를 λ 단항식별로 모읍니다.

    준편극과 독립적으로 모든 색칠(Ω^m)을 직접 전개하므로 재구성 검산에 씁니다.

    Returns:
        Dict[Tuple[int, ...], TreePoly]: λ 지수 벡터 → 그 계수 다항식
    """
    lambdas = lambda_symbols(palette)
    index = {name: i for i, name in enumerate(palette)}
    grouped: Dict[Tuple[int, ...], List[Tuple]] = {}
    for mono, coeff in f.items():
        for lift in all_lifts(mono, palette):
            term = sympy.Mul(*[lambdas[index[c]] for c in lift.colors])
            exponent = sympy.Poly(term, *lambdas).monoms()[0]
            grouped.setdefault(tuple(exponent), []).append((lift.colored, coeff))
    result = {e: TreePoly.accumulate(pairs) for e, pairs in grouped.items()}
    return {e: p for e, p in result.items() if not p.is_zero()}


def evaluate_at(
    f: TreePoly, palette: Sequence[str], point: Sequence[Fraction]
) -> TreePoly:
    """
    λ = point에서의 치환 Σ_c λ^c · f_c.

    Ω-선형 호환 대수가 모든 선형결합에서 관계를 만족하는지 검사할 때 씁니다.
    """
    total = TreePoly()
    for c, part in polarization_family(f, palette):
        scale = Fraction(1)
        for value, power in zip(point, c.values):
            scale *= Fraction(value) ** power
        total = total + scale * part
    return total


__all__ = [
    "quasipolarize",
    "polarization_family",
    "full_polarization",
    "strip_color_layer",
    "restitute",
    "lambda_symbols",
    "expand_formal",
    "evaluate_at",
]
