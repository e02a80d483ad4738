"""
Component Dimensions

2항 표현이 정하는 오퍼라드의 항수별 차원과 합성곱(plethysm) 차원을 계산합니다.
"""

from math import prod
from typing import Dict, List, Sequence

from sympy.utilities.iterables import multiset_partitions

from config import get_config
from core.exceptions import ResourceGuardError, UnsupportedPresentationError
from core.presentations.closure import closed_relations, s_closure
from core.presentations.model import Presentation
from core.trees.monomial import Node, TreeMonomial
from core.trees.operations import compose_at, count_basis
from core.trees.poly import TreePoly
from utils.logging import get_logger

logger = get_logger(__name__)


def _generator_polys(p: Presentation) -> List[TreePoly]:
    return [TreePoly.monomial(TreeMonomial(Node(g.symbol, (1, 2)))) for g in p.generators]


def ideal_components(p: Presentation, n: int) -> Dict[int, List[TreePoly]]:
    """
    항수 2..n 에서 관계가 생성하는 아이디얼 I(k) 의 선형 독립 생성 집합.

    I(k) 는 k에서 시작하는 관계 성분과 I(k-1) 을 생성원 하나와 위아래로 합성한 것의
    S_k 폐포입니다.
    """
    signature = p.signature
    gens = _generator_polys(p)
    ideal: Dict[int, List[TreePoly]] = {1: []}
    for k in range(2, n + 1):
        seeds: List[TreePoly] = []
        for arity, weight in p.components():
            if arity == k:
                seeds.extend(closed_relations(p, arity, weight))
        for f in ideal[k - 1]:
            for g in gens:
                for i in range(1, k):
                    seeds.append(compose_at(f, i, g, signature))
                seeds.append(compose_at(g, 1, f, signature))
        ideal[k] = s_closure(seeds, signature)
        logger.debug(f"{p.name}: I({k}) 차원 {len(ideal[k])}")
    return ideal


def component_dimension(p: Presentation, n: int) -> int:
    """
    dim P(n) = dim T(M)(n) - dim I(n).

    Raises:
        UnsupportedPresentationError: 2항이 아닌 생성원이 있을 때
        ResourceGuardError: n이 설정의 항수 한도를 넘을 때
    """
    if not p.is_binary():
        raise UnsupportedPresentationError(
            f"{p.name}: 차원 계산은 2항 생성원만 지원합니다 (항수 {sorted(p.generator_arities())})"
        )
    limit = get_config().engine.max_arity
    if n > limit:
        raise ResourceGuardError(f"항수 {n}이(가) 한도 {limit}를 넘습니다", limit)
    if n < 1:
        raise ValueError(f"항수는 1 이상이어야 합니다: {n}")
    total = count_basis(p.generators, n, n - 1)
    ideal = ideal_components(p, n)[n] if n > 1 else []
    dim = total - len(ideal)
    logger.info(f"{p.name}: dim({n}) = {total} - {len(ideal)} = {dim}")
    return dim


def dimension_sequence(p: Presentation, n: int) -> List[int]:
    """항수 1..n 의 차원"""
    ideal = ideal_components(p, n) if n > 1 else {1: []}
    return [count_basis(p.generators, k, k - 1) - len(ideal.get(k, [])) for k in range(1, n + 1)]


def plethysm_dimension(dims_p: Sequence[int], dims_q: Sequence[int], n: int) -> int:
    """
    dim (P∘Q)(n) = Σ_π dim P(|π|) · Π_{B∈π} dim Q(|B|), π 는 {1..n} 의 집합 분할.

    dims_p[k-1] 이 항수 k의 차원이며, 목록 밖 항수는 0으로 봅니다.

    Examples:
        >>> plethysm_dimension([1, 1, 1, 1], [1, 1, 1, 1], 4)
        15
    """

    def dim(dims: Sequence[int], k: int) -> int:
        return dims[k - 1] if 1 <= k <= len(dims) else 0

    total = 0
    for partition in multiset_partitions(list(range(1, n + 1))):
        total += dim(dims_p, len(partition)) * prod(dim(dims_q, len(block)) for block in partition)
    return total


__all__ = [
    "ideal_components",
    "component_dimension",
    "dimension_sequence",
    "plethysm_dimension",
]
