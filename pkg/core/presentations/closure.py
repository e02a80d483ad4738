"""
Relation Closure

관계 집합의 S_n 폐포와 성분별 좌표를 계산합니다.
"""

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from config import get_config
from core.linalg import RowSpace, row_space_basis
from core.presentations.model import Presentation
from core.trees.monomial import TreeMonomial
from core.trees.operations import act, coefficient_vector, enumerate_basis
from core.trees.permutations import adjacent_transpositions, all_permutations
from core.trees.poly import TreePoly
from utils.logging import get_logger

logger = get_logger(__name__)


def s_closure(relations: Sequence[TreePoly], signature: Mapping) -> List[TreePoly]:
    """
    관계들이 생성하는 S_n 부분가군의 생성 집합.

    인접 호환으로 너비 우선 탐색하며, 이미 생성 공간에 있는 이동은 버립니다.
    반환값은 선형 독립인 이동들(입력 중 독립인 것 포함)입니다.
    """
    spaces: Dict[int, RowSpace] = {}
    out: List[TreePoly] = []
    queue: deque = deque()
    for rel in relations:
        if rel.is_zero():
            continue
        space = spaces.setdefault(rel.arity, RowSpace())
        if space.add(rel):
            out.append(rel)
            queue.append(rel)
    while queue:
        f = queue.popleft()
        space = spaces[f.arity]
        for t in adjacent_transpositions(f.arity):
            g = act(f, t, signature)
            if space.add(g):
                out.append(g)
                queue.append(g)
    return out


def closure_representatives(polys: Sequence[TreePoly], signature: Mapping) -> List[TreePoly]:
    """
    S_n 폐포가 polys 전체의 생성 공간을 덮도록 앞에서부터 대표를 골라 냅니다.

    이미 고른 대표들의 폐포에 들어 있는 다항식은 건너뜁니다.
    """
    space: RowSpace = RowSpace()
    chosen: List[TreePoly] = []
    for f in polys:
        if f.is_zero() or space.contains(f):
            continue
        chosen.append(f.normalized())
        space.extend(s_closure([f], signature))
    return chosen


def relation_space(relations: Sequence[TreePoly]) -> RowSpace:
    return RowSpace(relations)


def _closed_relations(p: Presentation, arity: int, weight: int) -> Tuple[TreePoly, ...]:
    seeds = [r for r in p.relations if r.arity == arity and r.weight == weight]
    closed = tuple(s_closure(seeds, p.signature))
    logger.debug(f"{p.name}: 성분 ({arity}, {weight}) 폐포 차원 {len(closed)}")
    return closed


closed_relations = lru_cache(maxsize=get_config().engine.closure_cache_size)(_closed_relations)
closed_relations.__doc__ = "성분 (arity, weight)의 S_n 폐포 생성 집합 (캐시됨)"


def closed_space(p: Presentation, arity: int, weight: int) -> RowSpace:
    return RowSpace(closed_relations(p, arity, weight))


def all_closed_relations(p: Presentation) -> List[TreePoly]:
    out: List[TreePoly] = []
    for arity, weight in p.components():
        out.extend(closed_relations(p, arity, weight))
    return out


def relation_component(p: Presentation, arity: int, weight: int) -> List[Tuple[Fraction, ...]]:
    """
    열거 기저에서 S_n 폐포 관계 공간의 좌표 (기약 행 사다리꼴 기저).

    Returns:
        List[Tuple[Fraction, ...]]: T(M)^{(m)}(n) 기저 순서의 좌표 벡터
    """
    basis = enumerate_basis(p.generators, arity, weight)
    vectors = [coefficient_vector(r, basis) for r in closed_relations(p, arity, weight)]
    return row_space_basis(vectors, len(basis))


def component_basis(p: Presentation, arity: int, weight: int) -> List[TreeMonomial]:
    return enumerate_basis(p.generators, arity, weight)


def is_s_stable(p: Presentation) -> bool:
    """모든 관계와 모든 ρ에 대해 r·ρ가 관계 공간에 있는지"""
    for arity, weight in p.components():
        space = closed_space(p, arity, weight)
        for rel in p.relations:
            if (rel.arity, rel.weight) != (arity, weight):
                continue
            for rho in all_permutations(arity):
                if not space.contains(act(rel, rho, p.signature)):
                    return False
    return True


def same_relation_spans(p: Presentation, q: Presentation) -> bool:
    """같은 생성원 기호 위에서 두 표현의 폐포 관계 공간이 같은지"""
    return span_witness(p, q) is None


def span_witness(p: Presentation, q: Presentation) -> Optional[Dict[str, object]]:
    """
    두 표현의 폐포 관계 공간이 다른 첫 성분과 반례 관계를 찾습니다.

    Returns:
        같으면 None, 다르면 {"component", "missing_from", "relation"}
    """
    for arity, weight in sorted(set(p.components()) | set(q.components())):
        left = closed_space(p, arity, weight)
        right = closed_space(q, arity, weight)
        for source, target, label in ((left, right, q.name), (right, left, p.name)):
            row = target.witness_outside(source)
            if row is not None:
                return {
                    "component": (arity, weight),
                    "missing_from": label,
                    "relation": TreePoly(row).render(),
                    "dimensions": (left.dim, right.dim),
                }
    return None


def span_contained(p: Presentation, q: Presentation) -> Optional[Dict[str, object]]:
    """p의 관계 공간이 q의 관계 공간에 포함되는지. 포함되면 None, 아니면 반례."""
    for arity, weight in p.components():
        row = closed_space(q, arity, weight).witness_outside(closed_space(p, arity, weight))
        if row is not None:
            return {"component": (arity, weight), "relation": TreePoly(row).render()}
    return None


__all__ = [
    "s_closure",
    "closure_representatives",
    "relation_space",
    "closed_relations",
    "closed_space",
    "all_closed_relations",
    "relation_component",
    "component_basis",
    "is_s_stable",
    "same_relation_spans",
    "span_witness",
    "span_contained",
]
