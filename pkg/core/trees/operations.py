"""
Tree Operations

셔플 정규화, 대칭군 작용, 자유 오퍼라드 접목(grafting), 기저 열거를 제공합니다.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from config import get_config
from core.exceptions import ArityError, BasisError
from core.trees.monomial import Node, Tree, TreeMonomial, map_leaves, min_leaf, tree_leaves
from core.trees.permutations import inverse
from core.trees.poly import Coefficient, TreePoly
from core.trees.symbols import GeneratorSymbol, Signature
from utils.logging import get_logger
from utils.validators import check_resource_guard, validate_permutation

logger = get_logger(__name__)

# 정규화 중간 결과: (정규 트리, 계수) 목록
_Terms = List[Tuple[Tree, Fraction]]


def _canonical_terms(tree: Tree, signature: Mapping) -> _Terms:
    if isinstance(tree, int):
        return [(tree, Fraction(1))]
    generator = signature[tree.symbol]
    if len(tree.children) != generator.arity:
        raise ArityError(
            f"{tree.symbol}의 자식 수 {len(tree.children)}가 항수 {generator.arity}와 다릅니다"
        )
    child_terms = [_canonical_terms(c, signature) for c in tree.children]
    mins = [min_leaf(c) for c in tree.children]
    # perm[j] = j번째로 작은 자식의 원래 위치 (1부터)
    perm = tuple(i + 1 for i in sorted(range(len(mins)), key=lambda i: mins[i]))
    ordered = [child_terms[p - 1] for p in perm]
    out: _Terms = []
    for symbol, a in generator.act(perm):
        for combo in product(*ordered):
            coeff = a
            for _, c in combo:
                coeff *= c
            if coeff:
                out.append((Node(symbol, tuple(t for t, _ in combo)), coeff))
    return out


def canonicalize(raw: Tree, signature: Mapping) -> TreePoly:
    """
    임의 자식 순서의 트리를 셔플 정규형 다항식으로 바꿉니다.

    g(c_1..c_k)는 자식을 최소 잎 순서로 정렬한 뒤 (g·π)(c_π(1)..c_π(k))가 됩니다.
    π(j)는 j번째로 작은 자식의 위치입니다.

    Args:
        raw: 원시 트리
        signature: 기호 → 생성원 사전

    Returns:
        TreePoly: 정규형 다항식

    Raises:
        ArityError: 자식 수가 생성원 항수와 다를 때
        ValueError: 잎 레이블이 1..n의 전단사가 아닐 때
    """
    labels = tree_leaves(raw)
    if len(set(labels)) != len(labels):
        raise ValueError(f"잎 레이블이 중복되었습니다: {labels}")
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise ValueError(f"잎 레이블은 1..{len(labels)}이어야 합니다: {labels}")
    return TreePoly.accumulate((TreeMonomial(t), c) for t, c in _canonical_terms(raw, signature))


def act(f: TreePoly, rho: Sequence[int], signature: Mapping) -> TreePoly:
    """
    대칭군의 오른쪽 작용 f·ρ.

    잎 ℓ을 ρ⁻¹(ℓ)로 바꾼 뒤 다시 정규화하므로 act(act(f, ρ), τ) = act(f, ρ∘τ)입니다.

    Raises:
        ArityError: 순열 차수가 항수와 다를 때
    """
    if f.is_zero():
        return f
    if len(rho) != f.arity:
        raise ArityError(f"순열 차수 {len(rho)}가 항수 {f.arity}와 다릅니다")
    rho = validate_permutation(rho)
    inv = inverse(rho)
    pairs: List[Tuple[TreeMonomial, Fraction]] = []
    for mono, coeff in f.items():
        relabeled = map_leaves(mono.root, lambda leaf: inv[leaf - 1])
        for t, c in _canonical_terms(relabeled, signature):
            pairs.append((TreeMonomial(t), coeff * c))
    return TreePoly.accumulate(pairs)


def identity_poly() -> TreePoly:
    """가중치 0의 항등 트리 (잎 하나)"""
    return TreePoly.monomial(TreeMonomial(1))


def graft(
    outer: TreeMonomial,
    inners: Sequence[TreePoly],
    signature: Mapping,
    shuffle: Optional[Sequence[int]] = None,
) -> TreePoly:
    """
    잎 i에 inners[i]를 접목합니다 (다중선형 확장).

    inner의 잎은 앞선 inner들의 항수만큼 이동한 연속 구간으로 다시 번호를 매깁니다.
    잎 집합이 연속 구간이 아닌 합성은 shuffle을 주면 결과에 act(·, shuffle)로 작용합니다.

    Raises:
        ArityError: inners 개수가 outer 항수와 다르거나 shuffle 차수가 결과 항수와 다를 때
    """
    if len(inners) != outer.arity:
        raise ArityError(f"접목할 트리 수 {len(inners)}가 외부 항수 {outer.arity}와 다릅니다")
    offsets: Dict[int, int] = {}
    running = 0
    for i, inner in enumerate(inners, start=1):
        if inner.is_zero():
            return TreePoly()
        offsets[i] = running
        running += inner.arity

    def substitute(tree: Tree, chosen: Dict[int, Tree]) -> Tree:
        if isinstance(tree, int):
            return chosen[tree]
        return Node(tree.symbol, tuple(substitute(c, chosen) for c in tree.children))

    pairs: List[Tuple[TreeMonomial, Fraction]] = []
    term_lists = [list(inner.items()) for inner in inners]
    for combo in product(*term_lists):
        coeff = Fraction(1)
        chosen: Dict[int, Tree] = {}
        for i, (mono, c) in enumerate(combo, start=1):
            coeff *= c
            shift = offsets[i]
            chosen[i] = map_leaves(mono.root, lambda leaf, s=shift: leaf + s)
        for t, c in _canonical_terms(substitute(outer.root, chosen), signature):
            pairs.append((TreeMonomial(t), coeff * c))
    grafted = TreePoly.accumulate(pairs)
    return grafted if shuffle is None else act(grafted, shuffle, signature)


def graft_poly(
    outer: TreePoly,
    inners: Sequence[TreePoly],
    signature: Mapping,
    shuffle: Optional[Sequence[int]] = None,
) -> TreePoly:
    """outer도 다항식인 접목"""
    result = TreePoly()
    for mono, coeff in outer.items():
        result = result + coeff * graft(mono, inners, signature, shuffle)
    return result


def compose_at(f: TreePoly, i: int, g: TreePoly, signature: Mapping) -> TreePoly:
    """
    부분 합성 f ∘_i g.

    f의 잎 i 자리에 g를 넣고 나머지 잎은 항등 트리로 둡니다.
    """
    if f.is_zero() or g.is_zero():
        return TreePoly()
    if not 1 <= i <= f.arity:
        raise ArityError(f"합성 위치 {i}가 항수 {f.arity} 범위를 벗어납니다")
    inners = [g if j == i else identity_poly() for j in range(1, f.arity + 1)]
    return graft_poly(f, inners, signature)


@lru_cache(maxsize=None)
def _trees_on(
    leafset: Tuple[int, ...], weight: int, generators: Tuple[GeneratorSymbol, ...]
) -> Tuple[Tree, ...]:
    if weight == 0:
        return (leafset[0],) if len(leafset) == 1 else ()
    out: List[Tree] = []
    for g in generators:
        k = g.arity
        if k > len(leafset):
            continue
        if k == 1:
            blockings = [[list(leafset)]]
        else:
            blockings = [
                sorted((tuple(sorted(b)) for b in p), key=min)
                for p in multiset_partitions(list(leafset), k)
            ]
        for blocks in blockings:
            for weights in _distributions(weight - 1, k):
                choices = [
                    _trees_on(tuple(b), w, generators) for b, w in zip(blocks, weights)
                ]
                if any(not c for c in choices):
                    continue
                for combo in product(*choices):
                    out.append(Node(g.symbol, tuple(combo)))
    return tuple(out)


def _distributions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_basis(
    generators: Sequence[GeneratorSymbol], arity: int, weight: int
) -> List[TreeMonomial]:
    """
    T(M)^{(m)}(n)의 정규 단항식 기저를 결정적 순서로 열거합니다.

    Args:
        generators: 생성원 (장식 기저)
        arity: 항수 n (1 이상)
        weight: 가중치 m (0 이상)

    Returns:
        List[TreeMonomial]: 정렬 키 순서의 중복 없는 단항식 목록
    """
    if arity < 1 or weight < 0:
        raise ArityError(f"잘못된 성분입니다: 항수 {arity}, 가중치 {weight}")
    engine = get_config().engine
    check_resource_guard("가중치", weight, engine.max_weight)
    check_resource_guard("항수", arity, engine.max_arity)
    trees = _trees_on(tuple(range(1, arity + 1)), weight, tuple(generators))
    basis = sorted((TreeMonomial(t) for t in trees), key=lambda m: m.sort_key)
    logger.debug(f"기저 열거: 항수 {arity}, 가중치 {weight} → {len(basis)}개")
    return basis


def count_basis(generators: Sequence[GeneratorSymbol], arity: int, weight: int) -> int:
    """
    기저 크기를 트리를 만들지 않고 세는 독립 재귀 계수기.

    크기 n 잎 집합에서의 개수는 레이블과 무관하므로 크기만으로 점화합니다.
    """
    by_arity: Dict[int, int] = {}
    for g in generators:
        by_arity[g.arity] = by_arity.get(g.arity, 0) + 1

    @lru_cache(maxsize=None)
    def count(n: int, m: int) -> int:
        if m == 0:
            return 1 if n == 1 else 0
        total = 0
        for k, gens in by_arity.items():
            total += gens * blocks(n, k, m - 1)
        return total

    @lru_cache(maxsize=None)
    def blocks(n: int, k: int, m: int) -> int:
        # 최소 원소를 포함하는 첫 블록을 고르고 나머지를 재귀
        if k == 0:
            return 1 if n == 0 and m == 0 else 0
        total = 0
        for size in range(1, n - k + 2):
            ways = comb(n - 1, size - 1)
            for w in range(m + 1):
                total += ways * count(size, w) * blocks(n - size, k - 1, m - w)
        return total

    return count(arity, weight)


def coefficient_vector(f: TreePoly, basis: Sequence[TreeMonomial]) -> Tuple[Fraction, ...]:
    """
    주어진 순서 기저에서 f의 좌표.

    Raises:
        BasisError: 기저에 없는 단항식이 있을 때
    """
    index = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for mono, coeff in f.items():
        if mono not in index:
            raise BasisError(f"기저에 없는 단항식입니다: {mono}")
        vec[index[mono]] = coeff
    return tuple(vec)


def poly_from_vector(
    vector: Sequence[Coefficient], basis: Sequence[TreeMonomial]
) -> TreePoly:
    """coefficient_vector의 역"""
    return TreePoly({m: c for m, c in zip(basis, vector) if c})


def make_signature(generators: Iterable[GeneratorSymbol]) -> Signature:
    return Signature(generators)


def leaf_map_poly(f: TreePoly, mapping: Mapping[int, int], signature: Mapping) -> TreePoly:
    """잎 레이블을 임의 전단사로 바꾼 뒤 정규화합니다."""
    pairs: List[Tuple[TreeMonomial, Fraction]] = []
    for mono, coeff in f.items():
        for t, c in _canonical_terms(map_leaves(mono.root, lambda x: mapping[x]), signature):
            pairs.append((TreeMonomial(t), coeff * c))
    return TreePoly.accumulate(pairs)


def is_canonical_poly(f: TreePoly, signature: Mapping) -> bool:
    """정규화가 f를 그대로 돌려주는지 (멱등성 검사용)"""
    total = TreePoly()
    for mono, coeff in f.items():
        total = total + coeff * canonicalize(mono.root, signature)
    return total == f


__all__ = [
    "canonicalize",
    "act",
    "identity_poly",
    "graft",
    "graft_poly",
    "compose_at",
    "enumerate_basis",
    "count_basis",
    "coefficient_vector",
    "poly_from_vector",
    "make_signature",
    "leaf_map_poly",
    "is_canonical_poly",
]
