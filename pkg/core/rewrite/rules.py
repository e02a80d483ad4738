"""
Rewriting Rules

이차 관계를 경로 사전식 순서로 방향을 정한 재작성 규칙과
가중치 3 임계 단항식의 합류성 검사를 제공합니다.
"""

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from config import get_config
from core.compat.constructions import leveled_matching
from core.exceptions import UnsupportedPresentationError
from core.linalg import row_space_basis
from core.presentations.closure import closed_relations
from core.presentations.model import Presentation
from core.rewrite.order import (
    PathLexOrder,
    default_order,
    lmt_order,
    order_from_names,
    order_variants,
)
from core.trees.monomial import Node, Tree, TreeMonomial, map_leaves, min_leaf
from core.trees.operations import canonicalize, coefficient_vector, enumerate_basis
from core.trees.poly import TreePoly
from core.trees.symbols import Signature
from utils.logging import get_logger
from utils.progress import progress

logger = get_logger(__name__)

# (뿌리에서 위쪽 꼭짓점까지의 자식 위치 경로, 아래쪽 꼭짓점의 자식 위치)
Occurrence = Tuple[Tuple[int, ...], int]


@dataclass(frozen=True)
class RewriteRule:
    """
    재작성 규칙 lead → rest.

    Attributes:
        lead: 순서상 가장 큰 단항식 (계수 1)
        rest: lead보다 작은 단항식들의 다항식
    """

    lead: TreeMonomial
    rest: TreePoly

    def relation(self) -> TreePoly:
        return TreePoly.monomial(self.lead) - self.rest

    def render(self) -> str:
        rest = self.rest.render() if not self.rest.is_zero() else "0"
        return f"{self.lead.render()} -> {rest}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RewriteSystem:
    """순서와 함께 방향이 정해진 규칙 집합"""

    rules: Tuple[RewriteRule, ...]
    order: PathLexOrder
    signature: Signature
    name: str = ""

    @cached_property
    def by_lead(self) -> Dict[TreeMonomial, RewriteRule]:
        return {rule.lead: rule for rule in self.rules}

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __getitem__(self, index: int) -> RewriteRule:
        return self.rules[index]

    def without(self, index: int) -> "RewriteSystem":
        """규칙 하나를 뺀 체계"""
        rules = self.rules[:index] + self.rules[index + 1:]
        return RewriteSystem(rules, self.order, self.signature, self.name)


def check_rewrite_scope(p: Presentation) -> None:
    """
    Raises:
        UnsupportedPresentationError: 2항 이차 표현이 아닐 때
    """
    if not p.is_binary():
        raise UnsupportedPresentationError(
            f"{p.name}: 재작성은 2항 생성원만 지원합니다 (항수 {sorted(p.generator_arities())})"
        )
    if not p.is_quadratic():
        raise UnsupportedPresentationError(f"{p.name}: 이차가 아닌 관계가 있습니다")


def orient(p: Presentation, order: Optional[PathLexOrder] = None) -> RewriteSystem:
    """
    관계 공간의 기약 행 사다리꼴 기저(열은 큰 단항식부터)로 규칙을 만듭니다.

    서로 다른 규칙의 lead는 서로 다르며, 어떤 규칙의 rest에도 다른 lead가 나타나지 않습니다.

    Raises:
        UnsupportedPresentationError: 2항 이차 표현이 아닐 때
    """
    check_rewrite_scope(p)
    order = order or default_order(p)
    rules: List[RewriteRule] = []
    for arity, weight in p.components():
        basis = order.sorted(enumerate_basis(p.generators, arity, weight), reverse=True)
        vectors = [coefficient_vector(r, basis) for r in closed_relations(p, arity, weight)]
        for row in row_space_basis(vectors, len(basis)):
            pivot = next(i for i, c in enumerate(row) if c)
            rest = TreePoly({basis[j]: -row[j] for j in range(pivot + 1, len(basis)) if row[j]})
            rules.append(RewriteRule(basis[pivot], rest))
    rules.sort(key=lambda rule: order.key(rule.lead))
    logger.info(f"{p.name}: 규칙 {len(rules)}개 (순서 {order})")
    return RewriteSystem(tuple(rules), order, p.signature, p.name)


def _subtree(tree: Tree, path: Sequence[int]) -> Tree:
    for i in path:
        tree = tree.children[i]
    return tree


def _replace(tree: Tree, path: Sequence[int], new: Tree) -> Tree:
    if not path:
        return new
    head, rest = path[0], path[1:]
    children = list(tree.children)
    children[head] = _replace(children[head], rest, new)
    return Node(tree.symbol, tuple(children))


def _pattern(upper: Node, i: int) -> Tuple[TreeMonomial, Dict[int, Tree]]:
    """
    위 꼭짓점과 i번째 자식 꼭짓점이 이루는 2꼭짓점 패턴과 매달린 부분트리.

    매달린 부분트리는 최소 잎 순서로 1..k 번호를 받습니다.
    """
    lower = upper.children[i]
    hanging: List[Tree] = []
    for j, child in enumerate(upper.children):
        if j == i:
            hanging.extend(lower.children)
        else:
            hanging.append(child)
    rank = {m: k for k, m in enumerate(sorted(min_leaf(h) for h in hanging), start=1)}
    inner = Node(lower.symbol, tuple(min_leaf(c) for c in lower.children))
    raw = Node(
        upper.symbol,
        tuple(inner if j == i else min_leaf(c) for j, c in enumerate(upper.children)),
    )
    pattern = TreeMonomial(map_leaves(raw, lambda leaf: rank[leaf]))
    return pattern, {rank[min_leaf(h)]: h for h in hanging}


def occurrences(mono: TreeMonomial, system: RewriteSystem) -> List[Tuple[Occurrence, RewriteRule]]:
    """mono 안의 lead 출현 (전위 순서)"""
    found: List[Tuple[Occurrence, RewriteRule]] = []

    def walk(tree: Tree, path: Tuple[int, ...]) -> None:
        if isinstance(tree, int):
            return
        for i, child in enumerate(tree.children):
            if isinstance(child, Node):
                pattern, _ = _pattern(tree, i)
                rule = system.by_lead.get(pattern)
                if rule is not None:
                    found.append(((path, i), rule))
        for i, child in enumerate(tree.children):
            walk(child, path + (i,))

    walk(mono.root, ())
    return found


def apply_rule(
    mono: TreeMonomial, occurrence: Occurrence, rule: RewriteRule, signature: Mapping
) -> TreePoly:
    """출현 위치의 lead를 rest로 바꾼 다항식"""
    path, i = occurrence
    upper = _subtree(mono.root, path)
    _, hanging = _pattern(upper, i)
    total = TreePoly()
    for m, c in rule.rest.items():
        replaced = map_leaves(m.root, lambda leaf: hanging[leaf])
        total = total + canonicalize(_replace(mono.root, path, replaced), signature) * c
    return total


def rewrite_step(
    f: TreePoly, system: RewriteSystem, rng: Optional[random.Random] = None
) -> Optional[TreePoly]:
    """
    한 단계 재작성. 줄일 단항식이 없으면 None.

    rng가 없으면 순서상 가장 큰 줄일 수 있는 단항식의 첫 출현을, 있으면 임의의 것을 고릅니다.
    """
    reducible = [(m, occurrences(m, system)) for m in f]
    reducible = [(m, occ) for m, occ in reducible if occ]
    if not reducible:
        return None
    if rng is None:
        mono, occ = max(reducible, key=lambda item: system.order.key(item[0]))
        occurrence, rule = occ[0]
    else:
        mono, occ = rng.choice(sorted(reducible, key=lambda item: system.order.key(item[0])))
        occurrence, rule = rng.choice(occ)
    coeff = f[mono]
    rewritten = apply_rule(mono, occurrence, rule, system.signature)
    return f - TreePoly.monomial(mono, coeff) + rewritten * coeff


def reduction_chain(
    f: TreePoly, system: RewriteSystem, rng: Optional[random.Random] = None
) -> List[TreePoly]:
    """f에서 정규형까지의 재작성 사슬 (f 포함)"""
    chain = [f]
    while True:
        step = rewrite_step(chain[-1], system, rng)
        if step is None:
            return chain
        chain.append(step)


def normal_form(
    f: TreePoly, system: RewriteSystem, rng: Optional[random.Random] = None
) -> TreePoly:
    """
    어떤 lead도 부분트리로 포함하지 않는 정규형.

    각 단계에서 바뀐 단항식보다 작은 단항식만 생기므로 항상 끝납니다.
    """
    return reduction_chain(f, system, rng)[-1]


def normal_monomials(system: RewriteSystem, arity: int) -> List[TreeMonomial]:
    """항수 arity에서 lead를 포함하지 않는 단항식"""
    basis = enumerate_basis(system.signature.generators(), arity, arity - 1)
    return [m for m in basis if not occurrences(m, system)]


def critical_monomials(system: RewriteSystem) -> List[TreeMonomial]:
    """
    두 lead 출현이 가운데 꼭짓점을 공유하는 가중치 3 단항식 (순서대로).
    """
    if not system.rules:
        return []
    basis = enumerate_basis(system.signature.generators(), 4, 3)
    critical = [m for m in basis if len(occurrences(m, system)) >= 2]
    return system.order.sorted(critical)


@dataclass
class CriticalBranch:
    occurrence: Occurrence
    rule: RewriteRule
    chain: List[TreePoly]

    @property
    def normal_form(self) -> TreePoly:
        return self.chain[-1]

    def to_dict(self) -> Dict:
        return {
            "occurrence": {"path": list(self.occurrence[0]), "child": self.occurrence[1]},
            "rule": self.rule.render(),
            "chain": [f.render() or "0" for f in self.chain],
        }


@dataclass
class CriticalEntry:
    monomial: TreeMonomial
    branches: List[CriticalBranch]

    @property
    def normal_forms(self) -> List[TreePoly]:
        """가지마다 도달한 정규형 (중복 제거, 첫 등장 순)"""
        return list(dict.fromkeys(b.normal_form for b in self.branches))

    @property
    def joinable(self) -> bool:
        return len(self.normal_forms) == 1

    def to_dict(self) -> Dict:
        return {
            "monomial": self.monomial.render(),
            "joinable": self.joinable,
            "normal_forms": [f.render() for f in self.normal_forms],
            "branches": [b.to_dict() for b in self.branches],
        }


@dataclass
class ConfluenceCertificate:
    """임계 단항식마다 모든 한 단계 재작성과 그 정규형까지의 사슬"""

    entries: List[CriticalEntry] = field(default_factory=list)

    @property
    def failures(self) -> List[CriticalEntry]:
        return [e for e in self.entries if not e.joinable]

    @property
    def confluent(self) -> bool:
        return not self.failures

    def to_dict(self, include_all: bool = False) -> Dict:
        shown = self.entries if include_all else self.failures
        return {
            "critical_monomials": len(self.entries),
            "failures": len(self.failures),
            "entries": [e.to_dict() for e in shown],
        }


def is_confluent(system: RewriteSystem) -> Tuple[bool, ConfluenceCertificate]:
    """
    모든 임계 단항식의 한 단계 재작성들이 같은 정규형에 도달하는지 검사합니다.

    Returns:
        (합류 여부, 인증서)
    """
    certificate = ConfluenceCertificate()
    critical = critical_monomials(system)
    for mono in progress(critical, desc=f"{system.name} 임계 단항식", total=len(critical)):
        branches = []
        for occurrence, rule in occurrences(mono, system):
            step = apply_rule(mono, occurrence, rule, system.signature)
            chain = [TreePoly.monomial(mono)] + reduction_chain(step, system)
            branches.append(CriticalBranch(occurrence, rule, chain))
        certificate.entries.append(CriticalEntry(mono, branches))
    failures = certificate.failures
    if failures:
        logger.info(f"{system.name}: 합류하지 않는 임계 단항식 {len(failures)}개 / {len(critical)}")
    else:
        logger.info(f"{system.name}: 임계 단항식 {len(critical)}개 모두 합류")
    return certificate.confluent, certificate


def candidate_orders(p: Presentation) -> Iterator[PathLexOrder]:
    """변형 스위치 조합마다 생성원 이름 순열 (기본 순서가 먼저)"""
    names = list(dict.fromkeys(g.name for g in p.generators))
    for switches in order_variants():
        for candidate in permutations(names):
            yield order_from_names(p, candidate, **switches)


def search_confluent_order(p: Presentation) -> Optional[PathLexOrder]:
    """
    경로 사전식 순서의 변형과 생성원 이름 순서를 바꿔 가며 규칙이 합류하는 첫 순서를 찾습니다.

    Returns:
        찾으면 그 순서 (render에 변형 스위치가 드러남), 없으면 None
    """
    limit = get_config().engine.max_sigma_search
    for count, order in enumerate(candidate_orders(p)):
        if count >= limit:
            logger.warning(f"{p.name}: 순서 후보가 한도 {limit}를 넘었습니다")
            break
        confluent, _ = is_confluent(orient(p, order))
        if confluent:
            logger.info(f"{p.name}: 합류 순서 {order}")
            return order
    return None


def lmt_system(
    p: Presentation, palette: Sequence[str], base: Optional[PathLexOrder] = None
) -> RewriteSystem:
    """LMT P 의 규칙 (기저 순서를 생성원 우선으로 색 복제 알파벳에 올림)"""
    base = base or default_order(p)
    lmt = leveled_matching(p, palette)
    return orient(lmt, lmt_order(base, palette))


__all__ = [
    "Occurrence",
    "RewriteRule",
    "RewriteSystem",
    "check_rewrite_scope",
    "orient",
    "occurrences",
    "apply_rule",
    "rewrite_step",
    "reduction_chain",
    "normal_form",
    "normal_monomials",
    "critical_monomials",
    "CriticalBranch",
    "CriticalEntry",
    "ConfluenceCertificate",
    "is_confluent",
    "candidate_orders",
    "search_confluent_order",
    "lmt_system",
]
