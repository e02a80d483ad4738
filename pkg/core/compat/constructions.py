"""
Compatible Constructions

선형 호환(Lin), 매칭(MT), 레벨 매칭(LMT), 완전 호환(Tot) 표현을 구성합니다.

색 복제 생성원은 원래 기호에 색 층을 덧붙여 만들므로 이미 색이 있는 표현에
다시 적용하면 색 이름이 ``a.b`` 형식의 곱 색이 됩니다.
"""

from dataclasses import replace
from typing import List, Optional, Sequence, Set, Tuple

from core.compat.sigma import SigmaChoice, validate_sigma
from core.exceptions import ArityError, InadmissibleSigmaError
from core.polarization.compositions import WeakComposition, weak_compositions
from core.polarization.lifts import Lift, lifts_of_type
from core.polarization.trees import quasipolarize
from core.presentations.model import Presentation
from core.trees.monomial import inorder, preorder
from core.trees.operations import act
from core.trees.permutations import Perm, all_permutations
from core.trees.poly import TreePoly
from core.trees.symbols import Signature, colored_generators
from utils.logging import get_logger
from utils.validators import validate_colors

logger = get_logger(__name__)


def product_colors(p: Presentation, palette: Sequence[str]) -> Tuple[str, ...]:
    """p의 기존 색 층과 Ω를 곱한 색 이름 (첫 성분 우선 사전순)"""
    if not p.colors:
        return tuple(palette)
    return tuple(f"{a}.{b}" for a in p.colors for b in palette)


def _colored_skeleton(p: Presentation, palette: Sequence[str]):
    palette = validate_colors(palette, layered=True)
    generators = tuple(colored_generators(p.generators, palette))
    return palette, generators, product_colors(p, palette)


def foliation_split(
    r: TreePoly, palette: Sequence[str], c: WeakComposition, sigmas: Sequence[Perm]
) -> List[TreePoly]:
    """
    유형 c 준편극을 β개의 조각으로 나눕니다.

    지지 집합의 첫 단항식(저장 순서)은 σ에서 제외되고, i번째 단항식의
    j번째 조각에는 σ_i(j)번째 리프트가 들어갑니다. 조각의 합은 준편극과 같습니다.

    Args:
        r: 관계
        palette: 색 집합 Ω
        c: 유형
        sigmas: (σ₁, …, σ_s), s = |Supp r| - 1

    Raises:
        ArityError: 순열 개수나 차수가 맞지 않을 때
    """
    terms = r.terms()
    if len(sigmas) != len(terms) - 1:
        raise ArityError(f"순열 {len(sigmas)}개가 필요 개수 {len(terms) - 1}과 다릅니다")
    beta = c.multinomial()
    for sigma in sigmas:
        if len(sigma) != beta:
            raise ArityError(f"순열 차수 {len(sigma)}가 β = {beta}와 다릅니다")
    lifted = [(coeff, lifts_of_type(mono, palette, c)) for mono, coeff in terms]
    parts: List[TreePoly] = []
    for j in range(beta):
        pairs = []
        for i, (coeff, lifts) in enumerate(lifted):
            k = j if i == 0 else sigmas[i - 1][j] - 1
            pairs.append((lifts[k].colored, coeff))
        parts.append(TreePoly.accumulate(pairs))
    return parts


def _split_family(
    p: Presentation, palette: Sequence[str], sigma: SigmaChoice
) -> List[Tuple[str, WeakComposition, List[TreePoly]]]:
    family = []
    for name, rel in p.named_relations():
        s = len(rel) - 1
        for c in weak_compositions(len(palette), rel.weight):
            parts = foliation_split(rel, palette, c, sigma.perms(name, c, s))
            family.append((name, c, parts))
    return family


def linear_compat(p: Presentation, palette: Sequence[str]) -> Presentation:
    """
    Ω-선형 호환 표현 Lin_Ω(P).

    모든 관계의 모든 유형 준편극을 관계로 갖습니다.
    """
    palette, generators, colors = _colored_skeleton(p, palette)
    relations, names = [], []
    for name, rel in p.named_relations():
        for c in weak_compositions(len(palette), rel.weight):
            relations.append(quasipolarize(rel, palette, c))
            names.append(f"{name}_c{c.label()}")
    logger.info(f"Lin_{p.name}: 색 {len(palette)}개, 관계 {len(relations)}개")
    return Presentation(f"Lin_{p.name}", generators, relations, names, colors)


def matching_admissible(p: Presentation, palette: Sequence[str], sigma: SigmaChoice) -> bool:
    """
    σ가 S_n 작용과 어울리는지 검사합니다.

    대표 관계 r_i, r_k와 ρ ∈ S_n에 대해 r_i·ρ = λ·r_k 이면 모든 유형 c에서
    {조각·ρ} = {λ·조각}이 집합으로 같아야 합니다.

    Raises:
        MalformedSigmaError: σ의 모양이 잘못되었을 때
    """
    return _admissibility_witness(p, palette, sigma) is None


def _admissibility_witness(
    p: Presentation, palette: Sequence[str], sigma: SigmaChoice
) -> Optional[Tuple[str, str, Perm, WeakComposition]]:
    palette = validate_colors(palette, layered=True)
    validate_sigma(p, palette, sigma)
    colored = Signature(colored_generators(p.generators, palette))
    family = _split_family(p, palette, sigma)
    parts_by_key = {(name, c): parts for name, c, parts in family}
    types = {name: [c for n, c, _ in family if n == name] for name in p.relation_names}
    relations = p.named_relations()
    for name_i, r_i in relations:
        for rho in all_permutations(r_i.arity):
            moved = act(r_i, rho, p.signature)
            for name_k, r_k in relations:
                scale = _proportionality(moved, r_k)
                if scale is None:
                    continue
                for c in types[name_i]:
                    lhs = {act(part, rho, colored) for part in parts_by_key[(name_i, c)]}
                    rhs = {scale * part for part in parts_by_key[(name_k, c)]}
                    if lhs != rhs:
                        logger.debug(f"비허용 σ: {name_i}·{rho} = {scale}·{name_k}, 유형 {c}")
                        return name_i, name_k, rho, c
    return None


def _proportionality(f: TreePoly, g: TreePoly):
    """f = λ·g 이면 λ, 아니면 None"""
    if f.is_zero() or g.is_zero() or set(f) != set(g):
        return None
    lead = g.support()[0]
    scale = f[lead] / g[lead]
    return scale if f == scale * g else None


def matching_compat(
    p: Presentation, palette: Sequence[str], sigma: SigmaChoice, check: bool = True
) -> Presentation:
    """
    σ로 정한 매칭 호환 표현 MT^σ_Ω(P).

    Raises:
        InadmissibleSigmaError: check가 True이고 σ가 허용되지 않을 때
    """
    palette, generators, colors = _colored_skeleton(p, palette)
    if check:
        witness = _admissibility_witness(p, palette, sigma)
        if witness is not None:
            name_i, name_k, rho, c = witness
            raise InadmissibleSigmaError(
                f"σ = {sigma}는 허용되지 않습니다: {name_i}·{rho}와 {name_k}의 유형 {c} 조각이 다릅니다"
            )
    relations, names = [], []
    for name, c, parts in _split_family(p, palette, sigma):
        for j, part in enumerate(parts):
            relations.append(part)
            names.append(f"{name}_c{c.label()}_p{j}")
    label = "LMT" if sigma.is_identity() else "MT"
    logger.info(f"{label}_{p.name}: σ = {sigma}, 관계 {len(relations)}개")
    return Presentation(f"{label}_{p.name}", generators, relations, names, colors)


VERTEX_ORDERS = ("preorder", "inorder")


def _vertex_word(lift: Lift, vertex_order: str) -> Tuple[str, ...]:
    """리프트의 색 단어를 vertex_order 순서로 다시 읽습니다."""
    if vertex_order == "preorder":
        return lift.colors
    root = lift.tree.root
    position = {id(v): i for i, v in enumerate(preorder(root))}
    return tuple(lift.colors[position[id(v)]] for v in inorder(root))


def leveled_sigma(
    p: Presentation, palette: Sequence[str], vertex_order: str = "preorder"
) -> SigmaChoice:
    """
    vertex_order로 읽은 색 단어가 같은 리프트끼리 짝짓는 σ.

    리프트는 전위 색 단어 순으로 나열되므로 preorder에서는 항상 항등입니다.

    Raises:
        ValueError: 알 수 없는 꼭짓점 순서일 때
    """
    if vertex_order not in VERTEX_ORDERS:
        raise ValueError(
            f"알 수 없는 꼭짓점 순서입니다: {vertex_order} (가능한 값: {', '.join(VERTEX_ORDERS)})"
        )
    palette = validate_colors(palette, layered=True)
    mapping = {}
    for name, rel in p.named_relations():
        support = rel.support()
        for c in weak_compositions(len(palette), rel.weight):
            words = [
                [_vertex_word(lift, vertex_order) for lift in lifts_of_type(mono, palette, c)]
                for mono in support
            ]
            perms = []
            for other in words[1:]:
                index = {word: k for k, word in enumerate(other, start=1)}
                perms.append(tuple(index[word] for word in words[0]))
            mapping[(name, c.values)] = perms
    return SigmaChoice.from_mapping(mapping).normalized()


def leveled_matching(
    p: Presentation, palette: Sequence[str], vertex_order: str = "preorder"
) -> Presentation:
    """
    레벨 매칭 표현 LMT_Ω(P).

    같은 조각의 단항식들은 vertex_order로 읽은 색 단어가 모두 같습니다.
    리프트를 전위 색 단어 순으로 나열하므로 preorder에서는 항등 σ가 레벨 매칭입니다.

    Raises:
        ValueError: 알 수 없는 꼭짓점 순서일 때
    """
    sigma = leveled_sigma(p, palette, vertex_order)
    lmt = matching_compat(p, palette, sigma, check=False)
    return replace(lmt, name=f"LMT_{p.name}")


def tc_differences(p: Presentation, palette: Sequence[str]) -> List[Tuple[str, TreePoly]]:
    """지지 트리마다 같은 유형 리프트 사이의 차이 (t,δ₀) - (t,δ_k)"""
    palette = validate_colors(palette, layered=True)
    out: List[Tuple[str, TreePoly]] = []
    seen: Set[TreePoly] = set()
    for name, rel in p.named_relations():
        for c in weak_compositions(len(palette), rel.weight):
            for i, mono in enumerate(rel.support()):
                lifts = lifts_of_type(mono, palette, c)
                for k, other in enumerate(lifts[1:], start=1):
                    diff = TreePoly({lifts[0].colored: 1, other.colored: -1})
                    if diff in seen:
                        continue
                    seen.add(diff)
                    out.append((f"{name}_c{c.label()}_t{i}_{k}", diff))
    return out


def total_compat(
    p: Presentation, palette: Sequence[str], sigma: Optional[SigmaChoice] = None
) -> Presentation:
    """
    완전 호환 표현 Tot_Ω(P) = 매칭 관계 ∪ 리프트 차이.

    관계 공간은 매칭 선택과 무관합니다. sigma가 없으면 레벨 매칭을 씁니다.
    """
    matching = matching_compat(p, palette, sigma or SigmaChoice(), check=sigma is not None)
    extra = tc_differences(p, palette)
    relations = list(matching.relations) + [d for _, d in extra]
    names = list(matching.relation_names) + [n for n, _ in extra]
    logger.info(f"Tot_{p.name}: 매칭 관계 {len(matching.relations)}개 + 차이 {len(extra)}개")
    return Presentation(f"Tot_{p.name}", matching.generators, relations, names, matching.colors)


def swap_color_layers(color: str) -> str:
    """'x.y' → 'y.x' (두 층의 곱 색)"""
    first, sep, second = color.partition(".")
    return f"{second}.{first}" if sep else color


def palette_square(palette: Sequence[str]) -> List[str]:
    """Ω² = {a.b} (첫 성분 우선 사전순)"""
    return [f"{a}.{b}" for a in palette for b in palette]


__all__ = [
    "product_colors",
    "foliation_split",
    "linear_compat",
    "matching_admissible",
    "matching_compat",
    "VERTEX_ORDERS",
    "leveled_sigma",
    "leveled_matching",
    "tc_differences",
    "total_compat",
    "swap_color_layers",
    "palette_square",
]
