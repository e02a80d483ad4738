"""
Compatibility Verifiers

호환 구성 사이의 구조적 항등식을 관계 공간 비교로 확인합니다.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.compat.constructions import (
    leveled_matching,
    linear_compat,
    matching_admissible,
    matching_compat,
    palette_square,
    swap_color_layers,
    total_compat,
)
from core.compat.sigma import SigmaChoice, count_matching, enumerate_sigma_choices
from core.polarization.compositions import weak_compositions
from core.polarization.trees import evaluate_at
from core.presentations.closure import closed_space, span_contained, span_witness
from core.presentations.model import Presentation
from core.trees.symbols import Symbol
from core.verify.report import INFO, VerificationReport
from utils.logging import get_logger
from utils.progress import progress

logger = get_logger(__name__)


def _compare(label: str, p: Presentation, q: Presentation, checks: Dict, witnesses: Dict):
    witness = span_witness(p, q)
    checks[label] = witness is None
    if witness is not None:
        logger.warning(f"{label}: 관계 공간이 다릅니다 {witness['component']}")
        witnesses[label] = witness


def lambda_points(palette: Sequence[str], weight: int) -> List[Tuple[Fraction, ...]]:
    """
    λ_i = t^{(m+1)^i}, t = 2..(유형 수 + 1).

    서로 다른 유형 c의 λ^c가 서로 다른 t의 거듭제곱이 되므로 평가 행렬이 가역입니다.
    """
    count = sum(1 for _ in weak_compositions(len(palette), weight))
    return [
        tuple(Fraction(t) ** ((weight + 1) ** i) for i in range(len(palette)))
        for t in range(2, count + 2)
    ]


def verify_lin_encodes(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """
    Lin_Ω(P) 관계 공간 = 모든 λ에서의 관계 Σ_c λ^c r_c 가 생성하는 공간.

    Ω-선형 호환 대수가 생성원의 모든 선형결합에서 P-관계를 만족하는 대수라는 사실의
    유한 검사입니다.
    """
    lin = linear_compat(p, palette)
    evaluated, names = [], []
    for name, rel in p.named_relations():
        for k, point in enumerate(lambda_points(palette, rel.weight)):
            evaluated.append(evaluate_at(rel, palette, point))
            names.append(f"{name}_t{k}")
    sampled = lin.with_relations(evaluated, names, name=f"Eval_{p.name}")
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    _compare("lin=evaluations", lin, sampled, checks, witnesses)
    return VerificationReport.from_checks(
        "lin-encodes", checks, witnesses or None, operad=p.name, colors=list(palette)
    )


def verify_iterate_lin(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """Lin_Ω(Lin_Ω P) = Lin_{Ω²} P (곱 색 a.b로 동일시)"""
    twice = linear_compat(linear_compat(p, palette), palette)
    square = linear_compat(p, palette_square(palette))
    checks: Dict[str, bool] = {"colors": twice.colors == square.colors}
    witnesses: Dict[str, Dict] = {}
    _compare("lin∘lin=lin(Ω²)", twice, square, checks, witnesses)
    return VerificationReport.from_checks(
        "iterate-lin", checks, witnesses or None, operad=p.name, colors=list(palette)
    )


def _swap_layers(p: Presentation) -> Presentation:
    return p.renamed(
        lambda s: Symbol(s.name, swap_color_layers(s.color)),
        name=f"{p.name}_swapped",
        colors=tuple(swap_color_layers(c) for c in p.colors),
    )


def verify_lmt_lin_commute(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """
    LMT(Lin P) = Lin(LMT P), LMT(LMT P) = LMT_{Ω²} P.

    첫 식은 두 색 층의 순서가 반대이므로 한쪽의 층을 바꿔 비교합니다.
    """
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    lmt_lin = leveled_matching(linear_compat(p, palette), palette)
    lin_lmt = _swap_layers(linear_compat(leveled_matching(p, palette), palette))
    _compare("lmt∘lin=lin∘lmt", lmt_lin, lin_lmt, checks, witnesses)
    lmt_lmt = leveled_matching(leveled_matching(p, palette), palette)
    square = leveled_matching(p, palette_square(palette))
    _compare("lmt∘lmt=lmt(Ω²)", lmt_lmt, square, checks, witnesses)
    return VerificationReport.from_checks(
        "lmt-lin-commute", checks, witnesses or None, operad=p.name, colors=list(palette)
    )


def verify_epi_chain(
    p: Presentation, palette: Sequence[str], sigma: Optional[SigmaChoice] = None
) -> VerificationReport:
    """
    성분별 관계 공간 포함 Lin ⊆ MT^σ ⊆ Tot.

    관계 공간의 포함은 Tot → MT → Lin 방향의 전사 사상에 해당합니다.
    """
    sigma = sigma or SigmaChoice()
    lin = linear_compat(p, palette)
    mt = matching_compat(p, palette, sigma)
    tot = total_compat(p, palette, sigma if not sigma.is_identity() else None)
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    for label, small, big in (("lin⊆mt", lin, mt), ("mt⊆tot", mt, tot)):
        witness = span_contained(small, big)
        checks[label] = witness is None
        if witness is not None:
            witnesses[label] = witness
    dims = {
        q.name: {f"{n},{w}": closed_space(q, n, w).dim for n, w in q.components()}
        for q in (lin, mt, tot)
    }
    return VerificationReport.from_checks(
        "epi-chain", checks, witnesses or None, operad=p.name, sigma=str(sigma), dimensions=dims
    )


def span_key(p: Presentation) -> Tuple:
    """관계 공간을 비교·해시할 수 있는 키 (성분별 완전 기약 기저)"""
    return tuple(
        ((n, w), closed_space(p, n, w).reduced_basis()) for n, w in sorted(p.components())
    )


def matching_families(
    p: Presentation, palette: Sequence[str], admissible_only: bool = True
) -> List[Tuple[Tuple, List[SigmaChoice]]]:
    """
    σ 공간 전체를 나열하고 관계 공간이 같은 선택끼리 묶습니다.

    Returns:
        (공간 키, σ 목록) 목록 (처음 나타난 순서)
    """
    groups: Dict[Tuple, List[SigmaChoice]] = {}
    total = count_matching(p, palette)
    for sigma in progress(enumerate_sigma_choices(p, palette), desc="σ 열거", total=total):
        if admissible_only and not matching_admissible(p, palette, sigma):
            continue
        mt = matching_compat(p, palette, sigma, check=False)
        groups.setdefault(span_key(mt), []).append(sigma)
    logger.info(f"{p.name}: σ {total}개 중 관계 공간 {len(groups)}종")
    return list(groups.items())


def verify_total_independent(
    p: Presentation, palette: Sequence[str], sigmas: Sequence[SigmaChoice]
) -> VerificationReport:
    """허용되는 여러 σ에서 Tot의 관계 공간이 같은지"""
    base = total_compat(p, palette)
    checks: Dict[str, bool] = {}
    witnesses: Dict[str, Dict] = {}
    for sigma in sigmas:
        _compare(f"tot[{sigma}]", base, total_compat(p, palette, sigma), checks, witnesses)
    return VerificationReport.from_checks(
        "tot-independent", checks, witnesses or None, operad=p.name
    )


def matching_count_report(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    return VerificationReport(
        "count-matching",
        INFO,
        {"operad": p.name, "colors": list(palette), "count": count_matching(p, palette)},
    )


__all__ = [
    "lambda_points",
    "verify_lin_encodes",
    "verify_iterate_lin",
    "verify_lmt_lin_commute",
    "verify_epi_chain",
    "span_key",
    "matching_families",
    "verify_total_independent",
    "matching_count_report",
]
