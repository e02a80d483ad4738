"""
Rewriting Verifiers

색을 입힌 규칙의 합류성과 TotCom 차원 보고를 확인합니다.
"""

import random
from collections import Counter
from typing import Dict, Optional, Sequence

from core.compat.constructions import leveled_matching, total_compat
from core.presentations.catalog import builtin
from core.presentations.model import Presentation
from core.rewrite.dimensions import component_dimension, dimension_sequence, plethysm_dimension
from core.rewrite.rules import (
    RewriteSystem,
    critical_monomials,
    is_confluent,
    lmt_system,
    normal_form,
    normal_monomials,
    orient,
    search_confluent_order,
)
from core.trees.monomial import TreeMonomial, preorder, tree_leaves
from core.trees.operations import enumerate_basis
from core.trees.poly import TreePoly
from core.verify.report import FAIL, INFO, VerificationReport
from utils.logging import get_logger

logger = get_logger(__name__)


def bottom_leaves(mono: TreeMonomial) -> str:
    """전위 순서 마지막 꼭짓점의 잎 (예: '1,2')"""
    last = list(preorder(mono.root))[-1]
    return ",".join(str(leaf) for leaf in tree_leaves(last))


def critical_profile(system: RewriteSystem) -> Dict[str, int]:
    return dict(sorted(Counter(bottom_leaves(m) for m in critical_monomials(system)).items()))


def verify_lmt_confluence(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """
    P의 규칙이 어떤 경로 사전식 순서에서 합류하면 LMT P 의 규칙도 생성원 우선 순서에서 합류하는지.

    아래 두 꼭짓점의 색이 다른 균형 트리 m_a(m_b(..), m_c(..))가 있어 일반적으로 성립하지 않습니다.
    실패하면 합류하지 않는 첫 임계 단항식과 그 정규형들을 witness에 담고, 항수 4의
    정규 단항식 수와 dim LMT P(4)를 함께 보고합니다.
    """
    base = search_confluent_order(p)
    if base is None:
        logger.warning(f"{p.name}: 합류하는 기저 순서가 없어 LMT 검사를 건너뜁니다")
        return VerificationReport(
            "lmt-confluence", INFO, {"operad": p.name, "base_confluent": False}
        )
    system = lmt_system(p, palette, base)
    confluent, certificate = is_confluent(system)
    details = {
        "operad": p.name,
        "colors": list(palette),
        "base_order": base.render(),
        "order": system.order.render(),
        "rules": len(system),
        "critical_monomials": len(certificate.entries),
        "bottom_vertex_leaves": critical_profile(system),
    }
    witness = None
    if not confluent:
        first = certificate.failures[0]
        lmt = leveled_matching(p, palette)
        details["normal_monomials_4"] = len(normal_monomials(system, 4))
        details["dimension_4"] = component_dimension(lmt, 4)
        witness = {
            "monomial": first.monomial.render(),
            "normal_forms": [f.render() for f in first.normal_forms],
            "certificate": certificate.to_dict(),
        }
        logger.warning(
            f"{system.name}: {first.monomial}에서 정규형 {len(first.normal_forms)}개로 갈라집니다"
        )
    return VerificationReport.from_checks(
        "lmt-confluence", {"base_confluent": True, "lmt_confluent": confluent}, witness, **details
    )


def verify_totcom_dim4(palette: Optional[Sequence[str]] = None) -> VerificationReport:
    """
    dim TotCom(4) 와 Com∘Com 의 합성곱 차원을 함께 보고합니다 (판정하지 않음).
    """
    palette = list(palette or ["c0", "c1"])
    tot = total_compat(builtin("Com"), palette)
    dim = component_dimension(tot, 4)
    com = dimension_sequence(builtin("Com"), 4)
    pleth = plethysm_dimension(com, com, 4)
    return VerificationReport(
        "totcom-dim4",
        INFO,
        {
            "operad": tot.name,
            "colors": palette,
            "dimension": dim,
            "plethysm_com_com": pleth,
        },
    )


def verify_unique_normal_forms(
    system: RewriteSystem, samples: int = 50, seed: int = 0
) -> VerificationReport:
    """
    임의의 가중치 3 원소가 서로 다른 무작위 재작성 전략에서 같은 정규형에 닿는지.
    """
    rng = random.Random(seed)
    basis = enumerate_basis(system.signature.generators(), 4, 3)
    mismatches = []
    for _ in range(samples):
        support = rng.sample(basis, min(len(basis), 4))
        f = TreePoly({m: rng.randint(-3, 3) or 1 for m in support})
        first = normal_form(f, system, random.Random(rng.random()))
        second = normal_form(f, system, random.Random(rng.random()))
        if first != second:
            mismatches.append({"element": f.render(), "forms": [first.render(), second.render()]})
    report = VerificationReport.from_checks(
        "unique-normal-form",
        {"unique": not mismatches},
        {"mismatches": mismatches[:3]} if mismatches else None,
        rules=system.name,
        samples=samples,
    )
    if report.status == FAIL:
        logger.info(f"{system.name}: 정규형 불일치 {len(mismatches)}건")
    return report


def rewrite_system_for(p: Presentation, palette: Optional[Sequence[str]] = None) -> RewriteSystem:
    """합류 순서를 찾으면 그 순서로, 없으면 기본 순서로 정한 규칙 (palette가 있으면 LMT)"""
    base = search_confluent_order(p)
    return lmt_system(p, palette, base) if palette else orient(p, base)


def gb_report(system: RewriteSystem) -> VerificationReport:
    """
    규칙 합류 여부. 합류하면 이차 그뢰브너 기저가 있으므로 코쥘이라고 보고합니다.
    """
    confluent, certificate = is_confluent(system)
    return VerificationReport.from_checks(
        "gb",
        {"confluent": confluent},
        certificate.to_dict() if not confluent else None,
        operad=system.name,
        order=system.order.render(),
        rules=[rule.render() for rule in system],
        critical_monomials=len(certificate.entries),
        koszul=confluent,
    )


__all__ = [
    "bottom_leaves",
    "critical_profile",
    "verify_lmt_confluence",
    "verify_totcom_dim4",
    "verify_unique_normal_forms",
    "rewrite_system_for",
    "gb_report",
]
