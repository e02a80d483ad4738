"""
Manin Verifiers

호환 구성과 마닌 곱 사이의 항등식을 확인합니다::

    Lie_lin ● P ≅ Lin P        Com_tot ○ P ≅ Tot P
    LMT Lie ● P ≅ LMT P        LMT Com ○ P ≅ LMT P
"""

from typing import Callable, Dict, Sequence

from core.compat.constructions import leveled_matching, linear_compat, total_compat
from core.koszul.dual import koszul_dual
from core.koszul.isomorphism import find_scaling, render_scaled_map
from core.manin.frame import tensor_frame
from core.manin.products import (
    aligned_map,
    black_product,
    factor_map,
    generator_count_law,
    white_product,
)
from core.presentations.catalog import builtin
from core.presentations.closure import span_witness
from core.presentations.model import Presentation
from core.verify.report import VerificationReport
from utils.logging import get_logger

logger = get_logger(__name__)

Construction = Callable[[Presentation, Sequence[str]], Presentation]


def _unit_identity(
    theorem_id: str,
    unit: str,
    kind: str,
    construction: Construction,
    p: Presentation,
    palette: Sequence[str],
) -> VerificationReport:
    """construction(unit) ● / ○ P ≅ construction(P) 를 μ^ω⊗ν ↦ ν^ω 대응으로 확인합니다."""
    colored_unit = construction(builtin(unit), palette)
    twisted = kind == "black"
    product = (black_product if twisted else white_product)(colored_unit, p)
    expected = construction(p, palette)
    frame = tensor_frame(colored_unit, p, twisted=twisted)
    scaled = find_scaling(product, expected, factor_map(frame))
    checks = {
        "generator_count": generator_count_law(colored_unit, p, product),
        "isomorphic": scaled is not None,
    }
    details: Dict[str, object] = {
        "operad": p.name,
        "colors": list(palette),
        "product": product.name,
        "expected": expected.name,
    }
    if scaled is not None:
        details["map"] = render_scaled_map(scaled)
    witness = None
    if scaled is None:
        mapping = factor_map(frame)
        witness = span_witness(product.renamed(lambda s: mapping[s]), expected)
    logger.info(f"{theorem_id} ({p.name}): {'성립' if scaled is not None else '불성립'}")
    return VerificationReport.from_checks(theorem_id, checks, witness, **details)


def verify_black_lin(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """Lin(Lie) ● P ≅ Lin P"""
    return _unit_identity("black-lin", "Lie", "black", linear_compat, p, palette)


def verify_black_lmt(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """LMT(Lie) ● P ≅ LMT P"""
    return _unit_identity("black-lmt", "Lie", "black", leveled_matching, p, palette)


def verify_white_lmt(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """LMT(Com) ○ P ≅ LMT P"""
    return _unit_identity("white-lmt", "Com", "white", leveled_matching, p, palette)


def verify_white_tot(p: Presentation, palette: Sequence[str]) -> VerificationReport:
    """Tot(Com) ○ P ≅ Tot P"""
    return _unit_identity("white-tot", "Com", "white", total_compat, p, palette)


def verify_black_unit(p: Presentation) -> VerificationReport:
    """Lie ● P 의 관계 공간이 b⊗ν ↦ ν 아래 P의 것과 같은지"""
    lie = builtin("Lie")
    product = black_product(lie, p)
    frame = tensor_frame(lie, p, twisted=True)
    scaled = find_scaling(product, p, factor_map(frame))
    return VerificationReport.from_checks(
        "black-unit", {"isomorphic": scaled is not None}, operad=p.name
    )


def verify_duality_bridge(a: Presentation, b: Presentation) -> VerificationReport:
    """(A ● B)^! ≅ A^! ○ B^! (같은 순서의 생성원 대응)"""
    left = koszul_dual(black_product(a, b))
    right = white_product(koszul_dual(a), koszul_dual(b))
    scaled = find_scaling(left, right, aligned_map(left, right))
    details: Dict[str, object] = {"left": left.name, "right": right.name}
    if scaled is not None:
        details["map"] = render_scaled_map(scaled)
    return VerificationReport.from_checks(
        "black-white-duality", {"isomorphic": scaled is not None}, **details
    )


__all__ = [
    "verify_black_lin",
    "verify_black_lmt",
    "verify_white_lmt",
    "verify_white_tot",
    "verify_black_unit",
    "verify_duality_bridge",
]
