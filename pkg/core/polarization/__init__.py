"""
Polarization Module

트리 다항식의 준편극, 리프트, 복원과 다항식 편극(엽층 포함)을 제공합니다.
"""

from core.polarization.compositions import (
    WeakComposition,
    composition_of,
    multinomial,
    weak_compositions,
)
from core.polarization.lifts import Lift, all_lifts, lifts_of_type
from core.polarization.polynomial import (
    OrderedMonomialPoly,
    poly_evaluate,
    poly_foliation,
    poly_foliations,
    poly_full_polarization,
    poly_lifts,
    poly_polarization_expand,
    poly_polarization_family,
    poly_quasipolarize,
    poly_restitute,
    poly_span,
    poly_unified_foliation,
    to_sympy,
)
from core.polarization.trees import (
    evaluate_at,
    expand_formal,
    full_polarization,
    lambda_symbols,
    polarization_family,
    quasipolarize,
    restitute,
    strip_color_layer,
)

__all__ = [
    "WeakComposition",
    "weak_compositions",
    "multinomial",
    "composition_of",
    "Lift",
    "lifts_of_type",
    "all_lifts",
    "quasipolarize",
    "polarization_family",
    "full_polarization",
    "strip_color_layer",
    "restitute",
    "lambda_symbols",
    "expand_formal",
    "evaluate_at",
    "OrderedMonomialPoly",
    "poly_lifts",
    "poly_quasipolarize",
    "poly_restitute",
    "poly_foliation",
    "poly_foliations",
    "poly_unified_foliation",
    "poly_span",
    "poly_polarization_family",
    "poly_full_polarization",
    "poly_evaluate",
    "poly_polarization_expand",
    "to_sympy",
]
