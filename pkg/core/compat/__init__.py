"""
Compat Module

선형 호환, 매칭, 레벨 매칭, 완전 호환 표현과 그 검증기를 제공합니다.
"""

from core.compat.constructions import (
    VERTEX_ORDERS,
    foliation_split,
    leveled_matching,
    leveled_sigma,
    linear_compat,
    matching_admissible,
    matching_compat,
    palette_square,
    product_colors,
    swap_color_layers,
    tc_differences,
    total_compat,
)
from core.compat.sigma import (
    SigmaChoice,
    count_matching,
    enumerate_sigma_choices,
    parse_sigma,
    sigma_slots,
    validate_sigma,
)
from core.compat.verify import (
    lambda_points,
    matching_count_report,
    matching_families,
    span_key,
    verify_epi_chain,
    verify_iterate_lin,
    verify_lin_encodes,
    verify_lmt_lin_commute,
    verify_total_independent,
)

__all__ = [
    "SigmaChoice",
    "parse_sigma",
    "validate_sigma",
    "sigma_slots",
    "count_matching",
    "enumerate_sigma_choices",
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
