"""
Rewrite Module

경로 사전식 순서, 재작성 규칙, 합류성 검사, 성분 차원 계산을 제공합니다.
"""

from core.rewrite.dimensions import (
    component_dimension,
    dimension_sequence,
    plethysm_dimension,
)
from core.rewrite.order import (
    PathLexOrder,
    compare,
    default_order,
    lmt_order,
    order_from_names,
    order_variants,
)
from core.rewrite.rules import (
    ConfluenceCertificate,
    RewriteRule,
    RewriteSystem,
    candidate_orders,
    critical_monomials,
    is_confluent,
    lmt_system,
    normal_form,
    normal_monomials,
    orient,
    reduction_chain,
    search_confluent_order,
)

__all__ = [
    "PathLexOrder",
    "compare",
    "default_order",
    "order_from_names",
    "lmt_order",
    "order_variants",
    "RewriteRule",
    "RewriteSystem",
    "ConfluenceCertificate",
    "orient",
    "critical_monomials",
    "normal_form",
    "reduction_chain",
    "normal_monomials",
    "is_confluent",
    "candidate_orders",
    "search_confluent_order",
    "lmt_system",
    "component_dimension",
    "dimension_sequence",
    "plethysm_dimension",
]
