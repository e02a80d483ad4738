"""
Koszul Module

이차 표현의 코쥘 쌍대, 가중치 2 페어링, 생성원 대응 동형 판정을 제공합니다.
"""

from core.koszul.dual import (
    DualGeneratorMap,
    double_dual_map,
    dual_component,
    dual_generators,
    dual_name,
    dual_symbol,
    koszul_dual,
    pairing_blocks,
)
from core.koszul.isomorphism import (
    find_isomorphism,
    find_scaling,
    presentations_isomorphic,
    render_scaled_map,
)
from core.koszul.pairing import SIGN_TABLE, PairingBlock, pairing_sign, weight2_pairing

__all__ = [
    "SIGN_TABLE",
    "PairingBlock",
    "pairing_sign",
    "weight2_pairing",
    "DualGeneratorMap",
    "dual_name",
    "dual_symbol",
    "dual_generators",
    "pairing_blocks",
    "dual_component",
    "koszul_dual",
    "double_dual_map",
    "presentations_isomorphic",
    "find_scaling",
    "find_isomorphism",
    "render_scaled_map",
]
