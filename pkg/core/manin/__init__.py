"""
Manin Module

2항 이차 표현의 마닌 검은 곱·흰 곱과 슬롯 틀, Φ 매장을 제공합니다.
"""

from core.manin.frame import (
    SLOTS,
    ProductGenerator,
    TensorFrame,
    frame_coordinates,
    frame_element,
    frame_polynomial,
    phi_embed,
    phi_matrix,
    phi_preimage,
    tensor_frame,
)
from core.manin.products import black_product, manin_product, white_product

__all__ = [
    "SLOTS",
    "ProductGenerator",
    "TensorFrame",
    "tensor_frame",
    "frame_element",
    "frame_coordinates",
    "frame_polynomial",
    "phi_embed",
    "phi_matrix",
    "phi_preimage",
    "black_product",
    "white_product",
    "manin_product",
]
