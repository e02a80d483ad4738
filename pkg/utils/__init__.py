"""
Utility Module

로깅, 검증, 진행률 표시 등의 유틸리티 기능을 제공합니다.
"""

from .logging import setup_logger, get_logger
from .validators import (
    validate_source_file,
    validate_output_path,
    validate_colors,
    validate_weak_composition,
    validate_permutation,
    check_resource_guard,
    parse_color_option,
)
from .progress import progress

__all__ = [
    "setup_logger",
    "get_logger",
    "validate_source_file",
    "validate_output_path",
    "validate_colors",
    "validate_weak_composition",
    "validate_permutation",
    "check_resource_guard",
    "parse_color_option",
    "progress",
]
