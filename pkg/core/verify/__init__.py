"""
Verify Module

검증 보고서와 정리 id 레지스트리를 제공합니다.
레지스트리는 core.verify.registry에서 직접 가져옵니다.
"""

from core.verify.report import FAIL, INFO, PASS, VerificationReport, jsonable

__all__ = ["PASS", "FAIL", "INFO", "VerificationReport", "jsonable"]
