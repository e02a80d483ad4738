"""
Verification Report

검증기 실행 결과를 담는 데이터 클래스입니다.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

PASS = "PASS"
FAIL = "FAIL"
INFO = "INFO"


def jsonable(value: Any) -> Any:
    """Fraction, 튜플, 트리 등 JSON으로 바로 쓸 수 없는 값을 변환합니다."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {
            k if isinstance(k, str) else str(jsonable(k)): jsonable(v) for k, v in value.items()
        }
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if hasattr(value, "render"):
        return value.render()
    return str(value)


@dataclass
class VerificationReport:
    """
    검증 결과.

    Attributes:
        theorem_id: 검증기 id (예: lin-tot-dual)
        status: PASS / FAIL / INFO
        details: 계산된 값 (차원, 개수, 비교한 성분 등)
        witness: FAIL일 때 문제가 된 성분과 최소 반례
    """

    theorem_id: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "theorem": self.theorem_id,
            "status": self.status,
            "details": jsonable(self.details),
        }
        if self.witness is not None:
            payload["witness"] = jsonable(self.witness)
        return payload

    @classmethod
    def from_checks(
        cls, theorem_id: str, checks: Dict[str, bool], witness: Optional[Dict[str, Any]] = None,
        **details: Any
    ) -> "VerificationReport":
        """개별 검사 결과를 모아 PASS/FAIL 보고서를 만듭니다."""
        status = PASS if all(checks.values()) else FAIL
        return cls(theorem_id, status, {"checks": checks, **details}, witness)

    def __repr__(self) -> str:
        return f"VerificationReport({self.theorem_id}: {self.status})"


__all__ = ["PASS", "FAIL", "INFO", "VerificationReport", "jsonable"]
